//! Dense univariate polynomials over exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::roots::RootMultiset;
use crate::scalar::{self, binom_scalar, Scalar};

pub const DEFAULT_VAR: &str = "U";

/// `coeffs[i]` is the coefficient of `var^i`; no trailing zeros, so the zero
/// polynomial has no coefficients and no degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    var: String,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(var: impl Into<String>, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly {
            var: var.into(),
            coeffs,
        }
    }

    pub fn from_ints(var: impl Into<String>, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| scalar::int(c)).collect())
    }

    pub fn zero(var: impl Into<String>) -> Self {
        Self::new(var, Vec::new())
    }

    pub fn one(var: impl Into<String>) -> Self {
        Self::constant(var, Scalar::one())
    }

    pub fn constant(var: impl Into<String>, c: Scalar) -> Self {
        Self::new(var, vec![c])
    }

    pub fn monomial(var: impl Into<String>, c: Scalar, degree: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(var, coeffs)
    }

    /// `var - x`.
    pub fn linear_root(var: impl Into<String>, x: &Scalar) -> Self {
        Self::new(var, vec![-x.clone(), Scalar::one()])
    }

    /// Monic polynomial with the given roots and multiplicities.
    pub fn from_roots(roots: &RootMultiset, var: &str) -> Self {
        roots.points().iter().fold(Self::one(var), |acc, p| {
            &acc * &Self::linear_root(var, &p.value)
        })
    }

    /// Monic polynomial vanishing at each listed value.
    pub fn from_root_values(values: &[Scalar], var: &str) -> Self {
        values
            .iter()
            .fold(Self::one(var), |acc, x| &acc * &Self::linear_root(var, x))
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn with_var(mut self, var: impl Into<String>) -> Self {
        self.var = var.into();
        self
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(
            self.var.clone(),
            self.coeffs.iter().map(|a| a * c).collect(),
        )
    }

    pub fn monic(&self) -> Option<Self> {
        let lc = self.leading_coeff()?.clone();
        Some(self.scale(&lc.recip()))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.var.clone()), |acc, _| &acc * self)
    }

    /// `(1/i!) d^i/dvar^i`, computed coefficientwise as `binom(e, i)`.
    pub fn normalized_derivative(&self, i: usize) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(i)
            .map(|(e, c)| c * binom_scalar(e as u64, i as i64))
            .collect();
        Self::new(self.var.clone(), coeffs)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dq = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dq].recip();
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n <= dq {
            return Ok((Self::zero(self.var.clone()), self.clone()));
        }
        let mut quot = vec![Scalar::zero(); n - dq];
        for i in (0..n - dq).rev() {
            let c = &rem[i + dq] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (t, d) in divisor.coeffs.iter().enumerate() {
                rem[i + t] -= &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(dq);
        Ok((
            Self::new(self.var.clone(), quot),
            Self::new(self.var.clone(), rem),
        ))
    }

    pub fn rem(&self, divisor: &UniPoly) -> Result<UniPoly> {
        Ok(self.divrem(divisor)?.1)
    }

    fn combine_var(&self, other: &UniPoly) -> String {
        if self.var == other.var || other.degree().unwrap_or(0) == 0 {
            self.var.clone()
        } else if self.degree().unwrap_or(0) == 0 {
            other.var.clone()
        } else {
            panic!("mixing polynomials in {} and {}", self.var, other.var)
        }
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        UniPoly::new(self.combine_var(rhs), coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        UniPoly::new(self.combine_var(rhs), coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let var = self.combine_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(var);
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(var, coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.var.clone(), self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: UniPoly) -> UniPoly {
        &self + &rhs
    }
}

impl Sub for UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: UniPoly) -> UniPoly {
        &self - &rhs
    }
}

impl Mul for UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: UniPoly) -> UniPoly {
        &self * &rhs
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

/// Descending degree with explicit signs, e.g. `U^2 - 3U + 2`, `-U + 3`,
/// `(1/2)U - 3/4`.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = scalar::abs(c);
            if d == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                if scalar::is_integer(&mag) {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            write!(f, "{}", self.var)?;
            if d > 1 {
                write!(f, "^{d}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::pi_product;
    use crate::scalar::{int, rat};
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_ints(DEFAULT_VAR, coeffs)
    }

    fn roots(spec: &str) -> RootMultiset {
        spec.parse().unwrap()
    }

    #[test]
    fn from_roots_examples() {
        assert_eq!(UniPoly::from_roots(&roots("1^2"), "U"), p(&[1, -2, 1]));
        assert_eq!(UniPoly::from_roots(&RootMultiset::empty(), "U"), p(&[1]));
        assert_eq!(UniPoly::from_roots(&roots("1,2"), "U"), p(&[2, -3, 1]));
    }

    #[test]
    fn normalized_derivative_examples() {
        assert_eq!(p(&[0, 0, 0, 1]).normalized_derivative(2), p(&[0, 3]));
        let f = p(&[2, -3, 1]);
        assert_eq!(f.normalized_derivative(0), f);
        assert_eq!(f.normalized_derivative(1).eval(&int(3)), int(3));
        assert!(f.normalized_derivative(3).is_zero());
    }

    #[test]
    fn divrem_examples() {
        let (q, r) = p(&[2, -3, 1]).divrem(&p(&[-3, 1])).unwrap();
        assert_eq!(q, p(&[0, 1]));
        assert_eq!(r, p(&[2]));
        let f = p(&[2, -3, 1]);
        let (q, r) = f.divrem(&f).unwrap();
        assert_eq!((q, r), (p(&[1]), UniPoly::zero("U")));
        let (q, r) = p(&[1, 1]).divrem(&p(&[0, 0, 1])).unwrap();
        assert_eq!((q, r), (UniPoly::zero("U"), p(&[1, 1])));
        assert_eq!(
            p(&[1]).divrem(&UniPoly::zero("U")),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn degree_of_zero_is_absent() {
        assert_eq!(UniPoly::zero("U").degree(), None);
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[3, -1]).to_string(), "-U + 3");
        assert_eq!(p(&[-3, 1]).to_string(), "U - 3");
        assert_eq!(p(&[-1, 3]).to_string(), "3U - 1");
        assert_eq!(p(&[2, -3, 1]).to_string(), "U^2 - 3U + 2");
        assert_eq!(p(&[-2]).to_string(), "-2");
        assert_eq!(UniPoly::zero("U").to_string(), "0");
        assert_eq!(
            UniPoly::new("U", vec![rat(-3, 4), rat(1, 2)]).to_string(),
            "(1/2)U - 3/4"
        );
        assert_eq!(
            UniPoly::new("U", vec![int(0), rat(-1, 2)]).to_string(),
            "-(1/2)U"
        );
    }

    fn poly_strategy(max_deg: usize) -> impl Strategy<Value = UniPoly> {
        prop::collection::vec((-9i64..=9, 1i64..=4), 0..=max_deg + 1)
            .prop_map(|v| UniPoly::new("U", v.into_iter().map(|(a, b)| rat(a, b)).collect()))
    }

    fn distinct_values(max: usize) -> impl Strategy<Value = Vec<Scalar>> {
        prop::collection::btree_set(-9i64..=9, 0..=max)
            .prop_map(|s| s.into_iter().map(int).collect())
    }

    proptest! {
        #[test]
        fn from_roots_is_multiplicative(a in distinct_values(5), b in distinct_values(5)) {
            let b: Vec<_> = b.into_iter().filter(|x| !a.contains(x)).collect();
            let mut ab = a.clone();
            ab.extend(b.iter().cloned());
            let lhs = UniPoly::from_roots(&RootMultiset::simple(ab).unwrap(), "U");
            let rhs = &UniPoly::from_roots(&RootMultiset::simple(a).unwrap(), "U")
                * &UniPoly::from_roots(&RootMultiset::simple(b).unwrap(), "U");
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn normalized_derivatives_compose(f in poly_strategy(8), i in 0usize..5, j in 0usize..5) {
            let lhs = f.normalized_derivative(i).normalized_derivative(j);
            let rhs = f.normalized_derivative(i + j).scale(&binom_scalar((i + j) as u64, i as i64));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn divrem_reconstructs(f in poly_strategy(8), g in poly_strategy(5)) {
            prop_assume!(!g.is_zero());
            let (q, r) = f.divrem(&g).unwrap();
            prop_assert_eq!(&(&q * &g) + &r, f);
            prop_assert!(r.degree().is_none_or(|d| d < g.degree().unwrap()));
        }

        #[test]
        fn pi_product_is_a_resultant(a in distinct_values(5), b in distinct_values(5)) {
            let qb = UniPoly::from_root_values(&b, "U");
            let via_q = a.iter().fold(Scalar::one(), |acc, x| acc * qb.eval(x));
            prop_assert_eq!(pi_product(&a, &b), via_q);
            let pa = UniPoly::from_root_values(&a, "U");
            let via_p = b.iter().fold(Scalar::one(), |acc, y| acc * pa.eval(y));
            let sign = scalar::Sign::parity((a.len() * b.len()) as u64);
            prop_assert_eq!(pi_product(&a, &b), sign.apply(via_p));
        }

        /// P^[j'](y) = -R^[j'](y) at every root y of Q, below its multiplicity.
        #[test]
        fn negated_remainder_matches_derivatives_at_roots(
            groups in prop::collection::btree_map(-6i64..=6, 1usize..=3, 1..=3),
            f in poly_strategy(9),
        ) {
            let q_roots = RootMultiset::new(groups.into_iter().map(|(x, m)| (int(x), m)).collect()).unwrap();
            let q = UniPoly::from_roots(&q_roots, "U");
            let r = -&f.rem(&q).unwrap();
            for (y, nu) in q_roots.groups() {
                for jp in 0..*nu {
                    prop_assert_eq!(
                        f.normalized_derivative(jp).eval(y),
                        -r.normalized_derivative(jp).eval(y)
                    );
                }
            }
        }
    }
}
