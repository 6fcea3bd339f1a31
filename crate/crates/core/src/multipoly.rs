//! Sparse multivariate polynomials with named variables.
//!
//! Variables are kept sorted by name, so exponent vectors compare in the
//! lexicographic monomial order with the first name most significant. That
//! order drives [`MultiPoly::exact_divide`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::scalar::{self, binom_scalar, Scalar};

pub type Exponents = Vec<u32>;

#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, Scalar>,
}

fn sorted_vars<S: AsRef<str>>(vars: &[S]) -> Vec<String> {
    let mut v: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
    v.sort();
    v.dedup();
    v
}

impl MultiPoly {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        MultiPoly {
            vars: sorted_vars(vars),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: Scalar) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn one<S: AsRef<str>>(vars: &[S]) -> Self {
        Self::constant(vars, Scalar::one())
    }

    /// `c * prod name^e`; every name must appear in `vars`.
    pub fn monomial<S: AsRef<str>>(vars: &[S], powers: &[(&str, u32)], c: Scalar) -> Self {
        let mut p = Self::zero(vars);
        if c.is_zero() {
            return p;
        }
        let mut exp = vec![0; p.vars.len()];
        for (name, e) in powers {
            let i = p
                .index_of(name)
                .unwrap_or_else(|| panic!("unknown variable {name}"));
            exp[i] += e;
        }
        p.terms.insert(exp, c);
        p
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn variable<S: AsRef<str>>(vars: &[S], name: &str) -> Self {
        Self::monomial(vars, &[(name, 1)], Scalar::one())
    }

    pub fn from_unipoly(p: &UniPoly) -> Self {
        let mut out = Self::zero(&[p.var()]);
        for (d, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out.terms.insert(vec![d as u32], c.clone());
            }
        }
        out
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.binary_search_by(|v| v.as_str().cmp(name)).ok()
    }

    /// Constant term when the polynomial has no variable dependence.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (e, c) = self.terms.iter().next()?;
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Re-expresses the polynomial over a superset of its variables.
    pub fn embed<S: AsRef<str>>(&self, vars: &[S]) -> Result<Self> {
        let target = sorted_vars(vars);
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                target
                    .binary_search(v)
                    .map_err(|_| Error::Argument(format!("variable {v} missing from target set")))
            })
            .collect::<Result<_>>()?;
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0; target.len()];
                for (i, &x) in e.iter().enumerate() {
                    ne[map[i]] = x;
                }
                (ne, c.clone())
            })
            .collect();
        Ok(MultiPoly {
            vars: target,
            terms,
        })
    }

    fn unify(a: &MultiPoly, b: &MultiPoly) -> (MultiPoly, MultiPoly) {
        if a.vars == b.vars {
            return (a.clone(), b.clone());
        }
        let all: Vec<&str> = a.vars.iter().chain(&b.vars).map(String::as_str).collect();
        (
            a.embed(&all).expect("superset"),
            b.embed(&all).expect("superset"),
        )
    }

    /// Drops variables that no term uses.
    pub fn prune(&self) -> Self {
        let used: Vec<usize> = (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|e| e[i] > 0))
            .collect();
        let vars = used.iter().map(|&i| self.vars[i].clone()).collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (used.iter().map(|&i| e[i]).collect(), c.clone()))
            .collect();
        MultiPoly { vars, terms }
    }

    fn add_term(&mut self, exp: Exponents, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.vars), |acc, _| &acc * self)
    }

    pub fn degree_in(&self, var: &str) -> Option<u32> {
        let i = self.index_of(var)?;
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// `(1/i!) d^i/dvar^i`. A variable outside the ambient set is an
    /// argument error.
    pub fn normalized_derivative(&self, var: &str, i: usize) -> Result<Self> {
        let v = self.index_of(var).ok_or_else(|| {
            Error::Argument(format!("{var} is not a variable of this polynomial"))
        })?;
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if (e[v] as usize) < i {
                continue;
            }
            let mut ne = e.clone();
            ne[v] -= i as u32;
            out.add_term(ne, c * binom_scalar(e[v] as u64, i as i64));
        }
        Ok(out)
    }

    /// Replaces `var` by a value; the variable leaves the ambient set.
    pub fn substitute(&self, var: &str, value: &Scalar) -> Result<Self> {
        let v = self.index_of(var).ok_or_else(|| {
            Error::Argument(format!("{var} is not a variable of this polynomial"))
        })?;
        let mut vars = self.vars.clone();
        vars.remove(v);
        let mut out = MultiPoly {
            vars,
            terms: BTreeMap::new(),
        };
        let mut powers: Vec<Scalar> = vec![Scalar::one()];
        for (e, c) in &self.terms {
            let d = e[v] as usize;
            while powers.len() <= d {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut ne = e.clone();
            ne.remove(v);
            out.add_term(ne, c * &powers[d]);
        }
        Ok(out)
    }

    pub fn substitute_all(&self, values: &[(&str, Scalar)]) -> Result<Self> {
        values
            .iter()
            .try_fold(self.clone(), |acc, (v, x)| acc.substitute(v, x))
    }

    /// Renames variables; names absent from `map` are kept.
    pub fn rename(&self, map: &[(&str, &str)]) -> Self {
        let new_names: Vec<String> = self
            .vars
            .iter()
            .map(|v| {
                map.iter()
                    .find(|(from, _)| from == v)
                    .map_or(v.clone(), |(_, to)| to.to_string())
            })
            .collect();
        assert!(new_names.iter().all_unique(), "renaming merges variables");
        let target = sorted_vars(&new_names);
        let perm: Vec<usize> = new_names
            .iter()
            .map(|n| target.binary_search(n).unwrap())
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0; e.len()];
                for (i, &x) in e.iter().enumerate() {
                    ne[perm[i]] = x;
                }
                (ne, c.clone())
            })
            .collect();
        MultiPoly {
            vars: target,
            terms,
        }
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: &str, b: &str) -> Self {
        self.rename(&[(a, b), (b, a)])
    }

    /// Invariant under every transposition of the listed variables.
    pub fn is_symmetric_in<S: AsRef<str>>(&self, vars: &[S]) -> bool {
        let (base, _) = Self::unify(self, &Self::zero(vars));
        vars.windows(2)
            .all(|w| base.swap_vars(w[0].as_ref(), w[1].as_ref()) == base)
    }

    /// The polynomial in the remaining variables multiplying
    /// `prod var^exponent`.
    pub fn coefficient_of(&self, assignments: &[(&str, u32)]) -> Result<Self> {
        let idx: Vec<(usize, u32)> = assignments
            .iter()
            .map(|(v, e)| {
                self.index_of(v).map(|i| (i, *e)).ok_or_else(|| {
                    Error::Argument(format!("{v} is not a variable of this polynomial"))
                })
            })
            .collect::<Result<_>>()?;
        let keep: Vec<usize> = (0..self.vars.len())
            .filter(|i| idx.iter().all(|(j, _)| j != i))
            .collect();
        let vars = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| idx.iter().all(|&(i, x)| e[i] == x))
            .map(|(e, c)| (keep.iter().map(|&i| e[i]).collect(), c.clone()))
            .collect();
        Ok(MultiPoly { vars, terms })
    }

    /// Quotient of an exact division, by repeated cancellation of the
    /// lexicographically leading term.
    pub fn exact_divide(&self, divisor: &MultiPoly) -> Result<Self> {
        let (mut rem, g) = Self::unify(self, divisor);
        let (lead_exp, lead_c) = g.terms.iter().next_back().ok_or(Error::DivisionByZero)?;
        let (lead_exp, lead_inv) = (lead_exp.clone(), lead_c.recip());
        let mut quot = Self::zero(&rem.vars);
        while let Some((e, c)) = rem.terms.iter().next_back() {
            if e.iter().zip(&lead_exp).any(|(a, b)| a < b) {
                return Err(Error::NotDivisible(format!(
                    "leading monomial of the remainder is not a multiple of the divisor's, {} terms left",
                    rem.terms.len()
                )));
            }
            let te: Exponents = e.iter().zip(&lead_exp).map(|(a, b)| a - b).collect();
            let tc = c * &lead_inv;
            for (ge, gc) in &g.terms {
                let me = ge.iter().zip(&te).map(|(a, b)| a + b).collect();
                rem.add_term(me, -(gc * &tc));
            }
            quot.add_term(te, tc);
        }
        Ok(quot)
    }

    /// Views a polynomial in at most the one variable `var` as univariate.
    pub fn to_unipoly(&self, var: &str) -> Result<UniPoly> {
        let p = self.prune();
        match p.vars.as_slice() {
            [] => Ok(UniPoly::constant(var, p.as_constant().unwrap())),
            [v] if v == var => {
                let deg = p.degree_in(var).unwrap_or(0) as usize;
                let mut coeffs = vec![Scalar::zero(); deg + 1];
                for (e, c) in &p.terms {
                    coeffs[e[0] as usize] = c.clone();
                }
                Ok(UniPoly::new(var, coeffs))
            }
            other => Err(Error::Argument(format!(
                "polynomial depends on {other:?}, not only {var}"
            ))),
        }
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::unify(self, other);
        a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = MultiPoly::unify(self, rhs);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = MultiPoly::unify(self, rhs);
        for (e, c) in b.terms {
            a.add_term(e, -c);
        }
        a
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, b) = MultiPoly::unify(self, rhs);
        let mut out = MultiPoly::zero(&a.vars);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Scalar::one())
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Terms in decreasing lexicographic order, e.g. `-U1*U2^2 + 3`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            match (n, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = scalar::abs(c);
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{x}", self.vars[i])
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else if scalar::is_integer(&mag) {
                write!(f, "{mag}*{}", factors.join("*"))?;
            } else {
                write!(f, "({mag})*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use proptest::prelude::*;

    const XY: [&str; 2] = ["X", "Y"];

    fn x() -> MultiPoly {
        MultiPoly::variable(&XY, "X")
    }

    fn y() -> MultiPoly {
        MultiPoly::variable(&XY, "Y")
    }

    #[test]
    fn coefficient_extraction() {
        let f = &(&x().pow(2) * &y()) + &(&x() * &y());
        assert_eq!(
            f.coefficient_of(&[("X", 2)]).unwrap(),
            MultiPoly::variable(&["Y"], "Y")
        );
        assert!(f.coefficient_of(&[("X", 5)]).unwrap().is_zero());
        let v =
            &MultiPoly::variable(&["U1", "U2"], "U2") - &MultiPoly::variable(&["U1", "U2"], "U1");
        assert_eq!(
            v.coefficient_of(&[("U2", 1)]).unwrap(),
            MultiPoly::one(&["U1"])
        );
        assert!(f.coefficient_of(&[("Z", 1)]).is_err());
    }

    #[test]
    fn exact_division() {
        let f = &x().pow(2) - &y().pow(2);
        let g = &x() - &y();
        assert_eq!(f.exact_divide(&g).unwrap(), &x() + &y());
        assert!(MultiPoly::zero(&XY).exact_divide(&g).unwrap().is_zero());
        let h = &x().pow(2) + &y();
        assert!(matches!(h.exact_divide(&g), Err(Error::NotDivisible(_))));
        assert_eq!(
            f.exact_divide(&MultiPoly::zero(&XY)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn derivative_and_substitution() {
        let f = &x().pow(3).scale(&int(2)) + &(&x() * &y());
        let d = f.normalized_derivative("X", 2).unwrap();
        assert_eq!(d, x().scale(&int(6)));
        assert_eq!(f.normalized_derivative("X", 0).unwrap(), f);
        assert!(f.normalized_derivative("Z", 1).is_err());
        let s = f.substitute("X", &int(2)).unwrap();
        assert_eq!(s.variables(), &["Y".to_string()]);
        assert_eq!(
            s,
            &MultiPoly::constant(&["Y"], int(16))
                + &MultiPoly::variable(&["Y"], "Y").scale(&int(2))
        );
    }

    #[test]
    fn symmetry_and_renaming() {
        let f = &(&x() * &y()) + &x();
        assert!(!f.is_symmetric_in(&XY));
        assert!((&(&x() * &y()) + &(&x() + &y())).is_symmetric_in(&XY));
        assert_eq!(f.swap_vars("X", "Y"), &(&x() * &y()) + &y());
        let r = x().rename(&[("X", "U")]);
        assert_eq!(r.variables(), &["U".to_string(), "Y".to_string()]);
    }

    #[test]
    fn equality_ignores_unused_variables() {
        let a = MultiPoly::constant(&["X"], int(3));
        let b = MultiPoly::constant(&["Y", "Z"], int(3));
        assert_eq!(a, b);
        assert_ne!(x(), y());
    }

    #[test]
    fn univariate_views() {
        let p = UniPoly::new("U", vec![int(3), int(-1)]);
        let m = MultiPoly::from_unipoly(&p);
        assert_eq!(m.to_unipoly("U").unwrap(), p);
        assert_eq!(
            MultiPoly::constant(&["V"], int(2)).to_unipoly("U").unwrap(),
            UniPoly::constant("U", int(2))
        );
        assert!(x().to_unipoly("U").is_err());
        assert_eq!(m.to_string(), "-U + 3");
        assert_eq!(
            (&x().pow(2) * &y()).scale(&rat(1, 2)).to_string(),
            "(1/2)*X^2*Y"
        );
    }

    fn poly_strategy() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec(((0u32..4, 0u32..4, 0u32..3), -5i64..=5), 0..6).prop_map(|terms| {
            let vars = ["X", "Y", "Z"];
            terms
                .into_iter()
                .fold(MultiPoly::zero(&vars), |acc, ((a, b, c), k)| {
                    &acc + &MultiPoly::monomial(&vars, &[("X", a), ("Y", b), ("Z", c)], int(k))
                })
        })
    }

    proptest! {
        #[test]
        fn division_undoes_multiplication(f in poly_strategy(), g in poly_strategy()) {
            prop_assume!(!g.is_zero());
            let prod = &f * &g;
            prop_assert_eq!(prod.exact_divide(&g).unwrap(), f);
        }

        #[test]
        fn ring_laws(f in poly_strategy(), g in poly_strategy(), h in poly_strategy()) {
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&(&f + &g) - &g, f.clone());
            prop_assert_eq!(&f * &g, &g * &f);
        }

        #[test]
        fn derivatives_compose(f in poly_strategy(), i in 0usize..4, j in 0usize..4) {
            let lhs = f.normalized_derivative("X", i).unwrap().normalized_derivative("X", j).unwrap();
            let rhs = f.normalized_derivative("X", i + j).unwrap().scale(&binom_scalar((i + j) as u64, i as i64));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
