//! Hermite interpolation, univariate and symmetric multivariate.
//!
//! The symmetric polynomials in `p - k` indeterminates `U` of degree at most
//! `k` in each variable have the basis `V[K ‖ U) / (V[P] V(U))`, one element
//! per `k`-subset `K` of the flattened root multiset `P`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::multipoly::MultiPoly;
use crate::poly::UniPoly;
use crate::roots::{RootMultiset, SubsetSelection};
use crate::scalar::{Scalar, Sign};
use crate::vandermonde::{
    confluent_det_with_variable, derivate_and_substitute, gen_vandermonde_det,
    indeterminate_vandermonde, vp_closed_form, GenVandermondeSpec,
};

/// Prescribed values `f^{[j]}(x_i)`, one per flattened node, in flattened
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteData {
    nodes: RootMultiset,
    values: Vec<Scalar>,
}

impl HermiteData {
    pub fn new(nodes: RootMultiset, values: Vec<Scalar>) -> Result<Self> {
        if values.len() != nodes.len() {
            return Err(Error::Argument(format!(
                "{} values given for {} node conditions",
                values.len(),
                nodes.len()
            )));
        }
        Ok(HermiteData { nodes, values })
    }

    /// Data keyed by `(node index, derivative index)`; every pair must
    /// appear exactly once.
    pub fn from_pairs(nodes: RootMultiset, pairs: &[((usize, usize), Scalar)]) -> Result<Self> {
        let mut slots: Vec<Option<Scalar>> = vec![None; nodes.len()];
        let offsets: Vec<usize> = nodes
            .groups()
            .iter()
            .scan(0, |acc, (_, m)| {
                let start = *acc;
                *acc += m;
                Some(start)
            })
            .collect();
        for ((i, j), v) in pairs {
            let (_, m) = nodes
                .groups()
                .get(*i)
                .ok_or_else(|| Error::Argument(format!("no node with index {i}")))?;
            if j >= m {
                return Err(Error::Argument(format!(
                    "node {i} has multiplicity {m}, no derivative {j}"
                )));
            }
            let slot = &mut slots[offsets[*i] + j];
            if slot.is_some() {
                return Err(Error::Argument(format!("duplicate value for ({i}, {j})")));
            }
            *slot = Some(v.clone());
        }
        let values = slots
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Argument("missing interpolation values".into()))?;
        Self::new(nodes, values)
    }

    /// The data `f^{[j]}(x_i)` of a given polynomial.
    pub fn sample(f: &UniPoly, nodes: RootMultiset) -> Self {
        let values = nodes
            .points()
            .iter()
            .map(|pt| f.normalized_derivative(pt.order).eval(&pt.value))
            .collect();
        HermiteData { nodes, values }
    }

    pub fn nodes(&self) -> &RootMultiset {
        &self.nodes
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }
}

/// The unique polynomial of degree below `p` matching the data.
pub fn hermite_interpolate(data: &HermiteData, var: &str) -> UniPoly {
    let p = data.nodes.len();
    let points = data.nodes.points();
    let mut acc = UniPoly::zero(var);
    for (pos, value) in data.values.iter().enumerate() {
        if value.is_zero() {
            continue;
        }
        let others: Vec<_> = points
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != pos)
            .map(|(_, x)| x.clone())
            .collect();
        // Sign (-1)^(mu_i + ... + mu_m - j - 1) equals (-1)^(p - 1 - pos).
        let coeff = Sign::parity((p - 1 - pos) as u64).apply(value.clone());
        acc = &acc + &confluent_det_with_variable(&others, var).scale(&coeff);
    }
    acc.scale(&vp_closed_form(&data.nodes).recip())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricBasisElement {
    pub subset: SubsetSelection,
    pub poly: MultiPoly,
}

fn check_vars<S: AsRef<str>>(p: &RootMultiset, k: usize, u_vars: &[S]) -> Result<Vec<String>> {
    if k > p.len() || u_vars.len() != p.len() - k {
        return Err(Error::Argument(format!(
            "need 0 <= k <= p and p - k indeterminates (p = {}, k = {k}, got {})",
            p.len(),
            u_vars.len()
        )));
    }
    Ok(u_vars.iter().map(|v| v.as_ref().to_string()).collect())
}

pub fn symmetric_basis<S: AsRef<str>>(
    p: &RootMultiset,
    k: usize,
    u_vars: &[S],
) -> Result<Vec<SymmetricBasisElement>> {
    let vars = check_vars(p, k, u_vars)?;
    let vu = indeterminate_vandermonde(&vars);
    let scale = vp_closed_form(p).recip();
    p.subsets(k)?
        .map(|subset| {
            let spec = GenVandermondeSpec::new(p.select(subset.positions()), vars.clone());
            let poly = gen_vandermonde_det(&spec)
                .exact_divide(&vu)
                .map_err(|e| {
                    Error::Invariant(format!("basis numerator not divisible by V(U): {e}"))
                })?
                .scale(&scale);
            Ok(SymmetricBasisElement { subset, poly })
        })
        .collect()
}

/// Coordinates of `g` in the symmetric basis, in subset enumeration order.
pub fn symmetric_coords<S: AsRef<str>>(
    g: &MultiPoly,
    u_vars: &[S],
    p: &RootMultiset,
    k: usize,
) -> Result<Vec<(SubsetSelection, Scalar)>> {
    let vars = check_vars(p, k, u_vars)?;
    let g = g.prune().embed(&vars).map_err(|_| {
        Error::Argument("polynomial uses variables outside the interpolation block".into())
    })?;
    if !g.is_symmetric_in(&vars) {
        return Err(Error::Argument(
            "polynomial is not symmetric in the interpolation block".into(),
        ));
    }
    if let Some(v) = vars
        .iter()
        .find(|v| g.degree_in(v).is_some_and(|d| d as usize > k))
    {
        return Err(Error::Argument(format!("degree in {v} exceeds {k}")));
    }
    let vg = &indeterminate_vandermonde(&vars) * &g;
    let sign = Sign::parity((k * (p.len() - k)) as u64);
    p.subsets(k)?
        .map(|subset| {
            let rest = p.select(&subset.complement());
            let h = derivate_and_substitute(&vg, &vars, &rest)?
                .as_constant()
                .expect("all variables substituted");
            let c = (sign * subset.signature()).apply(h);
            Ok((subset, c))
        })
        .collect()
}

/// `sum g_K * basis_K`.
pub fn reconstruct(
    coords: &[(SubsetSelection, Scalar)],
    basis: &[SymmetricBasisElement],
) -> Result<MultiPoly> {
    let mut acc = match basis.first() {
        Some(b) => MultiPoly::zero(b.poly.variables()),
        None => return Err(Error::Argument("empty basis".into())),
    };
    for (subset, c) in coords {
        let element = basis.iter().find(|b| &b.subset == subset).ok_or_else(|| {
            Error::Argument(format!("no basis element for {:?}", subset.positions()))
        })?;
        acc = &acc + &element.poly.scale(c);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double_sums::var_block;
    use crate::poly::DEFAULT_VAR;
    use crate::scalar::int;
    use crate::testutil::multiset;
    use crate::vandermonde::confluent_det;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn roots(spec: &str) -> RootMultiset {
        spec.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn univariate_examples() {
        let data = HermiteData::new(roots("1^2"), ints(&[2, 3])).unwrap();
        assert_eq!(
            hermite_interpolate(&data, "U"),
            UniPoly::from_ints("U", &[-1, 3])
        );
        let data = HermiteData::new(roots("0,1"), ints(&[0, 1])).unwrap();
        assert_eq!(
            hermite_interpolate(&data, "U"),
            UniPoly::from_ints("U", &[0, 1])
        );
        assert!(HermiteData::new(roots("0,1"), ints(&[0])).is_err());
    }

    #[test]
    fn keyed_data() {
        let nodes = roots("1^2,4");
        let pairs = [((1, 0), int(7)), ((0, 1), int(3)), ((0, 0), int(2))];
        let data = HermiteData::from_pairs(nodes.clone(), &pairs).unwrap();
        assert_eq!(data.values(), ints(&[2, 3, 7]).as_slice());
        assert!(HermiteData::from_pairs(nodes.clone(), &pairs[..2]).is_err());
        assert!(HermiteData::from_pairs(nodes.clone(), &[((1, 1), int(0))]).is_err());
        let dup = [((0, 0), int(1)), ((0, 0), int(1)), ((0, 1), int(1))];
        assert!(HermiteData::from_pairs(nodes, &dup).is_err());
    }

    #[test]
    fn basis_examples() {
        let b = symmetric_basis(&roots("5"), 0, &["U1"]).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].poly, MultiPoly::one(&["U1"]));
        let b = symmetric_basis(&roots("1^2"), 1, &["U1"]).unwrap();
        assert_eq!(b.len(), 2);
        assert!(b.iter().all(|e| e.poly.degree_in("U1").unwrap_or(0) <= 1));
        assert!(symmetric_basis(&roots("1^2"), 1, &["U1", "U2"]).is_err());
    }

    #[test]
    fn coords_examples() {
        let p = roots("5");
        let c = symmetric_coords(&MultiPoly::one(&["U1"]), &["U1"], &p, 0).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].1, int(1));
    }

    #[test]
    fn coords_reject_bad_input() {
        let p = roots("1,2,3");
        let vars = ["U1", "U2"];
        let u1 = MultiPoly::variable(&vars, "U1");
        assert!(matches!(
            symmetric_coords(&u1, &vars, &p, 1),
            Err(Error::Argument(_))
        ));
        let sq = &u1.pow(2) + &MultiPoly::variable(&vars, "U2").pow(2);
        assert!(matches!(
            symmetric_coords(&sq, &vars, &p, 1),
            Err(Error::Argument(_))
        ));
        let z = MultiPoly::variable(&["Z"], "Z");
        assert!(matches!(
            symmetric_coords(&z, &vars, &p, 1),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn dual_functionals_are_diagonal() {
        for spec in [
            "1",
            "1,2",
            "1^2",
            "1^2,3",
            "0,2^2,-1",
            "3^3,1^2",
            "1,2,3,4,5",
            "2^2,-2^2,0",
        ] {
            let p = roots(spec);
            let n = p.len();
            for k in 0..=n {
                let vars = var_block("U", n - k);
                let basis = symmetric_basis(&p, k, &vars).unwrap();
                let vu = indeterminate_vandermonde(&vars);
                for kp in p.subsets(k).unwrap() {
                    let rest = p.select(&kp.complement());
                    for b in &basis {
                        let got = derivate_and_substitute(&(&vu * &b.poly), &vars, &rest)
                            .unwrap()
                            .as_constant()
                            .unwrap();
                        if b.subset == kp {
                            let expected =
                                (Sign::parity((k * (n - k)) as u64) * kp.signature()).to_scalar();
                            assert_eq!(got, expected, "{spec} k={k}");
                        } else {
                            assert!(got.is_zero(), "{spec} k={k}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn product_of_q_values_has_vandermonde_coords() {
        let (p, q) = (roots("1^2,-1,3"), roots("2,0^1"));
        let k = 2;
        let vars = var_block("U", p.len() - k);
        let q_poly = UniPoly::from_roots(&q, "T");
        let mut g = MultiPoly::one(&vars);
        for v in &vars {
            g = &g * &MultiPoly::from_unipoly(&q_poly).rename(&[("T", v.as_str())]);
        }
        let vq = vp_closed_form(&q);
        for (subset, c) in symmetric_coords(&g, &vars, &p, k).unwrap() {
            let mut cols = q.points().to_vec();
            cols.extend(p.select(&subset.complement()));
            let sign = Sign::parity((k * (p.len() - k)) as u64) * subset.signature();
            assert_eq!(c, sign.apply(confluent_det(&cols) / &vq));
        }
    }

    /// Symmetrization of a sparse polynomial, truncated to degree `k` per
    /// variable.
    fn symmetric_poly(vars: &[String], k: u32, terms: &[(Vec<u32>, i64)]) -> MultiPoly {
        let mut acc = MultiPoly::zero(vars);
        for perm in (0..vars.len()).permutations(vars.len()) {
            for (exps, c) in terms {
                if exps.iter().any(|&e| e > k) {
                    continue;
                }
                let powers: Vec<(&str, u32)> = perm
                    .iter()
                    .zip(exps)
                    .map(|(&i, &e)| (vars[i].as_str(), e))
                    .collect();
                acc = &acc + &MultiPoly::monomial(vars, &powers, int(*c));
            }
        }
        acc
    }

    fn sparse_terms() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
        prop::collection::vec((prop::collection::vec(0u32..=4, 4), -5i64..=5), 0..5)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn univariate_round_trip(nodes in multiset(1, 6), coeffs in prop::collection::vec(-9i64..=9, 0..6)) {
            let coeffs: Vec<i64> = coeffs.into_iter().take(nodes.len()).collect();
            let f = UniPoly::from_ints("U", &coeffs);
            let data = HermiteData::sample(&f, nodes);
            prop_assert_eq!(hermite_interpolate(&data, "U"), f);
        }

        #[test]
        fn interpolation_matches_conditions(nodes in multiset(1, 6), seed in prop::collection::vec(-9i64..=9, 6)) {
            let values = ints(&seed[..nodes.len()]);
            let data = HermiteData::new(nodes.clone(), values.clone()).unwrap();
            let f = hermite_interpolate(&data, "U");
            prop_assert!(f.degree().is_none_or(|d| d < nodes.len()));
            let sampled = HermiteData::sample(&f, nodes);
            prop_assert_eq!(sampled.values(), values.as_slice());
        }

        #[test]
        fn interpolation_is_linear(nodes in multiset(1, 5), a in prop::collection::vec(-9i64..=9, 5), b in prop::collection::vec(-9i64..=9, 5), c in -4i64..=4) {
            let n = nodes.len();
            let (va, vb) = (ints(&a[..n]), ints(&b[..n]));
            let sum: Vec<Scalar> = va.iter().zip(&vb).map(|(x, y)| x * int(c) + y).collect();
            let interp = |v: Vec<Scalar>| hermite_interpolate(&HermiteData::new(nodes.clone(), v).unwrap(), "U");
            prop_assert_eq!(interp(sum), &interp(va).scale(&int(c)) + &interp(vb));
        }

        #[test]
        fn multivariate_round_trip(p in multiset(1, 4), k in 0usize..4, terms in sparse_terms()) {
            prop_assume!(k <= p.len());
            let vars = var_block("U", p.len() - k);
            let terms: Vec<(Vec<u32>, i64)> = terms.into_iter().map(|(e, c)| (e[..vars.len()].to_vec(), c)).collect();
            let g = symmetric_poly(&vars, k as u32, &terms);
            let coords = symmetric_coords(&g, &vars, &p, k).unwrap();
            let basis = symmetric_basis(&p, k, &vars).unwrap();
            for b in &basis {
                prop_assert!(b.poly.is_symmetric_in(&vars));
                prop_assert!(vars.iter().all(|v| b.poly.degree_in(v).unwrap_or(0) as usize <= k));
            }
            prop_assert_eq!(reconstruct(&coords, &basis).unwrap(), g);
        }

        #[test]
        fn top_k_reduces_to_univariate(nodes in multiset(1, 5), seed in prop::collection::vec(-9i64..=9, 5)) {
            let n = nodes.len();
            let data = HermiteData::new(nodes.clone(), ints(&seed[..n])).unwrap();
            let f = hermite_interpolate(&data, DEFAULT_VAR);
            let g = MultiPoly::from_unipoly(&f);
            let coords = symmetric_coords(&g, &[DEFAULT_VAR], &nodes, n - 1).unwrap();
            let basis = symmetric_basis(&nodes, n - 1, &[DEFAULT_VAR]).unwrap();
            prop_assert_eq!(reconstruct(&coords, &basis).unwrap(), g);
            for (subset, c) in coords {
                let pos = subset.complement()[0];
                prop_assert_eq!(c, Sign::parity((n - 1 - pos) as u64).apply(data.values()[pos].clone()));
            }
        }
    }
}
