//! Sylvester double sums.
//!
//! `sylv_general` is the main path: a signed sum over root subsets of
//! products of generalized Vandermonde determinants. `sylv_classical` is the
//! textbook simple-root formula, kept as an independent oracle.

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::multipoly::MultiPoly;
use crate::poly::{UniPoly, DEFAULT_VAR};
use crate::roots::{pi_product, RootMultiset, RootPoint, SubsetSelection};
use crate::scalar::{self, pow_signed, Scalar};
use crate::vandermonde::{
    confluent_det, confluent_det_with_variable, gen_vandermonde_det, indeterminate_vandermonde,
    vp_closed_form, GenVandermondeSpec,
};

pub use crate::symbolic::{symbolic_f, symbolic_s};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DoubleSumIndex {
    pub k: usize,
    pub l: usize,
}

impl DoubleSumIndex {
    pub fn new(k: usize, l: usize) -> Self {
        DoubleSumIndex { k, l }
    }

    pub fn j(&self) -> usize {
        self.k + self.l
    }
}

/// A polynomial given by its leading coefficient and its rational roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPoly {
    pub lc: Scalar,
    pub roots: RootMultiset,
}

impl SplitPoly {
    pub fn new(lc: Scalar, roots: RootMultiset) -> Result<Self> {
        if lc.is_zero() {
            return Err(Error::Argument(
                "leading coefficient must be nonzero".into(),
            ));
        }
        Ok(SplitPoly { lc, roots })
    }

    pub fn monic(roots: RootMultiset) -> Self {
        SplitPoly {
            lc: Scalar::one(),
            roots,
        }
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn to_poly(&self, var: &str) -> UniPoly {
        UniPoly::from_roots(&self.roots, var).scale(&self.lc)
    }
}

fn distinct(values: &[Scalar]) -> bool {
    values.iter().all_unique()
}

/// Simple-root double sum from root differences.
pub fn sylv_classical(
    p_roots: &[Scalar],
    q_roots: &[Scalar],
    idx: DoubleSumIndex,
) -> Result<UniPoly> {
    if !distinct(p_roots) || !distinct(q_roots) {
        return Err(Error::Domain(
            "the classical formula needs pairwise distinct roots".into(),
        ));
    }
    let (p, q) = (p_roots.len(), q_roots.len());
    let mut acc = UniPoly::zero(DEFAULT_VAR);
    if idx.k > p || idx.l > q {
        return Ok(acc);
    }
    let pick = |v: &[Scalar], pos: &[usize]| -> Vec<Scalar> {
        pos.iter().map(|&i| v[i].clone()).collect()
    };
    for kp in (0..p).combinations(idx.k) {
        let (k, pk) = (
            pick(p_roots, &kp),
            pick(p_roots, &scalar::complement(p, &kp)),
        );
        for lp in (0..q).combinations(idx.l) {
            let (l, ql) = (
                pick(q_roots, &lp),
                pick(q_roots, &scalar::complement(q, &lp)),
            );
            let num = pi_product(&k, &l) * pi_product(&pk, &ql);
            let den = pi_product(&k, &pk) * pi_product(&l, &ql);
            let u_part = UniPoly::from_root_values(&k, DEFAULT_VAR)
                * UniPoly::from_root_values(&l, DEFAULT_VAR);
            acc = acc + u_part.scale(&(num / den));
        }
    }
    Ok(acc)
}

fn concat(a: Vec<RootPoint>, b: Vec<RootPoint>) -> Vec<RootPoint> {
    let mut out = a;
    out.extend(b);
    out
}

/// Visits every `(K, L)` pair with `s_K s_L V[(Q\L) ‖ (P\K)]`, skipping
/// vanishing terms.
fn for_each_term(
    p: &RootMultiset,
    q: &RootMultiset,
    idx: DoubleSumIndex,
    mut visit: impl FnMut(Scalar, Vec<RootPoint>),
) -> Result<()> {
    let q_subsets: Vec<SubsetSelection> = q.subsets(idx.l)?.collect();
    for ks in p.subsets(idx.k)? {
        let p_rest = p.select(&ks.complement());
        let k_pts = p.select(ks.positions());
        for ls in &q_subsets {
            let left = confluent_det(&concat(q.select(&ls.complement()), p_rest.clone()));
            if left.is_zero() {
                continue;
            }
            let weight = (ks.signature() * ls.signature()).apply(left);
            visit(weight, concat(q.select(ls.positions()), k_pts.clone()));
        }
    }
    Ok(())
}

/// Double sum of two monic polynomials given by root multisets.
pub fn sylv_general(p: &RootMultiset, q: &RootMultiset, idx: DoubleSumIndex) -> UniPoly {
    let mut acc = UniPoly::zero(DEFAULT_VAR);
    if idx.k > p.len() || idx.l > q.len() {
        return acc;
    }
    for_each_term(p, q, idx, |w, lk| {
        acc = &acc + &confluent_det_with_variable(&lk, DEFAULT_VAR).scale(&w);
    })
    .expect("subset sizes checked");
    let denom = vp_closed_form(p) * vp_closed_form(q);
    acc.scale(&denom.recip())
}

/// Double sum of arbitrary split polynomials:
/// `lc(P)^(q-j) lc(Q)^(p-j)` times the double sum of their monic parts.
pub fn sylv_nonmonic(p: &SplitPoly, q: &SplitPoly, idx: DoubleSumIndex) -> Result<UniPoly> {
    let (pd, qd, j) = (p.degree() as i64, q.degree() as i64, idx.j() as i64);
    if j > pd {
        return Err(Error::Domain(format!(
            "index j = {j} exceeds deg P = {pd} for non-monic input"
        )));
    }
    if p.lc.is_zero() || q.lc.is_zero() {
        return Err(Error::Argument(
            "leading coefficient must be nonzero".into(),
        ));
    }
    let factor = pow_signed(&p.lc, qd - j)? * pow_signed(&q.lc, pd - j)?;
    Ok(sylv_general(&p.roots, &q.roots, idx).scale(&factor))
}

/// Multi double sum in the indeterminates `u_vars` (`|u_vars| = p - j`).
pub fn msylv<S: AsRef<str>>(
    p: &RootMultiset,
    q: &RootMultiset,
    idx: DoubleSumIndex,
    u_vars: &[S],
) -> Result<MultiPoly> {
    let names: Vec<String> = u_vars.iter().map(|v| v.as_ref().to_string()).collect();
    if idx.j() > p.len() || names.len() != p.len() - idx.j() {
        return Err(Error::Argument(format!(
            "need p - j = {} indeterminates, got {}",
            p.len() as i64 - idx.j() as i64,
            names.len()
        )));
    }
    if !names.iter().all_unique() {
        return Err(Error::Argument("indeterminates must be distinct".into()));
    }
    let mut acc = MultiPoly::zero(&names);
    if idx.l > q.len() {
        return Ok(acc);
    }
    for_each_term(p, q, idx, |w, lk| {
        let spec = GenVandermondeSpec::new(lk, names.clone());
        acc = &acc + &gen_vandermonde_det(&spec).scale(&w);
    })?;
    let quotient = acc
        .exact_divide(&indeterminate_vandermonde(&names))
        .map_err(|e| Error::Invariant(format!("multi double sum not divisible by V(U): {e}")))?;
    let denom = vp_closed_form(p) * vp_closed_form(q);
    Ok(quotient.scale(&denom.recip()))
}

/// Extracts the single-variable double sum from a multi double sum: the
/// coefficient of `prod U'^j` over all indeterminates but the first.
pub fn msylv_to_sylv<S: AsRef<str>>(m: &MultiPoly, u_vars: &[S], j: usize) -> Result<UniPoly> {
    let first = u_vars
        .first()
        .ok_or_else(|| Error::Argument("need at least one indeterminate".into()))?
        .as_ref();
    let rest: Vec<(&str, u32)> = u_vars[1..].iter().map(|v| (v.as_ref(), j as u32)).collect();
    Ok(m.coefficient_of(&rest)?
        .to_unipoly(first)?
        .with_var(DEFAULT_VAR))
}

/// Names `prefix1, ..., prefixN`.
pub fn var_block(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{binom_scalar, int, Sign};
    use crate::testutil::{multiset, simple_roots};
    use crate::vandermonde::derivate_and_substitute;
    use proptest::prelude::*;

    fn roots(spec: &str) -> RootMultiset {
        spec.parse().unwrap()
    }

    fn u(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_ints(DEFAULT_VAR, coeffs)
    }

    #[test]
    fn classical_examples() {
        let (p, q) = ([int(1), int(2)], [int(3)]);
        assert_eq!(
            sylv_classical(&p, &q, DoubleSumIndex::new(1, 0)).unwrap(),
            u(&[3, -1])
        );
        assert_eq!(
            sylv_classical(&p, &q, DoubleSumIndex::new(0, 0)).unwrap(),
            u(&[2])
        );
        assert!(sylv_classical(&p, &q, DoubleSumIndex::new(3, 0))
            .unwrap()
            .is_zero());
        assert!(matches!(
            sylv_classical(&[int(1), int(1)], &q, DoubleSumIndex::new(0, 0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn general_examples() {
        let i10 = DoubleSumIndex::new(1, 0);
        assert_eq!(sylv_general(&roots("1,2"), &roots("3"), i10), u(&[3, -1]));
        assert_eq!(sylv_general(&roots("1^2"), &roots("3"), i10), u(&[3, -1]));
        // Q | P kills Sylv^{0,j} only below j = q; at j = q the sum is Q itself.
        assert!(sylv_general(&roots("1^2"), &roots("1"), DoubleSumIndex::new(0, 0)).is_zero());
        assert_eq!(
            sylv_general(&roots("1^2"), &roots("1"), DoubleSumIndex::new(0, 1)),
            u(&[-1, 1])
        );
        assert!(sylv_general(&roots("1^2"), &roots("1"), DoubleSumIndex::new(0, 2)).is_zero());
    }

    #[test]
    fn nonmonic_examples() {
        let p = SplitPoly::monic(roots("3"));
        let q = SplitPoly::new(int(-2), RootMultiset::empty()).unwrap();
        assert_eq!(
            sylv_nonmonic(&p, &q, DoubleSumIndex::new(0, 0)).unwrap(),
            u(&[-2])
        );
        let p = SplitPoly::monic(roots("1,2"));
        let q1 = SplitPoly::monic(roots("3"));
        for idx in [
            DoubleSumIndex::new(0, 0),
            DoubleSumIndex::new(1, 0),
            DoubleSumIndex::new(1, 1),
        ] {
            assert_eq!(
                sylv_nonmonic(&p, &q1, idx).unwrap(),
                sylv_general(&p.roots, &q1.roots, idx)
            );
        }
        assert!(matches!(
            sylv_nonmonic(&p, &q1, DoubleSumIndex::new(2, 1)),
            Err(Error::Domain(_))
        ));
        assert!(SplitPoly::new(int(0), roots("1")).is_err());
    }

    #[test]
    fn nonmonic_negative_exponent() {
        // j = 2 > q = 1 makes lc(P) appear with exponent -1.
        let p = SplitPoly::new(int(2), roots("1,2,4")).unwrap();
        let q = SplitPoly::monic(roots("3"));
        let idx = DoubleSumIndex::new(2, 0);
        let expected = sylv_general(&p.roots, &q.roots, idx).scale(&scalar::rat(1, 2));
        assert_eq!(sylv_nonmonic(&p, &q, idx).unwrap(), expected);
    }

    #[test]
    fn msylv_examples() {
        let (p, q) = (roots("1,2"), roots("3"));
        let got = msylv(&p, &q, DoubleSumIndex::new(1, 0), &["U1"]).unwrap();
        let expected = &MultiPoly::constant(&["U1"], int(3)) - &MultiPoly::variable(&["U1"], "U1");
        assert_eq!(got, expected);
        // j = p: no indeterminates, V(U) = 1.
        let full = msylv::<&str>(&p, &q, DoubleSumIndex::new(1, 1), &[]).unwrap();
        assert!(full.as_constant().is_some());
        assert!(msylv(&p, &q, DoubleSumIndex::new(0, 0), &["U1"]).is_err());
    }

    #[test]
    fn enplus_instance() {
        // q <= j < p: MSylv^{j,0} = (-1)^{j(p-j)} prod Q(U_i).
        let (p, q) = (roots("1^2,-2,5"), roots("3"));
        for j in 1..4 {
            let vars = var_block("U", 4 - j);
            let got = msylv(&p, &q, DoubleSumIndex::new(j, 0), &vars).unwrap();
            let mut expected = MultiPoly::one(&vars);
            for v in &vars {
                expected = &expected
                    * &(&MultiPoly::variable(&vars, v) - &MultiPoly::constant(&vars, int(3)));
            }
            assert_eq!(
                got,
                expected.scale(&Sign::parity((j * (4 - j)) as u64).to_scalar()),
                "j={j}"
            );
        }
    }

    #[test]
    fn prodpratique_instance() {
        let (p, q) = (roots("1^2,0"), roots("2^2,1"));
        let p_poly = UniPoly::from_roots(&p, "T");
        let pd = p.len();
        for l in 0..=q.len() {
            for ls in q.subsets(l).unwrap() {
                let rest = q.select(&ls.complement());
                let vars = var_block("Y", rest.len());
                let mut g = indeterminate_vandermonde(&vars);
                for v in &vars {
                    let pv = MultiPoly::from_unipoly(&p_poly).rename(&[("T", v.as_str())]);
                    g = &g * &pv;
                }
                let f = derivate_and_substitute(&g, &vars, &rest)
                    .unwrap()
                    .as_constant()
                    .unwrap();
                let f = Sign::parity((pd * rest.len()) as u64).apply(f);
                assert_eq!(
                    confluent_det(&concat(rest.clone(), p.points().to_vec())),
                    vp_closed_form(&p) * f
                );
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn general_matches_classical(p in simple_roots(1, 5), q in simple_roots(0, 4)) {
            for k in 0..=p.len() {
                for l in 0..=q.len() {
                    let idx = DoubleSumIndex::new(k, l);
                    prop_assert_eq!(
                        sylv_general(&p, &q, idx),
                        sylv_classical(&p.values(), &q.values(), idx).unwrap()
                    );
                }
            }
        }

        #[test]
        fn independent_of_root_order(p in multiset(1, 5), q in multiset(0, 3), k in 0usize..4, l in 0usize..3) {
            let mut groups = p.groups().to_vec();
            groups.reverse();
            let p_rev = RootMultiset::new(groups).unwrap();
            let idx = DoubleSumIndex::new(k, l);
            prop_assert_eq!(sylv_general(&p, &q, idx), sylv_general(&p_rev, &q, idx));
        }

        #[test]
        fn divisor_kills_l_only_sums(q in multiset(1, 3), extra in multiset(0, 2)) {
            let p = q.union(&extra);
            for j in 0..q.len() {
                prop_assert!(sylv_general(&p, &q, DoubleSumIndex::new(0, j)).is_zero());
            }
            prop_assert_eq!(sylv_general(&p, &q, DoubleSumIndex::new(0, q.len())), UniPoly::from_roots(&q, DEFAULT_VAR));
        }

        #[test]
        fn scaling_q_scales_by_power(p in multiset(1, 4), q in multiset(0, 3), c in 1i64..5, k in 0usize..3, l in 0usize..3) {
            prop_assume!(k + l <= p.len());
            let idx = DoubleSumIndex::new(k, l);
            let pm = SplitPoly::monic(p.clone());
            let base = sylv_nonmonic(&pm, &SplitPoly::monic(q.clone()), idx).unwrap();
            let scaled = sylv_nonmonic(&pm, &SplitPoly::new(int(-c), q.clone()).unwrap(), idx).unwrap();
            let factor = pow_signed(&int(-c), (p.len() - idx.j()) as i64).unwrap();
            prop_assert_eq!(scaled, base.scale(&factor));
        }

        #[test]
        fn coefficient_extraction_recovers_sylv(p in multiset(1, 4), q in multiset(0, 3), k in 0usize..4, l in 0usize..3) {
            prop_assume!(k + l < p.len() && p.len() - (k + l) <= 3);
            let idx = DoubleSumIndex::new(k, l);
            let vars = var_block("U", p.len() - idx.j());
            let m = msylv(&p, &q, idx, &vars).unwrap();
            prop_assert!(m.is_symmetric_in(&vars));
            prop_assert_eq!(msylv_to_sylv(&m, &vars, idx.j()).unwrap(), sylv_general(&p, &q, idx));
        }

        #[test]
        fn top_index_is_signed_q(p in multiset(2, 5), q in multiset(0, 4)) {
            prop_assume!(q.len() < p.len());
            let q_poly = UniPoly::from_roots(&q, DEFAULT_VAR);
            let n = p.len();
            for l in 0..=q.len().min(n - 1) {
                let k = n - 1 - l;
                let expected = q_poly.scale(&(Sign::parity(k as u64).to_scalar() * binom_scalar(q.len() as u64, l as i64)));
                prop_assert_eq!(sylv_general(&p, &q, DoubleSumIndex::new(k, l)), expected);
            }
        }
    }
}
