//! Seeded randomized checks of every identity the library relies on.
//!
//! Each suite draws its inputs from a ChaCha8 stream seeded by the caller, so
//! a report is reproducible from `(suite, max_p, max_q, trials, seed)`.

use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::double_sums::{
    msylv, msylv_to_sylv, sylv_classical, sylv_general, sylv_nonmonic, var_block, DoubleSumIndex,
    SplitPoly,
};
use crate::error::{Error, Result};
use crate::hermite::{
    hermite_interpolate, reconstruct, symmetric_basis, symmetric_coords, HermiteData,
};
use crate::multipoly::MultiPoly;
use crate::poly::{UniPoly, DEFAULT_VAR};
use crate::roots::RootMultiset;
use crate::scalar::{binom_scalar, int, pow_signed, rat, Scalar, Sign};
use crate::subresultants::{double_sum_factor, sres_det, sres_det_all, sres_prs};
use crate::symbolic::{symbolic_f, symbolic_s, MAX_SYMBOLIC_DEGREE};
use crate::vandermonde::{
    confluent_det_with_variable, gen_vandermonde_det, indeterminate_vandermonde, vp_closed_form,
    GenVandermondeSpec,
};

pub const SUITES: [&str; 12] = [
    "theoreme0",
    "theo4",
    "theo4mult",
    "lienentreSylv",
    "ouf",
    "prorecurrence",
    "theoreme2",
    "rappel",
    "rappelbis",
    "vandermonde",
    "hermite",
    "all",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_p: usize,
    pub max_q: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_p: 5,
            max_q: 4,
            trials: 50,
            seed: 7,
        }
    }
}

/// Outcome of one identity over all applicable trials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub trials: usize,
    pub failures: usize,
    /// First failing input, verbatim.
    pub reproducer: Option<String>,
}

impl IdentityReport {
    pub fn new(name: &str) -> Self {
        IdentityReport {
            name: name.to_string(),
            trials: 0,
            failures: 0,
            reproducer: None,
        }
    }

    pub fn record(&mut self, outcome: Outcome) {
        self.trials += 1;
        if let Err(msg) = outcome {
            self.failures += 1;
            self.reproducer.get_or_insert(msg);
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: trials={} failures={}",
            self.name, self.trials, self.failures
        )?;
        if let Some(r) = &self.reproducer {
            write!(f, "\n  reproducer: {r}")?;
        }
        Ok(())
    }
}

pub type Outcome = std::result::Result<(), String>;

fn expect_eq(context: impl FnOnce() -> String, got: &UniPoly, expected: &UniPoly) -> Outcome {
    if got == expected {
        Ok(())
    } else {
        Err(format!("{}: got {got}, expected {expected}", context()))
    }
}

fn sign(n: usize) -> Scalar {
    Sign::parity(n as u64).to_scalar()
}

fn q_poly(q: &RootMultiset) -> UniPoly {
    UniPoly::from_roots(q, DEFAULT_VAR)
}

// ---------------------------------------------------------------- generators

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `len` roots (with multiplicity) drawn from distinct integers in
/// `[-9, 9]`, multiplicities at most `max_mult`.
pub fn random_multiset(rng: &mut impl Rng, len: usize, max_mult: usize) -> RootMultiset {
    let mut pool: Vec<i64> = (-9..=9).collect();
    pool.shuffle(rng);
    let mut groups = Vec::new();
    let mut left = len;
    for x in pool {
        if left == 0 {
            break;
        }
        let m = rng.gen_range(1..=max_mult.min(left));
        groups.push((int(x), m));
        left -= m;
    }
    RootMultiset::new(groups).expect("distinct pool values")
}

/// Roots with the given multiplicity pattern.
pub fn random_pattern(rng: &mut impl Rng, pattern: &[usize]) -> RootMultiset {
    let mut pool: Vec<i64> = (-9..=9).collect();
    pool.shuffle(rng);
    RootMultiset::new(
        pattern
            .iter()
            .zip(pool)
            .map(|(&m, x)| (int(x), m))
            .collect(),
    )
    .expect("valid pattern")
}

/// Integer coefficients in `[-6, 6]`, nonzero leading coefficient.
pub fn random_int_poly(rng: &mut impl Rng, degree: usize) -> UniPoly {
    let mut coeffs: Vec<Scalar> = (0..degree).map(|_| int(rng.gen_range(-6..=6))).collect();
    let lead = loop {
        let c = rng.gen_range(-4..=4);
        if c != 0 {
            break c;
        }
    };
    coeffs.push(int(lead));
    UniPoly::new(DEFAULT_VAR, coeffs)
}

/// Nonzero rational `a/b` with `|a| <= 4`, `1 <= b <= 3`.
pub fn random_lc(rng: &mut impl Rng) -> Scalar {
    let num = loop {
        let a = rng.gen_range(-4i64..=4);
        if a != 0 {
            break a;
        }
    };
    rat(num, rng.gen_range(1..=3))
}

/// `P`, `Q` and `R = -Rem(P, Q)`, all split over the rationals.
#[derive(Clone, Debug)]
pub struct RemainderTriple {
    pub p: SplitPoly,
    pub q: SplitPoly,
    pub r: Option<SplitPoly>,
}

impl fmt::Display for RemainderTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self
            .r
            .as_ref()
            .map_or("0".to_string(), |r| r.to_poly(DEFAULT_VAR).to_string());
        write!(
            f,
            "P = {}, Q = {}, R = {r}",
            self.p.to_poly(DEFAULT_VAR),
            self.q.to_poly(DEFAULT_VAR)
        )
    }
}

/// Builds the triple backward. With `Q = A Q1` and `P = A T`, the remainder
/// is `R = A R1` where `R1 = -lc(P) Rem(T, Q1)`; keeping `deg Q1 <= 2` makes
/// `R1` linear or constant, so every polynomial splits.
pub fn random_remainder_triple(rng: &mut impl Rng, max_p: usize) -> RemainderTriple {
    assert!(max_p >= 2, "remainder triples need deg P >= 2");
    let p_deg = rng.gen_range(2..=max_p);
    let q_deg = rng.gen_range(1..p_deg);
    let q1_deg = rng.gen_range(0..=q_deg.min(2));
    let a = random_multiset(rng, q_deg - q1_deg, 3);
    let q1 = random_multiset(rng, q1_deg, 2);
    let t = random_multiset(rng, p_deg - a.len(), 3);
    let (lc_p, lc_q) = if rng.gen_bool(0.5) {
        (Scalar::one(), Scalar::one())
    } else {
        (random_lc(rng), random_lc(rng))
    };
    let p = SplitPoly::new(lc_p.clone(), a.union(&t)).expect("nonzero lc");
    let q = SplitPoly::new(lc_q, a.union(&q1)).expect("nonzero lc");
    let rem_t = UniPoly::from_roots(&t, DEFAULT_VAR)
        .rem(&UniPoly::from_roots(&q1, DEFAULT_VAR))
        .expect("monic divisor");
    let r = match rem_t.degree() {
        None => None,
        Some(d) => {
            let lead = -(lc_p * rem_t.leading_coeff().expect("nonzero"));
            let mut roots = a.clone();
            if d == 1 {
                let root = -(rem_t.coeff(0) / rem_t.coeff(1));
                roots = roots.union(&RootMultiset::simple(vec![root]).expect("one root"));
            }
            Some(SplitPoly::new(lead, roots).expect("nonzero lc"))
        }
    };
    let triple = RemainderTriple { p, q, r };
    let direct = -triple
        .p
        .to_poly(DEFAULT_VAR)
        .rem(&triple.q.to_poly(DEFAULT_VAR))
        .expect("nonzero Q");
    let built = triple
        .r
        .as_ref()
        .map_or_else(|| UniPoly::zero(DEFAULT_VAR), |r| r.to_poly(DEFAULT_VAR));
    assert_eq!(direct, built, "remainder factorization");
    triple
}

/// Symmetrization of a few random monomials of degree at most `k` per
/// variable.
pub fn random_symmetric(rng: &mut impl Rng, vars: &[String], k: u32) -> MultiPoly {
    let mut acc = MultiPoly::zero(vars);
    for _ in 0..rng.gen_range(0..=4) {
        let exps: Vec<u32> = vars.iter().map(|_| rng.gen_range(0..=k)).collect();
        let c = int(rng.gen_range(-5..=5));
        for perm in (0..vars.len()).permutations(vars.len()) {
            let powers: Vec<(&str, u32)> = perm
                .iter()
                .zip(&exps)
                .map(|(&i, &e)| (vars[i].as_str(), e))
                .collect();
            acc = &acc + &MultiPoly::monomial(vars, &powers, c.clone());
        }
    }
    acc
}

// ---------------------------------------------------------------- identities

pub fn check_vandermonde(p: &RootMultiset) -> Outcome {
    let spec = GenVandermondeSpec::new(p.points().to_vec(), vec![]);
    let det = gen_vandermonde_det(&spec)
        .as_constant()
        .unwrap_or_else(Scalar::zero);
    let closed = vp_closed_form(p);
    if det != closed {
        return Err(format!("P = {p}: determinant {det}, closed form {closed}"));
    }
    let with_u = GenVandermondeSpec::new(p.points().to_vec(), vec![DEFAULT_VAR.to_string()]);
    let expanded = gen_vandermonde_det(&with_u);
    let cofactor = MultiPoly::from_unipoly(&confluent_det_with_variable(p.points(), DEFAULT_VAR));
    if expanded != cofactor {
        return Err(format!("P = {p}: variable column expansions disagree"));
    }
    Ok(())
}

pub fn check_theoreme0(p: &RootMultiset, q: &RootMultiset) -> Outcome {
    for k in 0..=p.len() {
        for l in 0..=q.len() {
            let idx = DoubleSumIndex::new(k, l);
            let classical =
                sylv_classical(&p.values(), &q.values(), idx).map_err(|e| e.to_string())?;
            expect_eq(
                || format!("P = {p}, Q = {q}, k = {k}, l = {l}"),
                &sylv_general(p, q, idx),
                &classical,
            )?;
        }
    }
    Ok(())
}

/// `Sylv^{k,l} = (-1)^{l(p-j)} binom(b, l) Sylv^{j,0}` with `b = j` below
/// `q` and `b = q` from `q` on.
fn check_proportional(p: &RootMultiset, q: &RootMultiset, js: std::ops::Range<usize>) -> Outcome {
    let (pd, qd) = (p.len(), q.len());
    for j in js {
        let base = sylv_general(p, q, DoubleSumIndex::new(j, 0));
        let top = if j < qd { j } else { qd };
        for l in 0..=j.min(qd) {
            let factor = sign(l * (pd - j)) * binom_scalar(top as u64, l as i64);
            let got = sylv_general(p, q, DoubleSumIndex::new(j - l, l));
            expect_eq(
                || format!("P = {p}, Q = {q}, k = {}, l = {l}", j - l),
                &got,
                &base.scale(&factor),
            )?;
        }
    }
    Ok(())
}

pub fn check_theo4(p: &RootMultiset, q: &RootMultiset) -> Outcome {
    check_proportional(p, q, 0..q.len())
}

pub fn check_lienentre(p: &RootMultiset, q: &RootMultiset) -> Outcome {
    check_proportional(p, q, q.len()..p.len())
}

pub fn check_ouf(p: &RootMultiset, q: &RootMultiset) -> Outcome {
    let (pd, qd) = (p.len(), q.len());
    let qp = q_poly(q);
    let ctx = |k: usize, l: usize| move || format!("P = {p}, Q = {q}, k = {k}, l = {l}");
    for k in 0..=qd {
        let expected = qp.scale(&(sign(k * (pd - qd)) * binom_scalar(qd as u64, k as i64)));
        expect_eq(
            ctx(k, qd - k),
            &sylv_general(p, q, DoubleSumIndex::new(k, qd - k)),
            &expected,
        )?;
    }
    for j in qd + 1..pd.saturating_sub(1) {
        for l in 0..=j.min(qd) {
            expect_eq(
                ctx(j - l, l),
                &sylv_general(p, q, DoubleSumIndex::new(j - l, l)),
                &UniPoly::zero(DEFAULT_VAR),
            )?;
        }
    }
    let j = pd - 1;
    for l in 0..=j.min(qd) {
        let expected = qp.scale(&(sign(j - l) * binom_scalar(qd as u64, l as i64)));
        expect_eq(
            ctx(j - l, l),
            &sylv_general(p, q, DoubleSumIndex::new(j - l, l)),
            &expected,
        )?;
    }
    Ok(())
}

/// Multi double sum identities for every `j` with `1 <= p - j <= max_u`,
/// as `(theo4mult, jplusgrandqueq, enplus, lienMsylvSylv)`.
pub fn check_multi(p: &RootMultiset, q: &RootMultiset, max_u: usize) -> [Outcome; 4] {
    let mut out = [Ok(()), Ok(()), Ok(()), Ok(())];
    let (pd, qd) = (p.len(), q.len());
    for j in pd.saturating_sub(max_u)..pd {
        let vars = var_block("U", pd - j);
        let ctx = |k: usize, l: usize| {
            format!("P = {p}, Q = {q}, k = {k}, l = {l}, |U| = {}", vars.len())
        };
        let msylv_at = |k: usize, l: usize| msylv(p, q, DoubleSumIndex::new(k, l), &vars);
        let base = match msylv_at(j, 0) {
            Ok(m) => m,
            Err(e) => return [0, 1, 2, 3].map(|_| Err(format!("{}: {e}", ctx(j, 0)))),
        };
        if j >= qd && out[2].is_ok() {
            let mut expected = MultiPoly::constant(&vars, sign(j * (pd - j)));
            let qp = MultiPoly::from_unipoly(&q_poly(q));
            for v in &vars {
                expected = &expected * &qp.rename(&[(DEFAULT_VAR, v.as_str())]);
            }
            if base != expected {
                out[2] = Err(format!("{}: got {base}, expected {expected}", ctx(j, 0)));
            }
        }
        for l in 0..=j.min(qd) {
            let k = j - l;
            let m = match msylv_at(k, l) {
                Ok(m) => m,
                Err(e) => return [0, 1, 2, 3].map(|_| Err(format!("{}: {e}", ctx(k, l)))),
            };
            let slot = if j < qd { 0 } else { 1 };
            let top = if j < qd { j } else { qd };
            let expected = base.scale(&(sign(l * (pd - j)) * binom_scalar(top as u64, l as i64)));
            if out[slot].is_ok() && m != expected {
                out[slot] = Err(format!("{}: got {m}, expected {expected}", ctx(k, l)));
            }
            if out[3].is_ok() {
                let sylv = sylv_general(p, q, DoubleSumIndex::new(k, l));
                match msylv_to_sylv(&m, &vars, j) {
                    Ok(c) if c == sylv => {}
                    Ok(c) => {
                        out[3] = Err(format!("{}: coefficient {c}, double sum {sylv}", ctx(k, l)))
                    }
                    Err(e) => out[3] = Err(format!("{}: {e}", ctx(k, l))),
                }
            }
        }
    }
    out
}

fn nonmonic(p: &SplitPoly, q: &SplitPoly, j: usize) -> std::result::Result<UniPoly, String> {
    sylv_nonmonic(p, q, DoubleSumIndex::new(j, 0)).map_err(|e| e.to_string())
}

fn lc_pow(s: &SplitPoly, e: i64) -> Scalar {
    pow_signed(&s.lc, e).expect("nonzero lc")
}

pub fn check_prorecurrence(t: &RemainderTriple) -> Outcome {
    let (pd, qd) = (t.p.degree(), t.q.degree());
    for j in 0..qd {
        let got = nonmonic(&t.p, &t.q, j)?;
        let expected = match &t.r {
            None => UniPoly::zero(DEFAULT_VAR),
            Some(r) => {
                let factor = sign(qd * (pd - qd)) * lc_pow(&t.q, (pd - r.degree()) as i64);
                nonmonic(&t.q, r, j)?.scale(&factor)
            }
        };
        expect_eq(|| format!("{t}, j = {j}"), &got, &expected)?;
    }
    Ok(())
}

/// The five remainder identities; `None` where an item does not apply.
pub fn check_rappelbis(t: &RemainderTriple) -> [Option<Outcome>; 5] {
    let (pd, qd) = (t.p.degree() as i64, t.q.degree() as i64);
    let qp = t.q.to_poly(DEFAULT_VAR);
    let zero = UniPoly::zero(DEFAULT_VAR);
    let mut out: [Option<Outcome>; 5] = Default::default();
    let mut put = |item: usize, res: Outcome| {
        let slot = &mut out[item - 1];
        if !matches!(slot, Some(Err(_))) {
            *slot = Some(res);
        }
    };
    for j in 0..(pd - 1).max(0) {
        let got = match nonmonic(&t.p, &t.q, j as usize) {
            Ok(g) => g,
            Err(e) => {
                put(1, Err(e));
                continue;
            }
        };
        let ctx = || format!("{t}, j = {j}");
        if qd < j {
            put(1, expect_eq(ctx, &got, &zero));
        } else if j == qd {
            let c = sign((qd * (pd - qd)) as usize) * lc_pow(&t.q, pd - qd - 1);
            put(2, expect_eq(ctx, &got, &qp.scale(&c)));
        } else if j == qd - 1 {
            let c = sign(((qd - 1) * (pd - qd + 1) + pd - qd) as usize) * lc_pow(&t.q, pd - qd + 1);
            let r =
                t.r.as_ref()
                    .map_or_else(|| zero.clone(), |r| r.to_poly(DEFAULT_VAR));
            put(3, expect_eq(ctx, &got, &r.scale(&c)));
        } else {
            match &t.r {
                Some(r) => {
                    let c = sign((qd * (pd - qd)) as usize) * lc_pow(&t.q, pd - r.degree() as i64);
                    let res = nonmonic(&t.q, r, j as usize)
                        .and_then(|s| expect_eq(ctx, &got, &s.scale(&c)));
                    put(4, res);
                }
                None => put(5, expect_eq(ctx, &got, &zero)),
            }
        }
    }
    out
}

/// Double sums from roots against subresultants from coefficients, by both
/// subresultant routes; `(main identity, j = p - 1 remark)`.
pub fn check_theoreme2(p: &SplitPoly, q: &SplitPoly) -> (Outcome, Outcome) {
    let (pp, qp) = (p.to_poly(DEFAULT_VAR), q.to_poly(DEFAULT_VAR));
    let (pd, qd) = (p.degree(), q.degree());
    let ctx = |k: usize, l: usize| format!("P = {pp}, Q = {qp}, k = {k}, l = {l}");
    let seqs = match (sres_det_all(&pp, &qp), sres_prs(&pp, &qp)) {
        (Ok(a), Ok(b)) if a == b => a,
        (Ok(_), Ok(_)) => {
            let msg = format!("P = {pp}, Q = {qp}: sres_det and sres_prs disagree");
            return (Err(msg.clone()), Err(msg));
        }
        (Err(e), _) | (_, Err(e)) => return (Err(e.to_string()), Err(e.to_string())),
    };
    let mut main = Ok(());
    for j in 0..pd.saturating_sub(1) {
        let sres = seqs.get(j).expect("j < p");
        for l in 0..=j.min(qd) {
            let k = j - l;
            let res = sylv_nonmonic(p, q, DoubleSumIndex::new(k, l))
                .map_err(|e| e.to_string())
                .and_then(|s| {
                    expect_eq(|| ctx(k, l), &s, &sres.scale(&double_sum_factor(pd, k, j)))
                });
            if res.is_err() {
                main = res;
                break;
            }
        }
        if main.is_err() {
            break;
        }
    }
    let mut remark = Ok(());
    let j = pd - 1;
    let top = seqs.get(j).expect("p >= 1");
    for l in 0..=j.min(qd) {
        let k = j - l;
        let c = sign(k) * binom_scalar(qd as u64, l as i64) * lc_pow(p, qd as i64 - j as i64);
        let res = sylv_nonmonic(p, q, DoubleSumIndex::new(k, l))
            .map_err(|e| e.to_string())
            .and_then(|s| expect_eq(|| ctx(k, l), &s, &top.scale(&c)));
        if res.is_err() {
            remark = res;
            break;
        }
    }
    (main, remark)
}

/// Subresultant anchors on `sres_det` alone, items 1 to 5 plus
/// `Sres_(p-1) = Q`.
pub fn check_rappel(pp: &UniPoly, qp: &UniPoly) -> [Option<Outcome>; 6] {
    let mut out: [Option<Outcome>; 6] = Default::default();
    let (pd, qd) = match (pp.degree(), qp.degree()) {
        (Some(a), Some(b)) if a > b => (a, b),
        _ => return out,
    };
    let lcq = qp.leading_coeff().expect("nonzero").clone();
    let eps = crate::scalar::epsilon((pd - qd) as u64);
    let ctx = |j: usize| move || format!("P = {pp}, Q = {qp}, j = {j}");
    let get = |j: usize| sres_det(pp, qp, j).map_err(|e| e.to_string());
    let zero = UniPoly::zero(DEFAULT_VAR);
    if qd + 1 < pd - 1 {
        out[0] = Some((qd + 1..pd - 1).try_for_each(|j| expect_eq(ctx(j), &get(j)?, &zero)));
    }
    if qd < pd - 1 {
        let expected = qp.scale(&eps.apply(num_traits::pow(lcq.clone(), pd - qd - 1)));
        out[1] = Some(get(qd).and_then(|s| expect_eq(ctx(qd), &s, &expected)));
    }
    if qd >= 1 {
        let r = -pp.rem(qp).expect("nonzero Q");
        let expected = r.scale(&eps.apply(num_traits::pow(lcq.clone(), pd - qd + 1)));
        out[2] = Some(get(qd - 1).and_then(|s| expect_eq(ctx(qd - 1), &s, &expected)));
        if qd >= 2 {
            let item = match r.degree() {
                Some(rd) => {
                    let factor = eps.apply(num_traits::pow(lcq, pd - rd));
                    (
                        3,
                        (0..qd - 1).try_for_each(|j| {
                            let lower = sres_det(qp, &r, j).map_err(|e| e.to_string())?;
                            expect_eq(ctx(j), &get(j)?, &lower.scale(&factor))
                        }),
                    )
                }
                None => (
                    4,
                    (0..qd - 1).try_for_each(|j| expect_eq(ctx(j), &get(j)?, &zero)),
                ),
            };
            out[item.0] = Some(item.1);
        }
    }
    out[5] = Some(get(pd - 1).and_then(|s| expect_eq(ctx(pd - 1), &s, qp)));
    out
}

pub fn check_hermite_univariate(nodes: &RootMultiset, f: &UniPoly) -> Outcome {
    let data = HermiteData::sample(f, nodes.clone());
    expect_eq(
        || format!("nodes = {nodes}"),
        &hermite_interpolate(&data, DEFAULT_VAR),
        f,
    )
}

pub fn check_hermite_multivariate(p: &RootMultiset, k: usize, g: &MultiPoly) -> Outcome {
    let vars: Vec<String> = var_block("U", p.len() - k);
    let ctx = || format!("P = {p}, k = {k}, g = {g}");
    let coords = symmetric_coords(g, &vars, p, k).map_err(|e| format!("{}: {e}", ctx()))?;
    let basis = symmetric_basis(p, k, &vars).map_err(|e| format!("{}: {e}", ctx()))?;
    let back = reconstruct(&coords, &basis).map_err(|e| format!("{}: {e}", ctx()))?;
    if &back != g {
        return Err(format!("{}: reconstructed {back}", ctx()));
    }
    Ok(())
}

/// Antisymmetry of `F^{k,l}` under adjacent swaps and exact division by
/// `V(X) V(Y)`, for all `p, q <= 3` and all `(k, l)`.
pub fn check_symbolic_layer() -> (IdentityReport, IdentityReport) {
    let mut anti = IdentityReport::new("lemme1");
    let mut div = IdentityReport::new("div");
    for p in 0..=MAX_SYMBOLIC_DEGREE {
        for q in 0..=MAX_SYMBOLIC_DEGREE {
            let (xs, ys) = (var_block("X", p), var_block("Y", q));
            for k in 0..=p {
                for l in 0..=q {
                    let idx = DoubleSumIndex::new(k, l);
                    let ctx = format!("p = {p}, q = {q}, k = {k}, l = {l}");
                    let f = match symbolic_f(p, q, idx) {
                        Ok(f) => f,
                        Err(e) => {
                            anti.record(Err(format!("{ctx}: {e}")));
                            continue;
                        }
                    };
                    let bad = xs
                        .windows(2)
                        .chain(ys.windows(2))
                        .find(|w| f.swap_vars(&w[0], &w[1]) != -&f);
                    anti.record(match bad {
                        None => Ok(()),
                        Some(w) => Err(format!("{ctx}: not antisymmetric in {}, {}", w[0], w[1])),
                    });
                    let divisor = &indeterminate_vandermonde(&xs) * &indeterminate_vandermonde(&ys);
                    div.record(match symbolic_s(p, q, idx) {
                        Ok(s)
                            if &s * &divisor == f
                                && s.is_symmetric_in(&xs)
                                && s.is_symmetric_in(&ys) =>
                        {
                            Ok(())
                        }
                        Ok(_) => Err(format!("{ctx}: quotient is wrong or not symmetric")),
                        Err(e) => Err(format!("{ctx}: {e}")),
                    });
                }
            }
        }
    }
    (anti, div)
}

// ---------------------------------------------------------------- suites

fn pair_degrees(rng: &mut impl Rng, cfg: &VerifyConfig, min_p: usize) -> Option<(usize, usize)> {
    if cfg.max_p < min_p {
        return None;
    }
    let p = rng.gen_range(min_p..=cfg.max_p);
    let q = rng.gen_range(0..=cfg.max_q.min(p - 1));
    Some((p, q))
}

fn run_pairs(
    names: &[&str],
    cfg: &VerifyConfig,
    rng: &mut impl Rng,
    mut check: impl FnMut(&RootMultiset, &RootMultiset) -> Vec<Option<Outcome>>,
) -> Vec<IdentityReport> {
    let mut reports: Vec<IdentityReport> = names.iter().map(|n| IdentityReport::new(n)).collect();
    for _ in 0..cfg.trials {
        let Some((pd, qd)) = pair_degrees(rng, cfg, 2) else {
            break;
        };
        let p = random_multiset(rng, pd, 3);
        let q = random_multiset(rng, qd, 3);
        for (rep, res) in reports.iter_mut().zip(check(&p, &q)) {
            if let Some(res) = res {
                rep.record(res);
            }
        }
    }
    reports
}

fn suite_theoreme0(cfg: &VerifyConfig, rng: &mut impl Rng) -> Vec<IdentityReport> {
    let mut rep = IdentityReport::new("theoreme0");
    for _ in 0..cfg.trials {
        let pd = rng.gen_range(1..=cfg.max_p.max(1));
        let qd = rng.gen_range(0..=cfg.max_q);
        let p = random_multiset(rng, pd, 1);
        let q = random_multiset(rng, qd, 1);
        rep.record(check_theoreme0(&p, &q));
    }
    vec![rep]
}

fn suite_vandermonde(cfg: &VerifyConfig, rng: &mut impl Rng) -> Vec<IdentityReport> {
    let mut rep = IdentityReport::new("vandermonde");
    for _ in 0..cfg.trials {
        let pd = rng.gen_range(0..=cfg.max_p);
        rep.record(check_vandermonde(&random_multiset(rng, pd, 3)));
    }
    vec![rep]
}

fn suite_remainders(
    cfg: &VerifyConfig,
    rng: &mut impl Rng,
    pro: bool,
    bis: bool,
) -> Vec<IdentityReport> {
    let mut pro_rep = IdentityReport::new("prorecurrence");
    let mut bis_reps: Vec<IdentityReport> = (1..=5)
        .map(|i| IdentityReport::new(&format!("rappelbis.{i}")))
        .collect();
    if cfg.max_p >= 2 {
        for _ in 0..cfg.trials {
            let t = random_remainder_triple(rng, cfg.max_p);
            if pro {
                pro_rep.record(check_prorecurrence(&t));
            }
            if bis {
                for (rep, res) in bis_reps.iter_mut().zip(check_rappelbis(&t)) {
                    if let Some(res) = res {
                        rep.record(res);
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    if pro {
        out.push(pro_rep);
    }
    if bis {
        out.extend(bis_reps);
    }
    out
}

fn suite_theoreme2(cfg: &VerifyConfig, rng: &mut impl Rng) -> Vec<IdentityReport> {
    let mut main = IdentityReport::new("theoreme2");
    let mut remark = IdentityReport::new("theoreme2.remark");
    for trial in 0..cfg.trials {
        let Some((pd, qd)) = pair_degrees(rng, cfg, 2) else {
            break;
        };
        let (p, q) = (random_multiset(rng, pd, 3), random_multiset(rng, qd, 3));
        let monic = (SplitPoly::monic(p.clone()), SplitPoly::monic(q.clone()));
        let (a, b) = check_theoreme2(&monic.0, &monic.1);
        main.record(a);
        remark.record(b);
        if trial % 2 == 0 {
            let scaled = (
                SplitPoly::new(random_lc(rng), p).expect("nonzero"),
                SplitPoly::new(random_lc(rng), q).expect("nonzero"),
            );
            let (a, b) = check_theoreme2(&scaled.0, &scaled.1);
            main.record(a);
            remark.record(b);
        }
    }
    vec![main, remark]
}

fn suite_rappel(cfg: &VerifyConfig, rng: &mut impl Rng) -> Vec<IdentityReport> {
    let names = [
        "rappel.1",
        "rappel.2",
        "rappel.3",
        "rappel.4",
        "rappel.5",
        "rappel.remark",
    ];
    let mut reps: Vec<IdentityReport> = names.iter().map(|n| IdentityReport::new(n)).collect();
    for trial in 0..cfg.trials {
        let Some((pd, qd)) = pair_degrees(rng, cfg, 2) else {
            break;
        };
        let q = random_int_poly(rng, qd);
        // Every third pair has Q | P so that the R = 0 branch is exercised.
        let p = if trial % 3 == 2 {
            &q * &random_int_poly(rng, pd - qd)
        } else {
            random_int_poly(rng, pd)
        };
        for (rep, res) in reps.iter_mut().zip(check_rappel(&p, &q)) {
            if let Some(res) = res {
                rep.record(res);
            }
        }
    }
    reps
}

fn suite_hermite(cfg: &VerifyConfig, rng: &mut impl Rng) -> Vec<IdentityReport> {
    let mut uni = IdentityReport::new("hermite");
    let mut multi = IdentityReport::new("interpolationdata");
    for _ in 0..cfg.trials {
        let n = rng.gen_range(1..=cfg.max_p + 1);
        let nodes = random_multiset(rng, n, 3);
        let deg = rng.gen_range(0..n);
        let f = UniPoly::new(
            DEFAULT_VAR,
            (0..=deg).map(|_| int(rng.gen_range(-9..=9))).collect(),
        );
        uni.record(check_hermite_univariate(&nodes, &f));
        let pd = rng.gen_range(1..=cfg.max_p.clamp(1, 4));
        let p = random_multiset(rng, pd, 3);
        for k in 0..=pd {
            let g = random_symmetric(rng, &var_block("U", pd - k), k as u32);
            multi.record(check_hermite_multivariate(&p, k, &g));
        }
    }
    vec![uni, multi]
}

/// Runs one named suite (or `all`).
pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<Vec<IdentityReport>> {
    if name == "all" {
        let mut out = Vec::new();
        for s in SUITES.iter().filter(|s| **s != "all") {
            out.extend(run_suite(s, cfg)?);
        }
        return Ok(out);
    }
    let mut rng = rng_for(cfg.seed);
    let r = &mut rng;
    let single = |names: &[&str],
                  pick: fn(&RootMultiset, &RootMultiset) -> Outcome,
                  rng: &mut ChaCha8Rng| {
        run_pairs(names, cfg, rng, |p, q| vec![Some(pick(p, q))])
    };
    Ok(match name {
        "theoreme0" => suite_theoreme0(cfg, r),
        "theo4" => single(&["theo4"], check_theo4, r),
        "lienentreSylv" => single(&["lienentreSylv"], check_lienentre, r),
        "ouf" => single(&["ouf"], check_ouf, r),
        "theo4mult" => run_pairs(
            &["theo4mult", "jplusgrandqueq", "enplus", "lienMsylvSylv"],
            cfg,
            r,
            |p, q| {
                let qd = q.len();
                let pd = p.len();
                let applies = [
                    (0..pd).any(|j| j < qd && pd - j <= 3),
                    (0..pd).any(|j| j >= qd && pd - j <= 3),
                ];
                let [a, b, c, d] = check_multi(p, q, 3);
                vec![
                    applies[0].then_some(a),
                    applies[1].then_some(b),
                    applies[1].then_some(c),
                    Some(d),
                ]
            },
        ),
        "prorecurrence" => suite_remainders(cfg, r, true, false),
        "rappelbis" => suite_remainders(cfg, r, false, true),
        "theoreme2" => suite_theoreme2(cfg, r),
        "rappel" => suite_rappel(cfg, r),
        "vandermonde" => suite_vandermonde(cfg, r),
        "hermite" => suite_hermite(cfg, r),
        other => {
            return Err(Error::Argument(format!(
                "unknown suite {other:?}; expected one of {}",
                SUITES.join(", ")
            )))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let a = random_multiset(&mut rng_for(3), 6, 3);
        let b = random_multiset(&mut rng_for(3), 6, 3);
        assert_eq!(a, b);
        assert_eq!(a.len(), 6);
        assert!(random_multiset(&mut rng_for(3), 5, 1).is_simple());
    }

    #[test]
    fn remainder_triples_split() {
        let mut rng = rng_for(11);
        let mut zero_r = 0;
        for _ in 0..200 {
            let t = random_remainder_triple(&mut rng, 6);
            assert!(t.p.degree() > t.q.degree());
            if let Some(r) = &t.r {
                assert!(r.degree() < t.q.degree());
            } else {
                zero_r += 1;
            }
        }
        assert!(zero_r > 0);
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("nope", &VerifyConfig::default()).is_err());
    }

    #[test]
    fn reports_render() {
        let mut r = IdentityReport::new("x");
        r.record(Ok(()));
        assert_eq!(r.to_string(), "x: trials=1 failures=0");
        r.record(Err("P = 1".into()));
        assert_eq!(r.to_string(), "x: trials=2 failures=1\n  reproducer: P = 1");
    }

    #[test]
    fn small_runs_pass() {
        let cfg = VerifyConfig {
            max_p: 4,
            max_q: 3,
            trials: 4,
            seed: 1,
        };
        for suite in SUITES.iter().filter(|s| **s != "all") {
            for rep in run_suite(suite, &cfg).unwrap() {
                assert!(rep.passed(), "{rep}");
            }
        }
    }
}
