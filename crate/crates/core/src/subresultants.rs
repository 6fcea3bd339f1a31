//! Signed subresultants from coefficients.
//!
//! `sres_det` reads them off minors of the Sylvester–Habicht matrix;
//! `sres_prs` gets them from the remainder sequence. Each is the other's
//! oracle.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::scalar::{self, det, epsilon, Scalar, ScalarMatrix};

/// Row order of the `Q` block: `Q, XQ, ..., X^(p-j-1) Q` when true, the
/// reverse when false. Pinned by the sign-anchor tests.
pub const Q_BLOCK_ASCENDING: bool = true;

/// Rows `X^(q-j-1) P, ..., XP, P` followed by the `Q` block, over the
/// monomials `X^(p+q-j-1), ..., X, 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylvesterHabichtMatrix {
    pub j: usize,
    pub matrix: ScalarMatrix,
}

fn degrees(p: &UniPoly, q: &UniPoly) -> Result<(usize, usize)> {
    let q_deg = q
        .degree()
        .ok_or_else(|| Error::Unsupported("subresultants need a nonzero Q".into()))?;
    match p.degree() {
        Some(p_deg) if p_deg > q_deg => Ok((p_deg, q_deg)),
        p_deg => Err(Error::Unsupported(format!(
            "subresultants need deg P > deg Q (got {} and {q_deg})",
            p_deg.map_or("-inf".to_string(), |d| d.to_string())
        ))),
    }
}

impl SylvesterHabichtMatrix {
    /// Defined for `j <= deg Q`.
    pub fn new(p: &UniPoly, q: &UniPoly, j: usize) -> Result<Self> {
        let (pd, qd) = degrees(p, q)?;
        if j > qd {
            return Err(Error::Argument(format!(
                "the matrix needs j <= deg Q = {qd}, got j = {j}"
            )));
        }
        let cols = pd + qd - j;
        let row_of = |f: &UniPoly, shift: usize| -> Vec<Scalar> {
            (0..cols)
                .map(|c| {
                    let monomial = cols - 1 - c;
                    monomial
                        .checked_sub(shift)
                        .map_or_else(Scalar::zero, |i| f.coeff(i))
                })
                .collect()
        };
        let mut rows: Vec<Vec<Scalar>> = (0..qd - j).rev().map(|s| row_of(p, s)).collect();
        let mut q_rows: Vec<Vec<Scalar>> = (0..pd - j).map(|s| row_of(q, s)).collect();
        if !Q_BLOCK_ASCENDING {
            q_rows.reverse();
        }
        rows.extend(q_rows);
        Ok(SylvesterHabichtMatrix {
            j,
            matrix: ScalarMatrix::from_rows(rows)?,
        })
    }

    /// `det` of the first `p+q-2j-1` columns plus the column of `X^i`.
    pub fn minor(&self, i: usize) -> Scalar {
        let (rows, cols) = (self.matrix.rows(), self.matrix.cols());
        let mut picked: Vec<usize> = (0..rows - 1).collect();
        picked.push(cols - 1 - i);
        let all_rows: Vec<usize> = (0..rows).collect();
        det(&self.matrix.select(&all_rows, &picked)).expect("square")
    }
}

fn lc(f: &UniPoly) -> Scalar {
    f.leading_coeff().cloned().unwrap_or_else(Scalar::zero)
}

/// Value of `Sres_j` for `j >= deg Q`.
fn conventional(p_deg: usize, q: &UniPoly, q_deg: usize, j: usize) -> UniPoly {
    if j == p_deg - 1 {
        q.clone()
    } else if j == q_deg {
        let c = epsilon((p_deg - q_deg) as u64).apply(num_traits::pow(lc(q), p_deg - q_deg - 1));
        q.scale(&c)
    } else {
        UniPoly::zero(q.var())
    }
}

/// `Sres_j(P, Q)` from determinants, `0 <= j < deg P`.
pub fn sres_det(p: &UniPoly, q: &UniPoly, j: usize) -> Result<UniPoly> {
    let (pd, qd) = degrees(p, q)?;
    if j >= pd {
        return Err(Error::Argument(format!(
            "need j < deg P = {pd}, got j = {j}"
        )));
    }
    if j > qd {
        return Ok(conventional(pd, q, qd, j));
    }
    let m = SylvesterHabichtMatrix::new(p, q, j)?;
    Ok(UniPoly::new(p.var(), (0..=j).map(|i| m.minor(i)).collect()))
}

/// All of `Sres_0, ..., Sres_(p-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SresSequence {
    entries: Vec<UniPoly>,
}

impl SresSequence {
    pub fn get(&self, j: usize) -> Option<&UniPoly> {
        self.entries.get(j)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(j, Sres_j)` from `j = p-1` down to `0`.
    pub fn descending(&self) -> impl Iterator<Item = (usize, &UniPoly)> {
        self.entries.iter().enumerate().rev()
    }
}

/// Subresultants through the remainder sequence.
pub fn sres_prs(p: &UniPoly, q: &UniPoly) -> Result<SresSequence> {
    let (pd, qd) = degrees(p, q)?;
    let mut entries: Vec<UniPoly> = (0..pd).map(|j| conventional(pd, q, qd, j)).collect();
    if qd == 0 {
        return Ok(SresSequence { entries });
    }
    let r = -p.rem(q)?;
    let Some(rd) = r.degree() else {
        for e in entries.iter_mut().take(qd) {
            *e = UniPoly::zero(p.var());
        }
        return Ok(SresSequence { entries });
    };
    let eps = epsilon((pd - qd) as u64);
    entries[qd - 1] = r.scale(&eps.apply(num_traits::pow(lc(q), pd - qd + 1)));
    let lower = sres_prs(q, &r)?;
    let factor = eps.apply(num_traits::pow(lc(q), pd - rd));
    for (j, e) in entries.iter_mut().enumerate().take(qd - 1) {
        *e = lower.entries[j].scale(&factor);
    }
    Ok(SresSequence { entries })
}

/// All `sres_det` values as a sequence.
pub fn sres_det_all(p: &UniPoly, q: &UniPoly) -> Result<SresSequence> {
    let (pd, _) = degrees(p, q)?;
    let entries = (0..pd).map(|j| sres_det(p, q, j)).collect::<Result<_>>()?;
    Ok(SresSequence { entries })
}

/// `P, Q, -Rem(P, Q), -Rem(Q, R1), ...` up to the last nonzero entry.
pub fn remainder_sequence(p: &UniPoly, q: &UniPoly) -> Result<Vec<UniPoly>> {
    if q.is_zero() {
        return Err(Error::Argument(
            "remainder sequence needs a nonzero Q".into(),
        ));
    }
    let mut seq = vec![p.clone(), q.clone()];
    loop {
        let n = seq.len();
        let r = -seq[n - 2].rem(&seq[n - 1])?;
        if r.is_zero() {
            return Ok(seq);
        }
        seq.push(r);
    }
}

/// `Sres_j` scaled as in the double-sum identity:
/// `(-1)^(k(p-j)) eps_(p-j) binom(j, k)`.
pub fn double_sum_factor(p_deg: usize, k: usize, j: usize) -> Scalar {
    let sign = scalar::Sign::parity((k * (p_deg - j)) as u64) * epsilon((p_deg - j) as u64);
    sign.apply(scalar::binom_scalar(j as u64, k as i64))
}
