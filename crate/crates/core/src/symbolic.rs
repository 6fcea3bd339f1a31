//! Fully symbolic double sums in indeterminate roots `X1..Xp`, `Y1..Yq` and
//! `U`. Only usable for tiny degrees; serves as an oracle.

use crate::double_sums::{var_block, DoubleSumIndex};
use crate::error::{Error, Result};
use crate::multipoly::MultiPoly;
use crate::poly::DEFAULT_VAR;
use crate::scalar::{complement, enumerate_subsets, subset_signature};
use crate::vandermonde::indeterminate_vandermonde;

pub const MAX_SYMBOLIC_DEGREE: usize = 3;

fn guard(p: usize, q: usize) -> Result<()> {
    if p > MAX_SYMBOLIC_DEGREE || q > MAX_SYMBOLIC_DEGREE {
        return Err(Error::Resource(format!(
            "symbolic double sums are limited to p, q <= {MAX_SYMBOLIC_DEGREE} (got p = {p}, q = {q})"
        )));
    }
    Ok(())
}

pub fn symbolic_vars(p: usize, q: usize) -> Vec<String> {
    let mut vars = var_block("X", p);
    vars.extend(var_block("Y", q));
    vars.push(DEFAULT_VAR.to_string());
    vars
}

fn pick(names: &[String], pos: &[usize]) -> Vec<String> {
    pos.iter().map(|&i| names[i].clone()).collect()
}

/// `F^{k,l}(X, Y)(U) = sum s_X' s_Y' V((Y\Y') ‖ (X\X')) V(Y' ‖ X' ‖ U)`.
pub fn symbolic_f(p: usize, q: usize, idx: DoubleSumIndex) -> Result<MultiPoly> {
    guard(p, q)?;
    let all = symbolic_vars(p, q);
    let mut acc = MultiPoly::zero(&all);
    if idx.k > p || idx.l > q {
        return Ok(acc);
    }
    let (xs, ys) = (var_block("X", p), var_block("Y", q));
    for xk in enumerate_subsets(p, idx.k)? {
        let sx = subset_signature(p, &xk)?;
        let x_rest = pick(&xs, &complement(p, &xk));
        for yl in enumerate_subsets(q, idx.l)? {
            let sy = subset_signature(q, &yl)?;
            let mut left = pick(&ys, &complement(q, &yl));
            left.extend(x_rest.iter().cloned());
            let mut right = pick(&ys, &yl);
            right.extend(pick(&xs, &xk));
            right.push(DEFAULT_VAR.to_string());
            let term = &indeterminate_vandermonde(&left) * &indeterminate_vandermonde(&right);
            acc = &acc + &term.scale(&(sx * sy).to_scalar());
        }
    }
    Ok(acc)
}

/// `S^{k,l} = F^{k,l} / (V(X) V(Y))`, symmetric in `X` and in `Y`.
pub fn symbolic_s(p: usize, q: usize, idx: DoubleSumIndex) -> Result<MultiPoly> {
    let f = symbolic_f(p, q, idx)?;
    let divisor = &indeterminate_vandermonde(&var_block("X", p))
        * &indeterminate_vandermonde(&var_block("Y", q));
    f.exact_divide(&divisor).map_err(|e| {
        Error::Invariant(format!(
            "F^{{{},{}}} not divisible by V(X)V(Y): {e}",
            idx.k, idx.l
        ))
    })
}
