//! Classical and generalized (confluent) Vandermonde determinants.
//!
//! Row `r` (0-based) of every matrix holds degree `r`. The column of a root
//! point `(x, j)` is the normalized `j`-th derivative of `(1, x, ..., x^(n-1))`,
//! i.e. its row-`r` entry is `binom(r, j) * x^(r - j)`; a variable column `U`
//! has entry `U^r`.

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::multipoly::MultiPoly;
use crate::poly::UniPoly;
use crate::roots::{RootMultiset, RootPoint};
use crate::scalar::{self, binom_scalar, det, Scalar, ScalarMatrix, Sign};

/// Column `v_n^{[j]}(x)` of a confluent Vandermonde matrix.
pub fn confluent_column(point: &RootPoint, n: usize) -> Vec<Scalar> {
    let j = point.order;
    let mut col = vec![Scalar::zero(); n];
    let mut power = Scalar::one();
    for (r, entry) in col.iter_mut().enumerate().skip(j) {
        *entry = binom_scalar(r as u64, j as i64) * &power;
        power *= &point.value;
    }
    col
}

pub fn confluent_matrix(points: &[RootPoint], n: usize) -> ScalarMatrix {
    let columns: Vec<_> = points.iter().map(|p| confluent_column(p, n)).collect();
    if columns.is_empty() {
        return ScalarMatrix::zeros(n, 0);
    }
    ScalarMatrix::from_columns(&columns).expect("columns share a length")
}

pub fn vandermonde_matrix(points: &[Scalar]) -> ScalarMatrix {
    let pts: Vec<_> = points.iter().cloned().map(RootPoint::simple).collect();
    confluent_matrix(&pts, pts.len())
}

/// Determinant of the classical Vandermonde matrix; `1` for no points.
pub fn vandermonde_det(points: &[Scalar]) -> Scalar {
    det(&vandermonde_matrix(points)).expect("square")
}

/// `V[L ‖ K]`: determinant of the square confluent matrix on the given
/// columns.
pub fn confluent_det(points: &[RootPoint]) -> Scalar {
    det(&confluent_matrix(points, points.len())).expect("square")
}

/// `V[L ‖ K ‖ U)` for a single trailing variable column, as a polynomial in
/// `var`, by cofactor expansion along that column.
pub fn confluent_det_with_variable(points: &[RootPoint], var: &str) -> UniPoly {
    let n = points.len() + 1;
    let m = confluent_matrix(points, n);
    let cols: Vec<usize> = (0..n - 1).collect();
    let coeffs = (0..n)
        .map(|r| {
            let rows: Vec<usize> = (0..n).filter(|&i| i != r).collect();
            let minor = det(&m.select(&rows, &cols)).expect("square");
            Sign::parity((r + n - 1) as u64).apply(minor)
        })
        .collect();
    UniPoly::new(var, coeffs)
}

/// The matrix `V[L ‖ K ‖ U)`: derivated root columns first, then one plain
/// Vandermonde column per variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenVandermondeSpec {
    pub derivated: Vec<RootPoint>,
    pub variables: Vec<String>,
}

impl GenVandermondeSpec {
    pub fn new(derivated: Vec<RootPoint>, variables: Vec<String>) -> Self {
        GenVandermondeSpec {
            derivated,
            variables,
        }
    }

    pub fn dimension(&self) -> usize {
        self.derivated.len() + self.variables.len()
    }
}

/// Determinant of a generalized Vandermonde matrix as a polynomial in its
/// variable columns.
///
/// Laplace expansion along the variable columns: for every choice of rows for
/// them, the numeric complementary minor goes through Bareiss and the
/// variable block is expanded directly into monomials.
pub fn gen_vandermonde_det(spec: &GenVandermondeSpec) -> MultiPoly {
    let d = spec.derivated.len();
    let u = spec.variables.len();
    let n = d + u;
    let vars = &spec.variables;
    let m = confluent_matrix(&spec.derivated, n);
    let numeric_cols: Vec<usize> = (0..d).collect();
    // Column indices d..n sum to this; only its parity matters.
    let col_sum: usize = (d..n).sum();
    let perms: Vec<(Vec<usize>, Sign)> = (0..u)
        .permutations(u)
        .map(|p| {
            let s = scalar::permutation_sign(&p);
            (p, s)
        })
        .collect();

    let mut total = MultiPoly::zero(vars);
    for var_rows in (0..n).combinations(u) {
        let rest = scalar::complement(n, &var_rows);
        let minor = det(&m.select(&rest, &numeric_cols)).expect("square");
        if minor.is_zero() {
            continue;
        }
        let sign = Sign::parity((var_rows.iter().sum::<usize>() + col_sum) as u64);
        let coeff = sign.apply(minor);
        for (perm, s) in &perms {
            // Variable c sits in row var_rows[perm[c]].
            let powers: Vec<(&str, u32)> = vars
                .iter()
                .enumerate()
                .map(|(c, v)| (v.as_str(), var_rows[perm[c]] as u32))
                .collect();
            total = &total + &MultiPoly::monomial(vars, &powers, s.apply(coeff.clone()));
        }
    }
    total
}

/// `V[P] = prod_{i<j} (x_j - x_i)^(mu_i * mu_j)` over the distinct roots.
pub fn vp_closed_form(roots: &RootMultiset) -> Scalar {
    let g = roots.groups();
    let mut acc = Scalar::one();
    for (i, (xi, mi)) in g.iter().enumerate() {
        for (xj, mj) in &g[i + 1..] {
            acc *= num_traits::pow(xj - xi, mi * mj);
        }
    }
    acc
}

/// Classical Vandermonde determinant of indeterminates, as the product of
/// differences `prod_{a > b} (U_a - U_b)`.
pub fn indeterminate_vandermonde<S: AsRef<str>>(vars: &[S]) -> MultiPoly {
    let mut acc = MultiPoly::one(vars);
    for (b, vb) in vars.iter().enumerate() {
        for va in &vars[b + 1..] {
            let diff =
                &MultiPoly::variable(vars, va.as_ref()) - &MultiPoly::variable(vars, vb.as_ref());
            acc = &acc * &diff;
        }
    }
    acc
}

/// Applies `(1/j!) d^j/dvar^j` for each `(var, j)` in turn.
pub fn partial_derivation(f: &MultiPoly, schedule: &[(&str, usize)]) -> Result<MultiPoly> {
    schedule
        .iter()
        .try_fold(f.clone(), |acc, (v, j)| acc.normalized_derivative(v, *j))
}

/// `∂^{[points]} f` followed by the substitution `vars[t] -> points[t].value`.
///
/// This is the functional that turns a polynomial identity in independent
/// indeterminates into one about a root multiset.
pub fn derivate_and_substitute<S: AsRef<str>>(
    f: &MultiPoly,
    vars: &[S],
    points: &[RootPoint],
) -> Result<MultiPoly> {
    assert_eq!(vars.len(), points.len(), "one variable per root point");
    let schedule: Vec<(&str, usize)> = vars
        .iter()
        .zip(points)
        .map(|(v, p)| (v.as_ref(), p.order))
        .collect();
    let derived = partial_derivation(&f.embed(vars)?, &schedule)?;
    let values: Vec<(&str, Scalar)> = vars
        .iter()
        .zip(points)
        .map(|(v, p)| (v.as_ref(), p.value.clone()))
        .collect();
    derived.substitute_all(&values)
}
