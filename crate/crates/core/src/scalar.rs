//! Exact rational scalars, exact determinants and the small combinatorial
//! toolkit (binomials, signs, subsets) used throughout the crate.

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// `base^exp` for a signed exponent. Fails only for `0^negative`.
pub fn pow_signed(base: &Scalar, exp: i64) -> Result<Scalar> {
    if exp >= 0 {
        return Ok(num_traits::pow(base.clone(), exp as usize));
    }
    if base.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(num_traits::pow(base.recip(), exp.unsigned_abs() as usize))
}

/// Parses `"n"`, `"-n"` or `"n/d"`.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    match text.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Scalar::new(n, d))
        }
        None => Ok(Scalar::from_integer(
            BigInt::from_str(text).map_err(|_| bad())?,
        )),
    }
}

/// Always renders as `num/den`, even for integers.
pub fn format_fraction(x: &Scalar) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// A value in `{-1, +1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Sign(i8);

impl Sign {
    pub const PLUS: Sign = Sign(1);
    pub const MINUS: Sign = Sign(-1);

    /// `(-1)^n`.
    pub fn parity(n: u64) -> Sign {
        if n.is_multiple_of(2) {
            Sign::PLUS
        } else {
            Sign::MINUS
        }
    }

    pub fn value(self) -> i8 {
        self.0
    }

    pub fn is_plus(self) -> bool {
        self.0 == 1
    }

    pub fn to_scalar(self) -> Scalar {
        int(self.0 as i64)
    }

    pub fn apply(self, x: Scalar) -> Scalar {
        if self.is_plus() {
            x
        } else {
            -x
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign(self.0 * rhs.0)
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        Sign(-self.0)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if self.is_plus() { "+1" } else { "-1" })
    }
}

/// Dense row-major matrix of exact scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl ScalarMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(ScalarMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ScalarMatrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let n = rows.len();
        Self::new(n, cols, rows.into_iter().flatten().collect())
    }

    /// Builds the matrix whose `c`-th column is `columns[c]`.
    pub fn from_columns(columns: &[Vec<Scalar>]) -> Result<Self> {
        let rows = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::Dimension("ragged columns".into()));
        }
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            for (r, x) in col.iter().enumerate() {
                m.set(r, c, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        self.entries[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Submatrix on the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> ScalarMatrix {
        let entries = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| (r, c)))
            .map(|(r, c)| self.get(r, c).clone())
            .collect();
        ScalarMatrix {
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    pub fn mul(&self, other: &ScalarMatrix) -> Result<ScalarMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let s = (0..self.cols).fold(Scalar::zero(), |acc, t| {
                    acc + self.get(i, t) * other.get(t, j)
                });
                out.set(i, j, s);
            }
        }
        Ok(out)
    }

    pub fn det(&self) -> Result<Scalar> {
        det(self)
    }
}

/// Exact determinant.
///
/// Each row is scaled by the lcm of its denominators, then fraction-free
/// Bareiss elimination runs over the integers; every division in the
/// elimination is exact.
pub fn det(m: &ScalarMatrix) -> Result<Scalar> {
    if m.rows != m.cols {
        return Err(Error::Dimension(format!(
            "determinant of a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(Scalar::one());
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|r| {
            let row = m.row(r);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(Scalar::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let mut d = a[n - 1][n - 1].clone();
    if negate {
        d = -d;
    }
    Ok(Scalar::new(d, scale))
}

/// Binomial coefficient; zero outside `0 <= k <= n`.
pub fn binom(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn binom_scalar(n: u64, k: i64) -> Scalar {
    Scalar::from_integer(binom(n, k))
}

/// `(-1)^(k(k-1)/2)`, the signature of the order-reversing permutation of
/// `k` elements.
pub fn epsilon(k: u64) -> Sign {
    match k % 4 {
        0 | 1 => Sign::PLUS,
        _ => Sign::MINUS,
    }
}

/// Signature of a sequence of distinct indices, read as a permutation.
pub fn permutation_sign(seq: &[usize]) -> Sign {
    let inversions = seq
        .iter()
        .enumerate()
        .map(|(i, a)| seq[i + 1..].iter().filter(|b| *b < a).count() as u64)
        .sum();
    Sign::parity(inversions)
}

/// Signature of the permutation taking `0..n` to `complement ‖ positions`.
pub fn subset_signature(n: usize, positions: &[usize]) -> Result<Sign> {
    check_positions(n, positions)?;
    // Each chosen position is overtaken by every unchosen index after it.
    let mut inversions = 0u64;
    for (rank, &pos) in positions.iter().enumerate() {
        let later = n - 1 - pos;
        let chosen_later = positions.len() - 1 - rank;
        inversions += (later - chosen_later) as u64;
    }
    Ok(Sign::parity(inversions))
}

pub(crate) fn check_positions(n: usize, positions: &[usize]) -> Result<()> {
    if positions.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Argument(format!(
            "positions {positions:?} are not strictly increasing"
        )));
    }
    if positions.last().is_some_and(|&last| last >= n) {
        return Err(Error::Argument(format!(
            "positions {positions:?} out of range 0..{n}"
        )));
    }
    Ok(())
}

/// All strictly increasing `k`-subsets of `0..n`, in lexicographic order.
pub fn enumerate_subsets(n: usize, k: usize) -> Result<impl Iterator<Item = Vec<usize>>> {
    if k > n {
        return Err(Error::Argument(format!("cannot choose {k} of {n}")));
    }
    Ok((0..n).combinations(k))
}

pub(crate) fn complement(n: usize, positions: &[usize]) -> Vec<usize> {
    (0..n)
        .filter(|i| positions.binary_search(i).is_err())
        .collect()
}

pub(crate) fn is_integer(x: &Scalar) -> bool {
    x.denom().is_one()
}

pub(crate) fn abs(x: &Scalar) -> Scalar {
    x.abs()
}
