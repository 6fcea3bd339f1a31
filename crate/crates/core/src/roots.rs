//! Ordered root multisets and subset selections over their flattened form.
//!
//! A root `x` of multiplicity `m` flattens to the pairs `(x, 0), ..., (x, m-1)`.
//! Subsets are always identified by positions in the flattened list, never by
//! root values, since values repeat.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::error::{Error, Result};
use crate::scalar::{self, parse_scalar, Scalar, Sign};

/// A root paired with the derivative index it carries in the flattened
/// multiset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootPoint {
    pub value: Scalar,
    pub order: usize,
}

impl RootPoint {
    pub fn new(value: Scalar, order: usize) -> Self {
        RootPoint { value, order }
    }

    pub fn simple(value: Scalar) -> Self {
        RootPoint { value, order: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootMultiset {
    groups: Vec<(Scalar, usize)>,
    points: Vec<RootPoint>,
}

impl RootMultiset {
    pub fn new(groups: Vec<(Scalar, usize)>) -> Result<Self> {
        for (i, (x, m)) in groups.iter().enumerate() {
            if *m == 0 {
                return Err(Error::Argument(format!("root {x} has multiplicity 0")));
            }
            if groups[..i].iter().any(|(y, _)| y == x) {
                return Err(Error::Argument(format!("root {x} listed twice")));
            }
        }
        let points = groups
            .iter()
            .flat_map(|(x, m)| (0..*m).map(move |j| RootPoint::new(x.clone(), j)))
            .collect();
        Ok(RootMultiset { groups, points })
    }

    pub fn empty() -> Self {
        RootMultiset {
            groups: Vec::new(),
            points: Vec::new(),
        }
    }

    /// All multiplicities one.
    pub fn simple(values: Vec<Scalar>) -> Result<Self> {
        Self::new(values.into_iter().map(|x| (x, 1)).collect())
    }

    /// Groups repeated values together, keeping first-occurrence order.
    pub fn from_values(values: &[Scalar]) -> Self {
        let mut groups: Vec<(Scalar, usize)> = Vec::new();
        for x in values {
            match groups.iter_mut().find(|(y, _)| y == x) {
                Some(g) => g.1 += 1,
                None => groups.push((x.clone(), 1)),
            }
        }
        Self::new(groups).expect("grouped values are distinct")
    }

    pub fn groups(&self) -> &[(Scalar, usize)] {
        &self.groups
    }

    pub fn points(&self) -> &[RootPoint] {
        &self.points
    }

    /// Degree of the monic polynomial with these roots.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_simple(&self) -> bool {
        self.groups.iter().all(|(_, m)| *m == 1)
    }

    pub fn values(&self) -> Vec<Scalar> {
        self.points.iter().map(|p| p.value.clone()).collect()
    }

    pub fn multiplicity_of(&self, x: &Scalar) -> usize {
        self.groups.iter().find(|(y, _)| y == x).map_or(0, |g| g.1)
    }

    pub fn select(&self, positions: &[usize]) -> Vec<RootPoint> {
        positions.iter().map(|&i| self.points[i].clone()).collect()
    }

    /// All `k`-subsets in lexicographic order of positions.
    pub fn subsets(&self, k: usize) -> Result<impl Iterator<Item = SubsetSelection> + '_> {
        let n = self.len();
        Ok(scalar::enumerate_subsets(n, k)?.map(move |positions| {
            SubsetSelection::new(n, positions).expect("enumerated subsets are valid")
        }))
    }

    /// Union with another multiset: multiplicities add, order of first
    /// occurrence is kept.
    pub fn union(&self, other: &RootMultiset) -> RootMultiset {
        let mut groups = self.groups.clone();
        for (x, m) in &other.groups {
            match groups.iter_mut().find(|(y, _)| y == x) {
                Some(g) => g.1 += m,
                None => groups.push((x.clone(), *m)),
            }
        }
        RootMultiset::new(groups).expect("merged groups are distinct")
    }
}

impl FromStr for RootMultiset {
    type Err = Error;

    /// Parses `"r^m,r^m,..."`; `^m` may be omitted, roots may be `num/den`.
    /// The empty string is the empty multiset.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(RootMultiset::empty());
        }
        let mut groups = Vec::new();
        for item in text.split(',') {
            let (root, mult) = match item.split_once('^') {
                Some((r, m)) => {
                    let m: usize = m
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad multiplicity in {item:?}")))?;
                    (r, m)
                }
                None => (item, 1),
            };
            if mult == 0 {
                return Err(Error::Parse(format!(
                    "multiplicity must be at least 1 in {item:?}"
                )));
            }
            groups.push((parse_scalar(root)?, mult));
        }
        RootMultiset::new(groups).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for RootMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .groups
            .iter()
            .map(|(x, m)| {
                if *m == 1 {
                    x.to_string()
                } else {
                    format!("{x}^{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// An ordered subset of flattened positions together with its signature
/// `s_K`: the sign of the permutation putting the full list in the order
/// `(complement) ‖ (subset)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetSelection {
    n: usize,
    positions: Vec<usize>,
    signature: i8,
}

impl SubsetSelection {
    pub fn new(n: usize, positions: Vec<usize>) -> Result<Self> {
        let sign = scalar::subset_signature(n, &positions)?;
        Ok(SubsetSelection {
            n,
            positions,
            signature: sign.value(),
        })
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn signature(&self) -> Sign {
        if self.signature == 1 {
            Sign::PLUS
        } else {
            Sign::MINUS
        }
    }

    pub fn complement(&self) -> Vec<usize> {
        scalar::complement(self.n, &self.positions)
    }
}

/// Product of all `(x - y)` for `x` in `a` and `y` in `b`.
pub fn pi_product(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::one();
    for x in a {
        for y in b {
            acc *= x - y;
        }
    }
    acc
}
