//! Shared proptest strategies.

use proptest::prelude::*;

use crate::roots::RootMultiset;
use crate::scalar::int;

/// Root multisets with integer roots in `[-9, 9]`, multiplicities at most 3
/// and total size between `min_len` and `max_len`.
pub fn multiset(min_len: usize, max_len: usize) -> impl Strategy<Value = RootMultiset> {
    prop::collection::vec((-9i64..=9, 1usize..=3), 0..=max_len)
        .prop_map(move |raw| {
            let mut groups: Vec<(i64, usize)> = Vec::new();
            let mut total = 0;
            for (x, m) in raw {
                if groups.iter().any(|g| g.0 == x) {
                    continue;
                }
                let m = m.min(max_len - total);
                if m == 0 {
                    break;
                }
                total += m;
                groups.push((x, m));
            }
            groups
        })
        .prop_filter("too few roots", move |g| {
            g.iter().map(|x| x.1).sum::<usize>() >= min_len
        })
        .prop_map(|g| RootMultiset::new(g.into_iter().map(|(x, m)| (int(x), m)).collect()).unwrap())
}

/// Distinct integer roots in `[-9, 9]`.
pub fn simple_roots(min_len: usize, max_len: usize) -> impl Strategy<Value = RootMultiset> {
    prop::collection::btree_set(-9i64..=9, min_len..=max_len)
        .prop_map(|s| RootMultiset::simple(s.into_iter().map(int).collect()).unwrap())
}
