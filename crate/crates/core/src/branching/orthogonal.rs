//! Irreducible `O(n)` modules labelled by partitions with `ν*_1 + ν*_2 ≤ n`,
//! their `SO(n)` constituents, and `O(n) ↓ O(n−1)` branching by interlacing.

use std::collections::BTreeMap;

use super::character::{weyl_dimension, LieGroup};
use crate::partitions::Partition;

/// Whether `ν` labels an irreducible `O(n)` module.
pub fn o_admissible(nu: &Partition, n: usize) -> bool {
    let c = nu.conjugate();
    c.part(0) + c.part(1) <= n
}

/// Associated label: first column of length `ν*_1` replaced by `n − ν*_1`.
pub fn associate(nu: &Partition, n: usize) -> Partition {
    let mut c = nu.conjugate().parts().to_vec();
    let first = c.first().copied().unwrap_or(0);
    let new_first = n - first;
    if c.is_empty() {
        c.push(new_first);
    } else {
        c[0] = new_first;
    }
    c.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(c).expect("sorted").conjugate()
}

/// `SO(n)` highest weights occurring in the restriction of the `O(n)` module `ν`.
pub fn so_constituents(nu: &Partition, n: usize) -> Vec<Vec<i64>> {
    let m = n / 2;
    let base = if nu.length() > m { associate(nu, n) } else { nu.clone() };
    let hw: Vec<i64> = (0..m).map(|i| base.part(i) as i64).collect();
    if n.is_multiple_of(2) && m > 0 && base.length() == m {
        let mut neg = hw.clone();
        neg[m - 1] = -neg[m - 1];
        vec![hw, neg]
    } else {
        vec![hw]
    }
}

/// Dimension of the `O(n)` module `ν`.
pub fn o_dim(nu: &Partition, n: usize) -> u128 {
    so_constituents(nu, n).iter().map(|hw| weyl_dimension(LieGroup::SO(n), hw)).sum()
}

/// Labels `κ` with `ν_1 ≥ κ_1 ≥ ν_2 ≥ κ_2 ≥ …`.
pub fn interlacing(nu: &Partition) -> Vec<Partition> {
    fn go(nu: &Partition, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == nu.length() {
            out.push(Partition::new(cur.clone()).expect("interlacing is decreasing"));
            return;
        }
        for k in nu.part(i + 1)..=nu.part(i) {
            cur.push(k);
            go(nu, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(nu, 0, &mut Vec::new(), &mut out);
    out
}

/// `O(n) ↓ O(n−1)`: interlacing labels admissible for `O(n−1)`.
pub fn o_branch_one(nu: &Partition, n: usize) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    for k in interlacing(nu) {
        if o_admissible(&k, n - 1) {
            *out.entry(k).or_insert(0) += 1;
        }
    }
    out
}

/// `O(n) ↓ O(n−r)` by iterating the one-step rule.
pub fn o_branch(nu: &Partition, n: usize, r: usize) -> BTreeMap<Partition, u64> {
    let mut cur = BTreeMap::from([(nu.clone(), 1u64)]);
    for step in 0..r {
        let mut next = BTreeMap::new();
        for (k, m) in &cur {
            for (k2, m2) in o_branch_one(k, n - step) {
                *next.entry(k2).or_insert(0) += m * m2;
            }
        }
        cur = next;
    }
    cur
}

/// `(ν_1 − ν_n, …, ν_m − ν_{n−m+1})` with `m = ⌊n/2⌋`: the label the
/// cohomological K-types use for a partition with at most `n` rows.
pub fn reduced_label(nu: &Partition, n: usize) -> Partition {
    let m = n / 2;
    let parts = (0..m).map(|i| nu.part(i) - nu.part(n - 1 - i)).collect();
    Partition::new(parts).expect("differences of a partition's ends decrease")
}
