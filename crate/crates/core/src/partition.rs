//! Partition lattices, used as the trusted comparator for Boolean domains.
//!
//! `partition_lattice(k)` is the lattice of partitions of a k-element set.
//! The bottom is the one-block (coarsest) partition and the top is the
//! all-singletons partition, matching the orientation of a poset of Boolean
//! subalgebras: coarser partition = smaller subalgebra.

use std::sync::OnceLock;

use crate::poset::FinitePoset;

pub const MAX_PARTITION_POINTS: usize = 6;

/// Bell numbers B(0)..B(6).
pub const BELL: [usize; 7] = [1, 1, 2, 5, 15, 52, 203];

/// All partitions of `{0..k-1}` as restricted growth strings.
pub fn set_partitions(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; k];
    fn rec(cur: &mut Vec<usize>, i: usize, max_used: usize, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max_used + 1 {
            cur[i] = b;
            rec(cur, i + 1, max_used.max(b), out);
        }
    }
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    cur[0] = 0;
    rec(&mut cur, 1, 0, &mut out);
    out
}

/// `a` is coarser-or-equal than `b`: every block of `b` is inside a block of `a`.
fn refines(a: &[usize], b: &[usize]) -> bool {
    // b refines a iff elements in the same b-block are in the same a-block.
    let k = a.len();
    for i in 0..k {
        for j in i + 1..k {
            if b[i] == b[j] && a[i] != a[j] {
                return false;
            }
        }
    }
    true
}

/// The lattice of partitions of a k-element set, `1 <= k <= 6`, ordered with
/// the coarsest partition at the bottom. Cached per k.
pub fn partition_lattice(k: usize) -> &'static FinitePoset {
    assert!(k >= 1 && k <= MAX_PARTITION_POINTS, "partition lattice out of range");
    static CACHE: OnceLock<Vec<FinitePoset>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        (1..=MAX_PARTITION_POINTS)
            .map(|k| {
                let parts = set_partitions(k);
                FinitePoset::from_leq(parts.len(), |a, b| refines(&parts[a], &parts[b]))
                    .expect("refinement is a partial order")
            })
            .collect()
    });
    &all[k - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_counts() {
        for k in 1..=6 {
            assert_eq!(set_partitions(k).len(), BELL[k]);
            assert_eq!(partition_lattice(k).size(), BELL[k]);
        }
    }

    #[test]
    fn pi4_shape() {
        // 1 + 7 + 6 + 1 by height
        let p = partition_lattice(4);
        let mut by_height = [0usize; 4];
        for x in 0..p.size() {
            by_height[p.height(x)] += 1;
        }
        assert_eq!(by_height, [1, 7, 6, 1]);
        assert!(p.is_lattice());
    }

    #[test]
    fn pi_k_height_is_k_minus_1() {
        for k in 1..=6 {
            assert_eq!(partition_lattice(k).max_height(), k - 1);
        }
    }
}
