//! Isomorphism searches: posets by backtracking over cover graphs with
//! iterated invariant refinement, and orthoalgebras by backtracking over
//! sum tables. Instances here are small (a few hundred elements), so
//! completeness is the priority, with refinement doing the pruning.

use std::collections::HashMap;

use crate::oa::OrthoAlgebra;
use crate::poset::FinitePoset;

/// Stable colouring of a poset: start from (height, up-degree, down-degree)
/// and refine by neighbour colour multisets until a fixpoint.
fn refine_colors(p: &FinitePoset) -> Vec<u64> {
    let n = p.size();
    let up: Vec<Vec<usize>> = (0..n).map(|x| p.upper_covers(x)).collect();
    let dn: Vec<Vec<usize>> = (0..n).map(|x| p.lower_covers(x)).collect();
    let mut color: Vec<u64> = (0..n)
        .map(|x| {
            let key = (p.height(x) as u64) << 32 | (up[x].len() as u64) << 16 | dn[x].len() as u64;
            key
        })
        .collect();
    loop {
        let mut sig: Vec<(u64, Vec<u64>, Vec<u64>)> = Vec::with_capacity(n);
        for x in 0..n {
            let mut us: Vec<u64> = up[x].iter().map(|&y| color[y]).collect();
            let mut ds: Vec<u64> = dn[x].iter().map(|&y| color[y]).collect();
            us.sort_unstable();
            ds.sort_unstable();
            sig.push((color[x], us, ds));
        }
        let mut palette: HashMap<&(u64, Vec<u64>, Vec<u64>), u64> = HashMap::new();
        let mut sorted: Vec<&(u64, Vec<u64>, Vec<u64>)> = sig.iter().collect();
        sorted.sort();
        sorted.dedup();
        for (i, s) in sorted.iter().enumerate() {
            palette.insert(s, i as u64);
        }
        let next: Vec<u64> = (0..n).map(|x| palette[&sig[x]]).collect();
        if next == color {
            return color;
        }
        color = next;
    }
}

fn color_histogram(colors: &[u64]) -> Vec<(u64, usize)> {
    let mut h: HashMap<u64, usize> = HashMap::new();
    for &c in colors {
        *h.entry(c).or_insert(0) += 1;
    }
    let mut v: Vec<(u64, usize)> = h.into_iter().collect();
    v.sort_unstable();
    v
}

/// Finds a poset isomorphism `p -> q` (as a vector mapping indices of `p` to
/// indices of `q`), or `None` if the posets are non-isomorphic. The search is
/// exhaustive, so `None` is a proof of non-isomorphism.
pub fn poset_isomorphism(p: &FinitePoset, q: &FinitePoset) -> Option<Vec<usize>> {
    if p.size() != q.size() || p.covers().len() != q.covers().len() {
        return None;
    }
    let n = p.size();
    if n == 0 {
        return Some(Vec::new());
    }
    let cp = refine_colors(p);
    let cq = refine_colors(q);
    if color_histogram(&cp) != color_histogram(&cq) {
        return None;
    }

    // Order the elements of p most-constrained first: rarest colour class,
    // then highest degree.
    let mut order: Vec<usize> = (0..n).collect();
    let hist = color_histogram(&cp);
    let class_size: HashMap<u64, usize> = hist.into_iter().collect();
    order.sort_by_key(|&x| {
        (
            class_size[&cp[x]],
            usize::MAX - (p.upper_covers(x).len() + p.lower_covers(x).len()),
            x,
        )
    });

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn compatible(
        p: &FinitePoset,
        q: &FinitePoset,
        map: &[usize],
        placed: &[usize],
        x: usize,
        y: usize,
    ) -> bool {
        for &x2 in placed {
            let y2 = map[x2];
            if p.leq(x, x2) != q.leq(y, y2) || p.leq(x2, x) != q.leq(y2, y) {
                return false;
            }
        }
        true
    }
    fn search(
        p: &FinitePoset,
        q: &FinitePoset,
        cp: &[u64],
        cq: &[u64],
        order: &[usize],
        pos: usize,
        placed: &mut Vec<usize>,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let x = order[pos];
        for y in 0..q.size() {
            if used[y] || cq[y] != cp[x] {
                continue;
            }
            if !compatible(p, q, map, placed, x, y) {
                continue;
            }
            map[x] = y;
            used[y] = true;
            placed.push(x);
            if search(p, q, cp, cq, order, pos + 1, placed, map, used) {
                return true;
            }
            placed.pop();
            used[y] = false;
            map[x] = usize::MAX;
        }
        false
    }
    let mut placed = Vec::new();
    if search(p, q, &cp, &cq, &order, 0, &mut placed, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

pub fn posets_isomorphic(p: &FinitePoset, q: &FinitePoset) -> bool {
    poset_isomorphism(p, q).is_some()
}

/// Per-element invariants used to prune the orthoalgebra isomorphism search.
fn oa_invariants(a: &OrthoAlgebra) -> Vec<(usize, usize, usize, bool)> {
    let n = a.size();
    (0..n)
        .map(|x| {
            let defined = (0..n).filter(|&y| a.oplus(x, y).is_some()).count();
            let below = (0..n).filter(|&y| a.leq(y, x)).count();
            let above = (0..n).filter(|&y| a.leq(x, y)).count();
            (defined, below, above, x == a.zero() || x == a.one())
        })
        .collect()
}

/// Finds an orthoalgebra isomorphism `a -> c` (bijection preserving the
/// orthocomplement and the partial sum in both directions), or `None`.
/// Exhaustive: `None` proves the algebras are non-isomorphic.
pub fn oa_isomorphism(a: &OrthoAlgebra, c: &OrthoAlgebra) -> Option<Vec<usize>> {
    if a.size() != c.size() {
        return None;
    }
    let n = a.size();
    let ia = oa_invariants(a);
    let ic = oa_invariants(c);
    let mut ha = ia.clone();
    let mut hc = ic.clone();
    ha.sort_unstable();
    hc.sort_unstable();
    if ha != hc {
        return None;
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if n > 0 {
        map[a.zero()] = c.zero();
        used[c.zero()] = true;
        if a.one() != a.zero() {
            map[a.one()] = c.one();
            used[c.one()] = true;
        }
    }
    // Assign in order of rarest invariant.
    let mut freq: HashMap<(usize, usize, usize, bool), usize> = HashMap::new();
    for inv in &ia {
        *freq.entry(*inv).or_insert(0) += 1;
    }
    let mut order: Vec<usize> =
        (0..n).filter(|&x| x != a.zero() && x != a.one()).collect();
    order.sort_by_key(|&x| (freq[&ia[x]], x));

    fn consistent(
        a: &OrthoAlgebra,
        c: &OrthoAlgebra,
        map: &[usize],
        x: usize,
        y: usize,
    ) -> bool {
        // comp: if x' already placed it must match y'.
        let xp = a.comp(x);
        if map[xp] != usize::MAX && map[xp] != c.comp(y) {
            return false;
        }
        // sums against every placed element.
        for v in 0..a.size() {
            if map[v] == usize::MAX {
                continue;
            }
            match (a.oplus(x, v), c.oplus(y, map[v])) {
                (None, None) => {}
                (Some(s), Some(t)) => {
                    if map[s] != usize::MAX && map[s] != t {
                        return false;
                    }
                }
                _ => return false,
            }
        }
        true
    }
    fn search(
        a: &OrthoAlgebra,
        c: &OrthoAlgebra,
        ia: &[(usize, usize, usize, bool)],
        ic: &[(usize, usize, usize, bool)],
        order: &[usize],
        pos: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let x = order[pos];
        if map[x] != usize::MAX {
            return search(a, c, ia, ic, order, pos + 1, map, used);
        }
        for y in 0..c.size() {
            if used[y] || ic[y] != ia[x] {
                continue;
            }
            if !consistent(a, c, map, x, y) {
                continue;
            }
            map[x] = y;
            used[y] = true;
            // Place the orthocomplement together with x; it is forced.
            let xp = a.comp(x);
            let yp = c.comp(y);
            let forced = map[xp] == usize::MAX && xp != x;
            if forced {
                if used[yp] || ic[yp] != ia[xp] || !consistent(a, c, map, xp, yp) {
                    map[x] = usize::MAX;
                    used[y] = false;
                    continue;
                }
                map[xp] = yp;
                used[yp] = true;
            }
            if search(a, c, ia, ic, order, pos + 1, map, used) {
                return true;
            }
            if forced {
                map[xp] = usize::MAX;
                used[yp] = false;
            }
            map[x] = usize::MAX;
            used[y] = false;
        }
        false
    }
    if search(a, c, &ia, &ic, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

pub fn oas_isomorphic(a: &OrthoAlgebra, c: &OrthoAlgebra) -> bool {
    oa_isomorphism(a, c).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partition_lattice;
    use crate::poset::FinitePoset;

    #[test]
    fn chain_vs_fork() {
        let chain = FinitePoset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        let fork = FinitePoset::from_covers(3, &[(0, 1), (0, 2)]).unwrap();
        assert!(poset_isomorphism(&chain, &fork).is_none());
    }

    #[test]
    fn relabelled_diamond() {
        let p = FinitePoset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let q = FinitePoset::from_covers(4, &[(3, 2), (3, 1), (2, 0), (1, 0)]).unwrap();
        let m = poset_isomorphism(&p, &q).unwrap();
        assert_eq!(m[0], 3);
        assert_eq!(m[3], 0);
    }

    #[test]
    fn big_partition_lattice_self_iso() {
        let p = partition_lattice(6);
        assert!(poset_isomorphism(p, p).is_some());
    }
}
