//! Finite partially ordered sets with an explicit cover relation.
//!
//! Everything downstream (orthodomains, Boolean domains, shadows, the
//! hypergraph view) is built on these posets, so the representation keeps
//! both the full order matrix and the cover list around.

use std::collections::BTreeSet;

use crate::error::CoreError;

/// A finite poset. Stores the full `leq` matrix, the cover relation, and the
/// height of every element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    size: usize,
    leq: Vec<bool>,
    covers: Vec<(usize, usize)>,
    height: Vec<usize>,
    labels: Vec<String>,
}

impl FinitePoset {
    /// Builds a poset from an arbitrary reflexive relation given as a `leq`
    /// predicate. Fails if the relation is not a partial order.
    pub fn from_leq<F>(size: usize, leq_fn: F) -> Result<Self, CoreError>
    where
        F: Fn(usize, usize) -> bool,
    {
        let mut leq = vec![false; size * size];
        for a in 0..size {
            for b in 0..size {
                leq[a * size + b] = leq_fn(a, b);
            }
        }
        Self::from_leq_matrix(size, leq)
    }

    fn from_leq_matrix(size: usize, leq: Vec<bool>) -> Result<Self, CoreError> {
        for a in 0..size {
            if !leq[a * size + a] {
                return Err(CoreError::NotAPartialOrder(format!("not reflexive at {a}")));
            }
            for b in 0..size {
                if a != b && leq[a * size + b] && leq[b * size + a] {
                    return Err(CoreError::NotAPartialOrder(format!(
                        "not antisymmetric at ({a},{b})"
                    )));
                }
                for c in 0..size {
                    if leq[a * size + b] && leq[b * size + c] && !leq[a * size + c] {
                        return Err(CoreError::NotAPartialOrder(format!(
                            "not transitive at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let mut covers = Vec::new();
        for a in 0..size {
            'next: for b in 0..size {
                if a == b || !leq[a * size + b] {
                    continue;
                }
                for c in 0..size {
                    if c != a && c != b && leq[a * size + c] && leq[c * size + b] {
                        continue 'next;
                    }
                }
                covers.push((a, b));
            }
        }
        covers.sort_unstable();
        let height = heights_from(size, &leq);
        Ok(FinitePoset {
            size,
            leq,
            covers,
            height,
            labels: (0..size).map(|i| format!("e{i}")).collect(),
        })
    }

    /// Builds a poset as the reflexive-transitive closure of a cover list.
    /// Fails on cycles.
    pub fn from_covers(size: usize, covers: &[(usize, usize)]) -> Result<Self, CoreError> {
        let mut leq = vec![false; size * size];
        for i in 0..size {
            leq[i * size + i] = true;
        }
        for &(lo, hi) in covers {
            if lo >= size || hi >= size {
                return Err(CoreError::Structural(format!(
                    "cover ({lo},{hi}) out of range for size {size}"
                )));
            }
            if lo == hi {
                return Err(CoreError::NotAPartialOrder(format!("cover loop at {lo}")));
            }
            leq[lo * size + hi] = true;
        }
        // Warshall closure.
        for k in 0..size {
            for a in 0..size {
                if leq[a * size + k] {
                    for b in 0..size {
                        if leq[k * size + b] {
                            leq[a * size + b] = true;
                        }
                    }
                }
            }
        }
        Self::from_leq_matrix(size, leq)
    }

    /// Poset of the given sets, ordered by inclusion.
    pub fn from_inclusion(sets: &[BTreeSet<usize>]) -> Result<Self, CoreError> {
        Self::from_leq(sets.len(), |a, b| sets[a].is_subset(&sets[b]))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn is_cover(&self, lo: usize, hi: usize) -> bool {
        self.covers.binary_search(&(lo, hi)).is_ok()
    }

    /// Elements covering `x`, ascending.
    pub fn upper_covers(&self, x: usize) -> Vec<usize> {
        self.covers.iter().filter(|&&(lo, _)| lo == x).map(|&(_, hi)| hi).collect()
    }

    /// Elements covered by `x`, ascending.
    pub fn lower_covers(&self, x: usize) -> Vec<usize> {
        let mut v: Vec<usize> =
            self.covers.iter().filter(|&&(_, hi)| hi == x).map(|&(lo, _)| lo).collect();
        v.sort_unstable();
        v
    }

    pub fn height(&self, x: usize) -> usize {
        self.height[x]
    }

    pub fn max_height(&self) -> usize {
        self.height.iter().copied().max().unwrap_or(0)
    }

    /// The unique least element, if there is one.
    pub fn bottom(&self) -> Option<usize> {
        (0..self.size).find(|&b| (0..self.size).all(|x| self.leq(b, x)))
    }

    pub fn atoms(&self) -> Vec<usize> {
        match self.bottom() {
            Some(b) => self.upper_covers(b),
            None => Vec::new(),
        }
    }

    /// Basic elements: the least element together with the atoms.
    pub fn basic_elements(&self) -> Vec<usize> {
        let mut v = Vec::new();
        if let Some(b) = self.bottom() {
            v.push(b);
            v.extend(self.upper_covers(b));
        }
        v.sort_unstable();
        v
    }

    pub fn is_basic(&self, x: usize) -> bool {
        self.basic_elements().contains(&x)
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.size).filter(|&x| (0..self.size).all(|y| !self.lt(x, y))).collect()
    }

    pub fn is_maximal(&self, x: usize) -> bool {
        (0..self.size).all(|y| !self.lt(x, y))
    }

    /// Principal ideal ↓x, ascending.
    pub fn down_set(&self, x: usize) -> Vec<usize> {
        (0..self.size).filter(|&y| self.leq(y, x)).collect()
    }

    /// Principal filter ↑x, ascending.
    pub fn up_set(&self, x: usize) -> Vec<usize> {
        (0..self.size).filter(|&y| self.leq(x, y)).collect()
    }

    /// Greatest lower bound of `{a, b}`, if it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lows: Vec<usize> =
            (0..self.size).filter(|&x| self.leq(x, a) && self.leq(x, b)).collect();
        unique_greatest(self, &lows)
    }

    /// Least upper bound of `{a, b}`, if it exists.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let ups: Vec<usize> =
            (0..self.size).filter(|&x| self.leq(a, x) && self.leq(b, x)).collect();
        unique_least(self, &ups)
    }

    /// Least upper bound of a set of elements, if it exists (the join of the
    /// empty set is the bottom element).
    pub fn join_of(&self, xs: &[usize]) -> Option<usize> {
        let ups: Vec<usize> =
            (0..self.size).filter(|&u| xs.iter().all(|&x| self.leq(x, u))).collect();
        unique_least(self, &ups)
    }

    pub fn is_lattice(&self) -> bool {
        if self.size == 0 {
            return false;
        }
        for a in 0..self.size {
            for b in a + 1..self.size {
                if self.meet(a, b).is_none() || self.join(a, b).is_none() {
                    return false;
                }
            }
        }
        true
    }

    /// Restriction to `elems` (which must be ascending). Returns the subposet;
    /// local index `i` corresponds to global element `elems[i]`.
    pub fn subposet(&self, elems: &[usize]) -> FinitePoset {
        let n = elems.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = self.leq(elems[i], elems[j]);
            }
        }
        let mut sub = FinitePoset::from_leq_matrix(n, leq).expect("restriction of a poset");
        sub.labels = elems.iter().map(|&g| self.labels[g].clone()).collect();
        sub
    }

    /// Subposet of all elements of height at most `h`.
    pub fn truncate_height(&self, h: usize) -> FinitePoset {
        let elems: Vec<usize> = (0..self.size).filter(|&x| self.height[x] <= h).collect();
        self.subposet(&elems)
    }

    /// Elements of height at most `h`, ascending (global indices).
    pub fn elements_of_height_at_most(&self, h: usize) -> Vec<usize> {
        (0..self.size).filter(|&x| self.height[x] <= h).collect()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.size);
        self.labels = labels;
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

fn heights_from(size: usize, leq: &[bool]) -> Vec<usize> {
    // Height = length of the longest chain below; computed by scanning in
    // order of down-set size.
    let mut order: Vec<usize> = (0..size).collect();
    let downsize =
        |x: usize| -> usize { (0..size).filter(|&y| leq[y * size + x]).count() };
    order.sort_by_key(|&x| downsize(x));
    let mut height = vec![0usize; size];
    for &x in &order {
        for y in 0..size {
            if y != x && leq[y * size + x] {
                height[x] = height[x].max(height[y] + 1);
            }
        }
    }
    height
}

fn unique_greatest(p: &FinitePoset, xs: &[usize]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for &x in xs {
        if xs.iter().all(|&y| p.leq(y, x)) {
            best = Some(x);
            break;
        }
    }
    best
}

fn unique_least(p: &FinitePoset, xs: &[usize]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for &x in xs {
        if xs.iter().all(|&y| p.leq(x, y)) {
            best = Some(x);
            break;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_heights_and_covers() {
        let p = FinitePoset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p.bottom(), Some(0));
        assert_eq!(p.height(2), 2);
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
        assert!(p.leq(0, 2));
        assert!(p.is_lattice());
    }

    #[test]
    fn diamond_meets_and_joins() {
        // 0 < {1,2} < 3
        let p = FinitePoset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(p.meet(1, 2), Some(0));
        assert_eq!(p.join(1, 2), Some(3));
        assert_eq!(p.atoms(), vec![1, 2]);
        assert_eq!(p.basic_elements(), vec![0, 1, 2]);
    }

    #[test]
    fn no_join_when_two_minimal_upper_bounds() {
        // two atoms with two incomparable upper bounds
        let p = FinitePoset::from_covers(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4)])
            .unwrap();
        assert_eq!(p.join(1, 2), None);
        assert!(!p.is_lattice());
    }

    #[test]
    fn cycle_is_rejected() {
        assert!(FinitePoset::from_covers(2, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn truncation_keeps_low_elements() {
        let p = FinitePoset::from_covers(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let t = p.truncate_height(2);
        assert_eq!(t.size(), 3);
        assert_eq!(t.max_height(), 2);
    }
}
