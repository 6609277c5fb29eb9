//! Finite orthoalgebras: a carrier with a partial orthogonal sum, an
//! orthocomplement involution, and constants 0, 1. Elements are indices
//! `0..size`, with `zero = 0` and `one = 1` (they coincide only for the
//! one-element algebra).

use std::collections::BTreeSet;

use crate::error::CoreError;
use crate::poset::FinitePoset;

pub(crate) const UNDEF: u32 = u32::MAX;

/// Default cap on the carrier size for subalgebra enumeration.
pub const DEFAULT_SIZE_CAP: usize = 64;
/// Default budget on the number of Boolean subalgebras enumerated.
pub const DEFAULT_SUBALGEBRA_CAP: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumCap {
    pub max_size: usize,
    pub max_subalgebras: usize,
}

impl Default for EnumCap {
    fn default() -> Self {
        EnumCap { max_size: DEFAULT_SIZE_CAP, max_subalgebras: DEFAULT_SUBALGEBRA_CAP }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthoAlgebra {
    name: String,
    size: usize,
    comp: Vec<u32>,
    sum: Vec<u32>,
    labels: Vec<String>,
}

impl OrthoAlgebra {
    /// Builds and validates an orthoalgebra from its parts. `sum_entries`
    /// lists each defined unordered pair once as `(a, b, a ⊕ b)`.
    pub fn from_parts(
        name: impl Into<String>,
        size: usize,
        comp: Vec<u32>,
        sum_entries: &[(u32, u32, u32)],
        labels: Option<Vec<String>>,
    ) -> Result<Self, CoreError> {
        let oa = Self::from_parts_unchecked(name, size, comp, sum_entries, labels)?;
        let report = crate::validate::validate_orthoalgebra_table(&oa);
        if report.is_ok() {
            Ok(oa)
        } else {
            Err(CoreError::NotAnOrthoAlgebra(report))
        }
    }

    /// Builds the table without running the axiom validator. Structural
    /// problems (out-of-range indices, conflicting entries) are still errors.
    pub(crate) fn from_parts_unchecked(
        name: impl Into<String>,
        size: usize,
        comp: Vec<u32>,
        sum_entries: &[(u32, u32, u32)],
        labels: Option<Vec<String>>,
    ) -> Result<Self, CoreError> {
        if size == 0 {
            return Err(CoreError::Structural("empty carrier".into()));
        }
        if comp.len() != size {
            return Err(CoreError::Structural(format!(
                "comp has {} entries for size {}",
                comp.len(),
                size
            )));
        }
        if let Some(&bad) = comp.iter().find(|&&c| c as usize >= size) {
            return Err(CoreError::Structural(format!("comp value {bad} out of range")));
        }
        let mut sum = vec![UNDEF; size * size];
        for &(a, b, c) in sum_entries {
            let (a, b, c) = (a as usize, b as usize, c as usize);
            if a >= size || b >= size || c >= size {
                return Err(CoreError::Structural(format!(
                    "sum entry ({a},{b},{c}) out of range"
                )));
            }
            for (x, y) in [(a, b), (b, a)] {
                let old = sum[x * size + y];
                if old != UNDEF && old as usize != c {
                    return Err(CoreError::Structural(format!(
                        "conflicting sum entries for ({x},{y}): {old} vs {c}"
                    )));
                }
                sum[x * size + y] = c as u32;
            }
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != size {
                    return Err(CoreError::Structural(format!(
                        "labels has {} entries for size {}",
                        l.len(),
                        size
                    )));
                }
                l
            }
            None => (0..size).map(|i| format!("e{i}")).collect(),
        };
        Ok(OrthoAlgebra { name: name.into(), size, comp, sum, labels })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        if self.size == 1 {
            0
        } else {
            1
        }
    }

    pub fn comp(&self, a: usize) -> usize {
        self.comp[a] as usize
    }

    /// The partial orthogonal sum. `None` means undefined, which is a value,
    /// not an error.
    pub fn oplus(&self, a: usize, b: usize) -> Option<usize> {
        let v = self.sum[a * self.size + b];
        if v == UNDEF {
            None
        } else {
            Some(v as usize)
        }
    }

    pub fn orthogonal(&self, a: usize, b: usize) -> bool {
        self.oplus(a, b).is_some()
    }

    /// Derived order: `a <= c` iff `a ⊕ b = c` for some `b`.
    pub fn leq(&self, a: usize, c: usize) -> bool {
        (0..self.size).any(|b| self.oplus(a, b) == Some(c))
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.size);
        self.labels = labels;
    }

    pub(crate) fn sum_entries(&self) -> Vec<(u32, u32, u32)> {
        let mut out = Vec::new();
        for a in 0..self.size {
            for b in a..self.size {
                let v = self.sum[a * self.size + b];
                if v != UNDEF {
                    out.push((a as u32, b as u32, v));
                }
            }
        }
        out
    }

    pub(crate) fn comp_table(&self) -> &[u32] {
        &self.comp
    }

    /// The derived order as a poset (useful for Hasse export and the
    /// order-oracle self check).
    pub fn order_poset(&self) -> Result<FinitePoset, CoreError> {
        let mut p = FinitePoset::from_leq(self.size, |a, b| self.leq(a, b))?;
        p.set_labels(self.labels.clone());
        Ok(p)
    }

    /// Iterated sum of a finite subset: defined when some enumeration of the
    /// set makes the left-folded sum defined (all enumerations then agree on
    /// valid algebras). Implemented as dynamic programming over subsets so
    /// that every enumeration order is covered.
    pub fn big_oplus(&self, set: &BTreeSet<usize>) -> Option<usize> {
        let elems: Vec<usize> = set.iter().copied().collect();
        let k = elems.len();
        assert!(k <= 20, "big_oplus supports at most 20 elements");
        let mut dp: Vec<Option<usize>> = vec![None; 1 << k];
        dp[0] = Some(self.zero());
        for mask in 1usize..(1 << k) {
            for i in 0..k {
                if mask & (1 << i) == 0 {
                    continue;
                }
                if let Some(prev) = dp[mask ^ (1 << i)] {
                    if let Some(v) = self.oplus(prev, elems[i]) {
                        dp[mask] = Some(v);
                        break;
                    }
                }
            }
        }
        dp[(1 << k) - 1]
    }

    /// Left-fold of the elements in the given order; `None` as soon as a
    /// partial sum is undefined. Used by tests to check enumeration
    /// invariance of `big_oplus`.
    pub fn fold_oplus(&self, order: &[usize]) -> Option<usize> {
        let mut acc = self.zero();
        for &x in order {
            acc = self.oplus(acc, x)?;
        }
        Some(acc)
    }

    /// A finite set is jointly orthogonal if its iterated sum is defined.
    pub fn jointly_orthogonal(&self, set: &BTreeSet<usize>) -> bool {
        self.big_oplus(set).is_some()
    }

    /// Smallest subalgebra containing `seed`: close `seed ∪ {0, 1}` under
    /// orthocomplement and defined sums.
    pub fn generated_subalgebra(&self, seed: &BTreeSet<usize>) -> SubalgebraSet {
        let mut members = vec![false; self.size];
        members[self.zero()] = true;
        members[self.one()] = true;
        for &s in seed {
            members[s] = true;
        }
        loop {
            let mut changed = false;
            let present: Vec<usize> = (0..self.size).filter(|&x| members[x]).collect();
            for &a in &present {
                let c = self.comp(a);
                if !members[c] {
                    members[c] = true;
                    changed = true;
                }
                for &b in &present {
                    if let Some(s) = self.oplus(a, b) {
                        if !members[s] {
                            members[s] = true;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        SubalgebraSet { members: (0..self.size).filter(|&x| members[x]).collect() }
    }

    /// Minimal nonzero elements of a subset under the derived order.
    fn minimal_nonzero(&self, members: &BTreeSet<usize>) -> Vec<usize> {
        members
            .iter()
            .copied()
            .filter(|&x| x != self.zero())
            .filter(|&x| {
                members
                    .iter()
                    .all(|&y| y == self.zero() || y == x || !self.leq(y, x))
            })
            .collect()
    }

    /// Is the (closed) subset a Boolean subalgebra? True iff its minimal
    /// nonzero elements form a partition of unity whose subset-sums exhaust
    /// it. Errors if the subset is not closed.
    pub fn is_boolean(&self, s: &SubalgebraSet) -> Result<bool, CoreError> {
        s.check_closed(self)?;
        let atoms = self.minimal_nonzero(&s.members);
        if atoms.len() > 20 {
            return Ok(false);
        }
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        for mask in 0usize..(1 << atoms.len()) {
            let subset: BTreeSet<usize> =
                atoms.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &a)| a).collect();
            match self.big_oplus(&subset) {
                Some(v) => {
                    seen.insert(v);
                }
                None => return Ok(false),
            }
        }
        Ok(seen == s.members && seen.len() == 1 << atoms.len())
    }

    /// All Boolean subalgebras, as the inclusion poset. Boolean subalgebras
    /// are in bijection with partitions of unity (their atom sets), which is
    /// how they are enumerated.
    pub fn enumerate_bsub(&self, cap: EnumCap) -> Result<BsubPoset, CoreError> {
        if self.size > cap.max_size {
            return Err(CoreError::CapExceeded(format!(
                "carrier size {} exceeds cap {}",
                self.size, cap.max_size
            )));
        }
        let mut found: Vec<BTreeSet<usize>> = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        self.partition_dfs(self.zero(), 1, &mut stack, &mut found, cap.max_subalgebras)?;
        let mut subs: Vec<BTreeSet<usize>> = found
            .into_iter()
            .map(|atoms| {
                let mut members = BTreeSet::new();
                // All subset-sums of a partition of unity; the partition is
                // small (at most log2 of the carrier), so 2^k is fine.
                let av: Vec<usize> = atoms.iter().copied().collect();
                for mask in 0usize..(1 << av.len()) {
                    let sub: BTreeSet<usize> = av
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, &a)| a)
                        .collect();
                    members.insert(self.big_oplus(&sub).expect("partition of unity"));
                }
                members
            })
            .collect();
        subs.sort_by(|a, b| {
            (a.len(), a.iter().collect::<Vec<_>>()).cmp(&(b.len(), b.iter().collect::<Vec<_>>()))
        });
        subs.dedup();
        let mut poset = FinitePoset::from_inclusion(&subs)?;
        let labels: Vec<String> = subs
            .iter()
            .map(|m| {
                let names: Vec<&str> = m.iter().map(|&x| self.label(x)).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        poset.set_labels(labels);
        Ok(BsubPoset { poset, members: subs.into_iter().map(|m| SubalgebraSet { members: m }).collect() })
    }

    /// DFS over index-increasing jointly orthogonal sequences of nonzero
    /// elements whose sum reaches 1; each emitted stack is the atom set of a
    /// Boolean subalgebra.
    fn partition_dfs(
        &self,
        acc: usize,
        next: usize,
        stack: &mut Vec<usize>,
        found: &mut Vec<BTreeSet<usize>>,
        budget: usize,
    ) -> Result<(), CoreError> {
        if acc == self.one() {
            if found.len() >= budget {
                return Err(CoreError::CapExceeded(format!(
                    "more than {budget} Boolean subalgebras"
                )));
            }
            found.push(stack.iter().copied().collect());
            return Ok(());
        }
        for x in next..self.size {
            if x == self.zero() {
                continue;
            }
            if let Some(s) = self.oplus(acc, x) {
                stack.push(x);
                self.partition_dfs(s, x + 1, stack, found, budget)?;
                stack.pop();
            }
        }
        Ok(())
    }

    /// Maximal Boolean subalgebras.
    pub fn blocks(&self, cap: EnumCap) -> Result<Vec<SubalgebraSet>, CoreError> {
        let bsub = self.enumerate_bsub(cap)?;
        Ok(bsub
            .poset
            .maximal_elements()
            .into_iter()
            .map(|i| bsub.members[i].clone())
            .collect())
    }

    /// A proper orthoalgebra has no small blocks (blocks with at most 4
    /// elements).
    pub fn is_proper(&self, cap: EnumCap) -> Result<bool, CoreError> {
        Ok(self.blocks(cap)?.iter().all(|b| b.members.len() > 4))
    }

    /// Standard characterization of orthomodular posets among orthoalgebras:
    /// the sum of every orthogonal pair is the least upper bound of the pair.
    pub fn is_orthomodular_poset(&self) -> bool {
        for a in 0..self.size {
            for b in 0..self.size {
                if let Some(c) = self.oplus(a, b) {
                    for u in 0..self.size {
                        if self.leq(a, u) && self.leq(b, u) && !self.leq(c, u) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Removes the small blocks, leaving the orthoalgebra Ã. Errors when the
    /// algebra is trivial or has only small blocks.
    pub fn remove_small_blocks(&self, cap: EnumCap) -> Result<OrthoAlgebra, CoreError> {
        if self.size <= 2 {
            return Err(CoreError::Trivial);
        }
        let blocks = self.blocks(cap)?;
        if blocks.iter().all(|b| b.members.len() <= 4) {
            return Err(CoreError::OnlySmallBlocks);
        }
        let mut drop = vec![false; self.size];
        for b in &blocks {
            if b.members.len() <= 4 {
                for &x in &b.members {
                    if x != self.zero() && x != self.one() {
                        drop[x] = true;
                    }
                }
            }
        }
        let keep: Vec<usize> = (0..self.size).filter(|&x| !drop[x]).collect();
        let index: Vec<Option<usize>> = {
            let mut v = vec![None; self.size];
            for (new, &old) in keep.iter().enumerate() {
                v[old] = Some(new);
            }
            v
        };
        let comp: Vec<u32> = keep.iter().map(|&x| index[self.comp(x)].unwrap() as u32).collect();
        let mut entries = Vec::new();
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate().skip(i) {
                if let Some(s) = self.oplus(a, b) {
                    let _ = j;
                    entries.push((i as u32, index[b].unwrap() as u32, index[s].unwrap() as u32));
                }
            }
        }
        let labels: Vec<String> = keep.iter().map(|&x| self.label(x).to_string()).collect();
        OrthoAlgebra::from_parts(format!("{}~", self.name), keep.len(), comp, &entries, Some(labels))
    }
}

/// A subset of an orthoalgebra's carrier intended to be closed under the
/// operations.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubalgebraSet {
    pub members: BTreeSet<usize>,
}

impl SubalgebraSet {
    pub fn new(members: BTreeSet<usize>) -> Self {
        SubalgebraSet { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(&x)
    }

    /// Checks the subalgebra invariants: contains 0 and 1, closed under the
    /// orthocomplement and under defined sums.
    pub fn check_closed(&self, parent: &OrthoAlgebra) -> Result<(), CoreError> {
        if let Some(&x) = self.members.iter().find(|&&x| x >= parent.size()) {
            return Err(CoreError::NotClosed(format!("member {x} out of range")));
        }
        if !self.contains(parent.zero()) || !self.contains(parent.one()) {
            return Err(CoreError::NotClosed("missing 0 or 1".into()));
        }
        for &a in &self.members {
            if !self.contains(parent.comp(a)) {
                return Err(CoreError::NotClosed(format!(
                    "missing complement of {a}"
                )));
            }
            for &b in &self.members {
                if let Some(s) = parent.oplus(a, b) {
                    if !self.contains(s) {
                        return Err(CoreError::NotClosed(format!(
                            "missing {a} ⊕ {b}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Intersection with another subset (intersections of subalgebras are
    /// subalgebras, though not necessarily Boolean ones).
    pub fn intersect(&self, other: &SubalgebraSet) -> SubalgebraSet {
        SubalgebraSet { members: self.members.intersection(&other.members).copied().collect() }
    }
}

/// The poset of all Boolean subalgebras of an orthoalgebra, ordered by
/// inclusion; element `i` of the poset carries member set `members[i]`.
#[derive(Debug, Clone)]
pub struct BsubPoset {
    pub poset: FinitePoset,
    pub members: Vec<SubalgebraSet>,
}

impl BsubPoset {
    /// Index of the subalgebra with exactly the given member set.
    pub fn index_of(&self, members: &BTreeSet<usize>) -> Option<usize> {
        self.members.iter().position(|m| &m.members == members)
    }

    /// Index of the basic element `x_a = {0, a, a', 1}` for an element `a`
    /// of the parent algebra.
    pub fn basic_of(&self, parent: &OrthoAlgebra, a: usize) -> Option<usize> {
        let set: BTreeSet<usize> =
            [parent.zero(), a, parent.comp(a), parent.one()].into_iter().collect();
        self.index_of(&set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn oplus_unit_law() {
        let a = catalog::power_set(3).unwrap();
        for x in 0..a.size() {
            assert_eq!(a.oplus(x, a.zero()), Some(x));
        }
    }

    #[test]
    fn leq_is_subset_order_on_power_set() {
        let a = catalog::power_set(3).unwrap();
        // index of {1} and {1,2}: find via labels
        let i1 = a.labels().iter().position(|l| l == "1").unwrap();
        let i12 = a.labels().iter().position(|l| l == "12").unwrap();
        assert!(a.leq(i1, i12));
        assert!(!a.leq(i12, i1));
        for x in 0..a.size() {
            assert!(a.leq(a.zero(), x));
        }
    }

    #[test]
    fn mo2_atoms_incomparable_across_blocks() {
        let a = catalog::mo(2).unwrap();
        // atoms: indices 2..6 (two blocks of two atoms)
        for x in 2..6 {
            for y in 2..6 {
                if x != y && a.comp(x) != y {
                    assert!(!a.leq(x, y), "{x} vs {y}");
                }
            }
        }
    }

    #[test]
    fn big_oplus_empty_is_zero() {
        let a = catalog::power_set(2).unwrap();
        assert_eq!(a.big_oplus(&BTreeSet::new()), Some(a.zero()));
    }

    #[test]
    fn big_oplus_complement_pair_is_one() {
        let a = catalog::power_set(3).unwrap();
        for x in 0..a.size() {
            let s: BTreeSet<usize> = [x, a.comp(x)].into_iter().collect();
            if x != a.comp(x) {
                assert_eq!(a.big_oplus(&s), Some(a.one()));
            }
        }
    }

    #[test]
    fn big_oplus_all_atoms_of_power_set() {
        let a = catalog::power_set(4).unwrap();
        let atoms: BTreeSet<usize> =
            (0..a.size()).filter(|&x| a.label(x).len() == 1).collect();
        assert_eq!(atoms.len(), 4);
        assert_eq!(a.big_oplus(&atoms), Some(a.one()));
    }

    #[test]
    fn generated_subalgebra_of_empty_seed() {
        let a = catalog::power_set(4).unwrap();
        let s = a.generated_subalgebra(&BTreeSet::new());
        assert_eq!(s.members.len(), 2);
    }

    #[test]
    fn generated_subalgebra_singleton_and_chain() {
        let a = catalog::power_set(4).unwrap();
        let i1 = a.labels().iter().position(|l| l == "1").unwrap();
        let i12 = a.labels().iter().position(|l| l == "12").unwrap();
        let s = a.generated_subalgebra(&[i1].into_iter().collect());
        assert_eq!(s.members.len(), 4);
        let s2 = a.generated_subalgebra(&[i1, i12].into_iter().collect());
        assert_eq!(s2.members.len(), 8);
    }

    #[test]
    fn is_boolean_trivial_and_mo2() {
        let a = catalog::mo(2).unwrap();
        let bottom = SubalgebraSet::new([a.zero(), a.one()].into_iter().collect());
        assert!(a.is_boolean(&bottom).unwrap());
        let whole = SubalgebraSet::new((0..a.size()).collect());
        assert!(!a.is_boolean(&whole).unwrap());
    }

    #[test]
    fn is_boolean_rejects_non_closed() {
        let a = catalog::power_set(3).unwrap();
        let s = SubalgebraSet::new([a.zero()].into_iter().collect());
        assert!(matches!(a.is_boolean(&s), Err(CoreError::NotClosed(_))));
    }

    #[test]
    fn bsub_counts_for_booleans() {
        for (n, count) in [(2, 2), (3, 5), (4, 15), (5, 52)] {
            let a = catalog::power_set(n).unwrap();
            let b = a.enumerate_bsub(EnumCap::default()).unwrap();
            assert_eq!(b.poset.size(), count, "BSub(2^{n})");
        }
    }

    #[test]
    fn bsub_bottom_is_zero_one() {
        let a = catalog::mo(2).unwrap();
        let b = a.enumerate_bsub(EnumCap::default()).unwrap();
        let bot = b.poset.bottom().unwrap();
        assert_eq!(b.members[bot].members.len(), 2);
        assert_eq!(b.poset.size(), 3);
        // both atoms maximal
        assert_eq!(b.poset.maximal_elements().len(), 2);
    }

    #[test]
    fn cap_errors() {
        let a = catalog::power_set(4).unwrap();
        let r = a.enumerate_bsub(EnumCap { max_size: 8, max_subalgebras: 10 });
        assert!(matches!(r, Err(CoreError::CapExceeded(_))));
        let r2 = a.enumerate_bsub(EnumCap { max_size: 64, max_subalgebras: 3 });
        assert!(matches!(r2, Err(CoreError::CapExceeded(_))));
    }

    #[test]
    fn blocks_of_mo2_are_small() {
        let a = catalog::mo(2).unwrap();
        let blocks = a.blocks(EnumCap::default()).unwrap();
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().all(|b| b.len() == 4));
        assert!(!a.is_proper(EnumCap::default()).unwrap());
    }

    #[test]
    fn power_sets_are_omps() {
        for n in 1..=4 {
            assert!(catalog::power_set(n).unwrap().is_orthomodular_poset());
        }
    }

    #[test]
    fn remove_small_blocks_cases() {
        let p3 = catalog::power_set(3).unwrap();
        let m1 = catalog::mo(1).unwrap();
        let glued = catalog::horizontal_sum(&[p3.clone(), m1]).unwrap();
        let stripped = glued.remove_small_blocks(EnumCap::default()).unwrap();
        assert_eq!(stripped.size(), 8);
        assert!(crate::iso::oas_isomorphic(&stripped, &p3));

        let fraser = catalog::named("fraser_cube").unwrap();
        let same = fraser.remove_small_blocks(EnumCap::default()).unwrap();
        assert_eq!(same.size(), fraser.size());

        let mo2 = catalog::mo(2).unwrap();
        assert!(matches!(
            mo2.remove_small_blocks(EnumCap::default()),
            Err(CoreError::OnlySmallBlocks)
        ));
        let two = catalog::power_set(1).unwrap();
        assert!(matches!(two.remove_small_blocks(EnumCap::default()), Err(CoreError::Trivial)));
    }

    #[test]
    fn order_oracle_covers_closure() {
        for name in ["power_set_3", "mo_2", "fig1_gluing"] {
            let a = catalog::named(name).unwrap();
            let p = a.order_poset().unwrap();
            let q = FinitePoset::from_covers(p.size(), p.covers()).unwrap();
            for x in 0..p.size() {
                for y in 0..p.size() {
                    assert_eq!(p.leq(x, y), q.leq(x, y), "{name} at ({x},{y})");
                }
            }
        }
    }
}
