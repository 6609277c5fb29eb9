//! Constructors for the families and named examples used as fixtures
//! everywhere: power sets, horizontal sums, Greechie pastings, direct
//! products, and a registry of named instances. Also hosts the seeded
//! random-orthoalgebra generator used by the property suites.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::CoreError;
use crate::oa::OrthoAlgebra;

/// The Boolean orthoalgebra of subsets of {1..n}; sums are unions of
/// disjoint sets. Index 0 is the empty set, index 1 the full set, and the
/// remaining masks follow in increasing numeric order.
pub fn power_set(n: usize) -> Result<OrthoAlgebra, CoreError> {
    if n < 1 || n > 6 {
        return Err(CoreError::Structural(format!("power_set({n}) out of range 1..=6")));
    }
    let full: usize = (1 << n) - 1;
    let mut masks: Vec<usize> = vec![0, full];
    masks.extend((1..full).filter(|&m| m != full));
    let index_of = |m: usize| masks.iter().position(|&x| x == m).unwrap() as u32;
    let comp: Vec<u32> = masks.iter().map(|&m| index_of(full & !m)).collect();
    let mut entries = Vec::new();
    for (i, &a) in masks.iter().enumerate() {
        for (j, &b) in masks.iter().enumerate().skip(i) {
            if a & b == 0 {
                let _ = j;
                entries.push((i as u32, index_of(b), index_of(a | b)));
            }
        }
    }
    let labels: Vec<String> = masks
        .iter()
        .map(|&m| {
            if m == 0 {
                "0".to_string()
            } else {
                (0..n).filter(|i| m & (1 << i) != 0).map(|i| (i + 1).to_string()).collect()
            }
        })
        .collect();
    OrthoAlgebra::from_parts(format!("power_set_{n}"), masks.len(), comp, &entries, Some(labels))
}

/// The one-element orthoalgebra (0 = 1), the unit for direct products.
pub fn trivial() -> OrthoAlgebra {
    OrthoAlgebra::from_parts("trivial", 1, vec![0], &[(0, 0, 0)], Some(vec!["01".into()]))
        .expect("one-element orthoalgebra")
}

/// Horizontal sum: identify all zeros and all ones; no cross-summand sums
/// except through 0 and 1.
pub fn horizontal_sum(summands: &[OrthoAlgebra]) -> Result<OrthoAlgebra, CoreError> {
    if summands.is_empty() {
        return Err(CoreError::Structural("horizontal sum of no summands".into()));
    }
    if summands.iter().any(|s| s.size() < 2) {
        return Err(CoreError::Structural("horizontal summand with fewer than 2 elements".into()));
    }
    // Global indices: 0, 1, then each summand's elements other than 0, 1.
    let mut owner: Vec<(usize, usize)> = vec![(usize::MAX, 0), (usize::MAX, 1)];
    let mut global: Vec<Vec<usize>> = Vec::new();
    for (si, s) in summands.iter().enumerate() {
        let mut map = vec![0usize; s.size()];
        map[s.zero()] = 0;
        map[s.one()] = 1;
        for x in 0..s.size() {
            if x != s.zero() && x != s.one() {
                map[x] = owner.len();
                owner.push((si, x));
            }
        }
        global.push(map);
    }
    let size = owner.len();
    let mut comp = vec![0u32; size];
    comp[0] = 1;
    comp[1] = 0;
    for g in 2..size {
        let (si, x) = owner[g];
        comp[g] = global[si][summands[si].comp(x)] as u32;
    }
    let mut entries: Vec<(u32, u32, u32)> = Vec::new();
    for g in 0..size as u32 {
        entries.push((0, g, g));
    }
    for (si, s) in summands.iter().enumerate() {
        for a in 0..s.size() {
            for b in a..s.size() {
                if let Some(c) = s.oplus(a, b) {
                    let (ga, gb, gc) =
                        (global[si][a] as u32, global[si][b] as u32, global[si][c] as u32);
                    entries.push((ga.min(gb), ga.max(gb), gc));
                }
            }
        }
    }
    entries.sort_unstable();
    entries.dedup();
    let labels: Vec<String> = (0..size)
        .map(|g| match owner[g] {
            (usize::MAX, 0) => "0".to_string(),
            (usize::MAX, 1) => "1".to_string(),
            (si, x) => {
                if summands.len() == 1 {
                    summands[si].label(x).to_string()
                } else {
                    format!("{}:{}", si, summands[si].label(x))
                }
            }
        })
        .collect();
    let name = format!("hsum[{}]", summands.iter().map(|s| s.name()).collect::<Vec<_>>().join("+"));
    OrthoAlgebra::from_parts(name, size, comp, &entries, Some(labels))
}

/// MO_n: the horizontal sum of n copies of the 4-element Boolean algebra.
pub fn mo(n: usize) -> Result<OrthoAlgebra, CoreError> {
    if n == 0 {
        return Err(CoreError::Structural("mo(0) is not defined".into()));
    }
    let four = power_set(2)?;
    let summands: Vec<OrthoAlgebra> = (0..n).map(|_| four.clone()).collect();
    let mut out = horizontal_sum(&summands)?;
    out.set_name(format!("mo_{n}"));
    if n >= 1 {
        // atom labels a1, a1', a2, a2', ...
        let mut labels = vec!["0".to_string(), "1".to_string()];
        for i in 0..n {
            labels.push(format!("a{}", i + 1));
            labels.push(format!("a{}'", i + 1));
        }
        out.set_labels(labels);
    }
    Ok(out)
}

/// A Greechie pasting: atoms and blocks given by atom names.
#[derive(Debug, Clone)]
pub struct GreechiePasting {
    pub atoms: Vec<String>,
    pub blocks: Vec<Vec<String>>,
}

impl GreechiePasting {
    pub fn new(atoms: &[&str], blocks: &[&[&str]]) -> Self {
        GreechiePasting {
            atoms: atoms.iter().map(|s| s.to_string()).collect(),
            blocks: blocks.iter().map(|b| b.iter().map(|s| s.to_string()).collect()).collect(),
        }
    }
}

/// Pastes the blocks of a Greechie diagram into an orthoalgebra.
///
/// Each block with k atoms contributes the 2^k sub-sums of its atoms;
/// sub-sums from different blocks are identified when they are the same set
/// of shared atoms, or when their in-block complements are. The result must
/// pass the validator, otherwise the pasting is inadmissible.
pub fn greechie_paste(g: &GreechiePasting) -> Result<OrthoAlgebra, CoreError> {
    let natoms = g.atoms.len();
    if natoms == 0 || g.blocks.is_empty() {
        return Err(CoreError::Structural("empty pasting".into()));
    }
    let atom_index = |name: &str| -> Result<usize, CoreError> {
        g.atoms
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| CoreError::Structural(format!("unknown atom {name}")))
    };
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for b in &g.blocks {
        if b.len() < 2 || b.len() > 4 {
            return Err(CoreError::Structural(format!(
                "block with {} atoms (need 2..=4)",
                b.len()
            )));
        }
        let mut idxs = Vec::new();
        for name in b {
            let i = atom_index(name)?;
            if idxs.contains(&i) {
                return Err(CoreError::Structural(format!("repeated atom {name} in block")));
            }
            idxs.push(i);
        }
        blocks.push(idxs);
    }
    for a in 0..natoms {
        if !blocks.iter().any(|b| b.contains(&a)) {
            return Err(CoreError::Structural(format!(
                "atom {} occurs in no block",
                g.atoms[a]
            )));
        }
    }

    // Cells are (block, subset-of-block-atoms); union-find identifies cells
    // that denote the same sub-sum.
    let cell_sets: Vec<(usize, BTreeSet<usize>)> = {
        let mut v = Vec::new();
        for (bi, b) in blocks.iter().enumerate() {
            for mask in 0usize..(1 << b.len()) {
                let set: BTreeSet<usize> = b
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &a)| a)
                    .collect();
                v.push((bi, set));
            }
        }
        v
    };
    let ncells = cell_sets.len();
    let mut parent: Vec<usize> = (0..ncells).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    let block_atom_set: Vec<BTreeSet<usize>> =
        blocks.iter().map(|b| b.iter().copied().collect()).collect();
    for i in 0..ncells {
        for j in i + 1..ncells {
            let (bi, ref si) = cell_sets[i];
            let (bj, ref sj) = cell_sets[j];
            let ci: BTreeSet<usize> = block_atom_set[bi].difference(si).copied().collect();
            let cj: BTreeSet<usize> = block_atom_set[bj].difference(sj).copied().collect();
            if si == sj || ci == cj {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }

    // Canonical representative per class: smallest (|set|, set, block).
    let mut class_of = vec![usize::MAX; ncells];
    let mut reps: Vec<(usize, usize)> = Vec::new(); // (rep cell, class id) later
    let mut roots: Vec<usize> = Vec::new();
    for i in 0..ncells {
        let r = find(&mut parent, i);
        if !roots.contains(&r) {
            roots.push(r);
        }
    }
    let rep_key = |cell: usize| -> (usize, Vec<usize>, usize) {
        let (b, ref s) = cell_sets[cell];
        (s.len(), s.iter().copied().collect(), b)
    };
    let mut class_reps: Vec<usize> = roots
        .iter()
        .map(|&r| {
            (0..ncells)
                .filter(|&i| find(&mut parent.clone(), i) == r)
                .min_by_key(|&i| rep_key(i))
                .unwrap()
        })
        .collect();
    // Order classes: the empty sum first (zero), the full block second (one),
    // then by representative key.
    class_reps.sort_by_key(|&i| rep_key(i));
    let zero_class = class_reps
        .iter()
        .position(|&i| cell_sets[i].1.is_empty())
        .expect("empty subset present");
    class_reps.swap(0, zero_class);
    let one_class = class_reps
        .iter()
        .position(|&i| {
            let (b, ref s) = cell_sets[i];
            *s == block_atom_set[b]
        })
        .expect("full subset present");
    if one_class == 0 {
        return Err(CoreError::Structural("pasting collapses 0 and 1".into()));
    }
    class_reps.swap(1, one_class);
    let size = class_reps.len();
    for (ci, &rep) in class_reps.iter().enumerate() {
        let root = find(&mut parent, rep);
        for i in 0..ncells {
            if find(&mut parent, i) == root {
                class_of[i] = ci;
            }
        }
    }

    // comp: complement within any representative's block.
    let cell_of = |bi: usize, s: &BTreeSet<usize>| -> usize {
        cell_sets.iter().position(|(b, t)| *b == bi && t == s).unwrap()
    };
    let mut comp = vec![0u32; size];
    for (ci, &rep) in class_reps.iter().enumerate() {
        let (b, ref s) = cell_sets[rep];
        let c: BTreeSet<usize> = block_atom_set[b].difference(s).copied().collect();
        comp[ci] = class_of[cell_of(b, &c)] as u32;
    }

    // Sums: within each block, disjoint unions. Conflicting identifications
    // surface as validator failures.
    let mut sum_entries: Vec<(u32, u32, u32)> = Vec::new();
    for (bi, b) in blocks.iter().enumerate() {
        let k = b.len();
        for m1 in 0usize..(1 << k) {
            for m2 in 0usize..(1 << k) {
                if m1 & m2 != 0 {
                    continue;
                }
                let s1: BTreeSet<usize> = b
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| m1 & (1 << i) != 0)
                    .map(|(_, &a)| a)
                    .collect();
                let s2: BTreeSet<usize> = b
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| m2 & (1 << i) != 0)
                    .map(|(_, &a)| a)
                    .collect();
                let su: BTreeSet<usize> = s1.union(&s2).copied().collect();
                let (c1, c2, cu) = (
                    class_of[cell_of(bi, &s1)] as u32,
                    class_of[cell_of(bi, &s2)] as u32,
                    class_of[cell_of(bi, &su)] as u32,
                );
                sum_entries.push((c1.min(c2), c1.max(c2), cu));
            }
        }
    }
    sum_entries.sort_unstable();
    sum_entries.dedup();
    // A pair defined in two blocks with different results is inadmissible.
    for w in sum_entries.windows(2) {
        if w[0].0 == w[1].0 && w[0].1 == w[1].1 {
            return Err(CoreError::Structural(format!(
                "pasting gives conflicting sums for pair ({},{})",
                w[0].0, w[0].1
            )));
        }
    }

    let labels: Vec<String> = class_reps
        .iter()
        .enumerate()
        .map(|(ci, &rep)| {
            let (b, ref s) = cell_sets[rep];
            if ci == 0 {
                "0".to_string()
            } else if ci == 1 {
                "1".to_string()
            } else if s.len() == 1 {
                g.atoms[*s.iter().next().unwrap()].clone()
            } else if s.len() + 1 == block_atom_set[b].len() {
                let c: BTreeSet<usize> =
                    block_atom_set[b].difference(s).copied().collect();
                format!("{}'", g.atoms[*c.iter().next().unwrap()])
            } else {
                s.iter().map(|&a| g.atoms[a].as_str()).collect::<Vec<_>>().join("+")
            }
        })
        .collect();

    match OrthoAlgebra::from_parts("greechie", size, comp, &sum_entries, Some(labels)) {
        Ok(oa) => Ok(oa),
        Err(e) => Err(match e {
            CoreError::NotAnOrthoAlgebra(report) => CoreError::NotAnOrthoAlgebra(report),
            other => other,
        }),
    }
}

/// Reads the atoms and blocks back off an orthoalgebra (atoms of the derived
/// order, grouped by blocks); used to check pastings round-trip.
pub fn read_greechie(a: &OrthoAlgebra) -> Result<GreechiePasting, CoreError> {
    let atoms: Vec<usize> = (0..a.size())
        .filter(|&x| x != a.zero() && x != a.one())
        .filter(|&x| {
            (0..a.size())
                .all(|y| y == a.zero() || y == x || !a.leq(y, x))
        })
        .collect();
    let blocks = a.blocks(crate::oa::EnumCap::default())?;
    let mut out_blocks = Vec::new();
    for b in &blocks {
        let mut names: Vec<String> = atoms
            .iter()
            .filter(|&&x| b.contains(x))
            .map(|&x| a.label(x).to_string())
            .collect();
        names.sort();
        out_blocks.push(names);
    }
    out_blocks.sort();
    Ok(GreechiePasting {
        atoms: atoms.iter().map(|&x| a.label(x).to_string()).collect(),
        blocks: out_blocks,
    })
}

/// Direct product: componentwise sums, defined iff defined in both
/// components.
pub fn direct_product(a: &OrthoAlgebra, c: &OrthoAlgebra) -> Result<OrthoAlgebra, CoreError> {
    let size = a.size().checked_mul(c.size()).ok_or_else(|| {
        CoreError::CapExceeded("product size overflows".into())
    })?;
    if size > crate::oa::DEFAULT_SIZE_CAP {
        return Err(CoreError::CapExceeded(format!(
            "product size {size} exceeds cap {}",
            crate::oa::DEFAULT_SIZE_CAP
        )));
    }
    // Index map putting (0,0) at 0 and (1,1) at 1.
    let raw = |x: usize, y: usize| x * c.size() + y;
    let mut order: Vec<usize> = vec![raw(a.zero(), c.zero())];
    let one_raw = raw(a.one(), c.one());
    if one_raw != order[0] {
        order.push(one_raw);
    }
    for x in 0..a.size() {
        for y in 0..c.size() {
            let r = raw(x, y);
            if !order.contains(&r) {
                order.push(r);
            }
        }
    }
    let pos = {
        let mut v = vec![0usize; size];
        for (i, &r) in order.iter().enumerate() {
            v[r] = i;
        }
        v
    };
    let comp: Vec<u32> = order
        .iter()
        .map(|&r| {
            let (x, y) = (r / c.size(), r % c.size());
            pos[raw(a.comp(x), c.comp(y))] as u32
        })
        .collect();
    let mut entries = Vec::new();
    for (i, &r1) in order.iter().enumerate() {
        let (x1, y1) = (r1 / c.size(), r1 % c.size());
        for &r2 in order.iter().skip(i) {
            let (x2, y2) = (r2 / c.size(), r2 % c.size());
            if let (Some(sx), Some(sy)) = (a.oplus(x1, x2), c.oplus(y1, y2)) {
                entries.push((i as u32, pos[r2] as u32, pos[raw(sx, sy)] as u32));
            }
        }
    }
    let labels: Vec<String> = order
        .iter()
        .map(|&r| format!("({},{})", a.label(r / c.size()), c.label(r % c.size())))
        .collect();
    OrthoAlgebra::from_parts(
        format!("{}x{}", a.name(), c.name()),
        size,
        comp,
        &entries,
        Some(labels),
    )
}

pub fn fig1_gluing() -> OrthoAlgebra {
    let g = GreechiePasting::new(&["a", "b", "c", "d", "e"], &[&["a", "b", "c"], &["c", "d", "e"]]);
    let mut oa = greechie_paste(&g).expect("fig. 1 gluing is admissible");
    oa.set_name("fig1_gluing");
    oa
}

/// The Fano plane minus its inscribed-circle line: 7 atoms, 6 three-atom
/// blocks. Atoms 1,2,3 are the triangle vertices, 4 the centre (the corner
/// roles), and 5,6,7 the edge midpoints (the edge roles).
pub fn fano_minus_line() -> OrthoAlgebra {
    let g = GreechiePasting::new(
        &["1", "2", "3", "4", "5", "6", "7"],
        &[
            &["1", "2", "5"],
            &["1", "3", "6"],
            &["2", "3", "7"],
            &["1", "7", "4"],
            &["2", "6", "4"],
            &["3", "5", "4"],
        ],
    );
    let mut oa = greechie_paste(&g).expect("fano minus line is admissible");
    oa.set_name("fano_minus_line");
    oa
}

/// The Fraser cube: 8 atoms at the cube vertices, 6 four-atom blocks at the
/// faces; 36 elements in total.
pub fn fraser_cube() -> OrthoAlgebra {
    let g = GreechiePasting::new(
        &["a", "b", "c", "d", "e", "f", "g", "h"],
        &[
            &["a", "b", "c", "d"], // bottom
            &["e", "f", "g", "h"], // top
            &["a", "b", "e", "f"], // front
            &["c", "d", "g", "h"], // back
            &["a", "c", "e", "g"], // left
            &["b", "d", "f", "h"], // right
        ],
    );
    let mut oa = greechie_paste(&g).expect("fraser cube is admissible");
    oa.set_name("fraser_cube");
    oa
}

pub fn mo2_times_two() -> OrthoAlgebra {
    let mut oa =
        direct_product(&mo(2).unwrap(), &power_set(1).unwrap()).expect("mo2 x 2 within cap");
    oa.set_name("mo2_times_two");
    oa
}

pub fn mo2_times_mo2() -> OrthoAlgebra {
    let m = mo(2).unwrap();
    let mut oa = direct_product(&m, &m).expect("mo2 x mo2 within cap");
    oa.set_name("mo2_times_mo2");
    oa
}

/// Registry of named instances. Accepts `power_set_N`, `mo_N`, and the named
/// examples.
pub fn named(name: &str) -> Result<OrthoAlgebra, CoreError> {
    if let Some(rest) = name.strip_prefix("power_set_") {
        if let Ok(n) = rest.parse::<usize>() {
            return power_set(n);
        }
    }
    if let Some(rest) = name.strip_prefix("mo_") {
        if let Ok(n) = rest.parse::<usize>() {
            return mo(n);
        }
    }
    match name {
        "trivial" => Ok(trivial()),
        "fig1_gluing" => Ok(fig1_gluing()),
        "fraser_cube" => Ok(fraser_cube()),
        "fano_minus_line" => Ok(fano_minus_line()),
        "mo2_times_two" => Ok(mo2_times_two()),
        "mo2_times_mo2" => Ok(mo2_times_mo2()),
        _ => Err(CoreError::UnknownName(name.to_string())),
    }
}

/// The standard fixture list exercised by the test suites.
pub fn all_names() -> Vec<&'static str> {
    vec![
        "power_set_1",
        "power_set_2",
        "power_set_3",
        "power_set_4",
        "power_set_5",
        "power_set_6",
        "mo_1",
        "mo_2",
        "mo_3",
        "fig1_gluing",
        "fraser_cube",
        "mo2_times_two",
        "mo2_times_mo2",
        "fano_minus_line",
    ]
}

/// The proper catalog algebras (no small blocks).
pub fn proper_names() -> Vec<&'static str> {
    vec![
        "power_set_3",
        "power_set_4",
        "power_set_5",
        "fig1_gluing",
        "fraser_cube",
        "mo2_times_two",
        "mo2_times_mo2",
        "fano_minus_line",
    ]
}

/// Deterministic random valid orthoalgebra with at most `max_size` elements.
/// Candidates are built from constructors and Greechie pastings, so every
/// output validates; inadmissible pastings are retried.
pub fn random_orthoalgebra(seed: u64, max_size: usize) -> OrthoAlgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        if let Some(oa) = random_candidate(&mut rng, max_size) {
            if oa.size() <= max_size {
                return oa;
            }
        }
    }
}

fn random_candidate(rng: &mut ChaCha8Rng, max_size: usize) -> Option<OrthoAlgebra> {
    match rng.gen_range(0..6u32) {
        0 => power_set(rng.gen_range(1..=4)).ok(),
        1 => mo(rng.gen_range(1..=8)).ok(),
        2 => {
            let k = rng.gen_range(1..=3usize);
            let summands: Vec<OrthoAlgebra> =
                (0..k).map(|_| power_set(rng.gen_range(2..=3)).unwrap()).collect();
            horizontal_sum(&summands).ok()
        }
        3 => {
            let a = power_set(rng.gen_range(1..=2)).unwrap();
            let c = match rng.gen_range(0..3u32) {
                0 => mo(rng.gen_range(1..=3)).unwrap(),
                1 => power_set(rng.gen_range(1..=3)).unwrap(),
                _ => fig1_gluing(),
            };
            direct_product(&a, &c).ok()
        }
        4 => Some(random_greechie(rng, max_size)),
        _ => {
            // A pasting glued with an extra small block.
            let base = random_greechie(rng, max_size.saturating_sub(2));
            horizontal_sum(&[base, power_set(2).unwrap()]).ok()
        }
    }
}

/// Random loop-free Greechie pasting: a tree of 3-atom blocks, each new block
/// sharing one atom with an existing one. Tree pastings are always
/// admissible.
fn random_greechie(rng: &mut ChaCha8Rng, max_size: usize) -> OrthoAlgebra {
    let max_blocks = ((max_size.saturating_sub(2)) / 4).clamp(1, 5);
    let nblocks = rng.gen_range(1..=max_blocks);
    let mut atoms: Vec<String> = vec!["t1".into(), "t2".into(), "t3".into()];
    let mut blocks: Vec<Vec<String>> = vec![atoms.clone()];
    for _ in 1..nblocks {
        let shared = {
            let b = &blocks[rng.gen_range(0..blocks.len())];
            b[rng.gen_range(0..b.len())].clone()
        };
        let mut fresh = Vec::new();
        for _ in 0..2 {
            let name = format!("t{}", atoms.len() + 1);
            atoms.push(name.clone());
            fresh.push(name);
        }
        blocks.push(vec![shared, fresh[0].clone(), fresh[1].clone()]);
    }
    let g = GreechiePasting {
        atoms,
        blocks,
    };
    greechie_paste(&g).expect("tree pastings are admissible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oa::EnumCap;
    use crate::validate::validate_orthoalgebra_table;

    #[test]
    fn every_catalog_instance_validates() {
        for name in all_names() {
            let a = named(name).unwrap();
            assert!(validate_orthoalgebra_table(&a).is_ok(), "{name}");
        }
    }

    #[test]
    fn power_set_sizes() {
        assert_eq!(power_set(1).unwrap().size(), 2);
        assert_eq!(power_set(4).unwrap().size(), 16);
        assert!(power_set(7).is_err());
    }

    #[test]
    fn mo2_shape() {
        let a = mo(2).unwrap();
        assert_eq!(a.size(), 6);
        assert_eq!(a.blocks(EnumCap::default()).unwrap().len(), 2);
    }

    #[test]
    fn horizontal_sum_of_two_cubes() {
        let p3 = power_set(3).unwrap();
        let h = horizontal_sum(&[p3.clone(), p3]).unwrap();
        assert_eq!(h.size(), 14);
    }

    #[test]
    fn named_sizes() {
        assert_eq!(named("fraser_cube").unwrap().size(), 36);
        assert_eq!(named("fig1_gluing").unwrap().size(), 12);
        assert_eq!(named("fano_minus_line").unwrap().size(), 16);
        assert_eq!(named("mo2_times_two").unwrap().size(), 12);
        assert_eq!(named("mo2_times_mo2").unwrap().size(), 36);
        assert!(named("nope").is_err());
    }

    #[test]
    fn fano_minus_line_is_not_an_omp() {
        assert!(!named("fano_minus_line").unwrap().is_orthomodular_poset());
    }

    #[test]
    fn mo2_times_mo2_is_an_omp() {
        assert!(named("mo2_times_mo2").unwrap().is_orthomodular_poset());
    }

    #[test]
    fn fraser_cube_blocks() {
        let a = fraser_cube();
        let blocks = a.blocks(EnumCap::default()).unwrap();
        assert_eq!(blocks.len(), 6);
        assert!(blocks.iter().all(|b| b.len() == 16));
        assert!(a.is_proper(EnumCap::default()).unwrap());
    }

    #[test]
    fn mo2_times_mo2_blocks() {
        let a = mo2_times_mo2();
        let blocks = a.blocks(EnumCap::default()).unwrap();
        assert_eq!(blocks.len(), 4);
        assert!(blocks.iter().all(|b| b.len() == 16));
    }

    #[test]
    fn fraser_cube_complement_coincidences() {
        // (a ⊕ b)' = c ⊕ d = e ⊕ f
        let a = fraser_cube();
        let at = |s: &str| a.labels().iter().position(|l| l == s).unwrap();
        let ab = a.oplus(at("a"), at("b")).unwrap();
        let cd = a.oplus(at("c"), at("d")).unwrap();
        let ef = a.oplus(at("e"), at("f")).unwrap();
        assert_eq!(a.comp(ab), cd);
        assert_eq!(cd, ef);
    }

    #[test]
    fn direct_product_unit_and_sizes() {
        let m = mo(2).unwrap();
        let p = direct_product(&trivial(), &m).unwrap();
        assert!(crate::iso::oas_isomorphic(&p, &m));
        // The 2-element algebra doubles the size.
        let d = direct_product(&power_set(1).unwrap(), &m).unwrap();
        assert_eq!(d.size(), 12);
    }

    #[test]
    fn greechie_roundtrip_on_loop_free_fixture() {
        let g = GreechiePasting::new(&["a", "b", "c", "d", "e"], &[&["a", "b", "c"], &["c", "d", "e"]]);
        let oa = greechie_paste(&g).unwrap();
        let back = read_greechie(&oa).unwrap();
        let mut atoms = back.atoms.clone();
        atoms.sort();
        assert_eq!(atoms, vec!["a", "b", "c", "d", "e"]);
        assert_eq!(back.blocks.len(), 2);
        assert_eq!(back.blocks[0], vec!["a", "b", "c"]);
        assert_eq!(back.blocks[1], vec!["c", "d", "e"]);
    }

    #[test]
    fn random_orthoalgebras_validate_and_are_deterministic() {
        for seed in 0..20 {
            let a = random_orthoalgebra(seed, 24);
            assert!(a.size() <= 24);
            assert!(validate_orthoalgebra_table(&a).is_ok(), "seed {seed}");
            let b = random_orthoalgebra(seed, 24);
            assert_eq!(a, b);
        }
    }
}
