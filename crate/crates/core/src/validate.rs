//! Exhaustive axiom validation for orthoalgebra tables.
//!
//! Structural problems (bad indices, asymmetric entries) are reported before
//! any axiom is checked. Axiom checks then name the violated law and the
//! witnessing elements. Everything is a full scan; the size cap keeps the
//! O(n³) associativity pass cheap.

use std::fmt;

use crate::oa::{OrthoAlgebra, UNDEF};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    pub witness: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.axiom, self.witness)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, axiom: &str, witness: String) {
        self.violations.push(Violation { axiom: axiom.to_string(), witness });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            write!(f, "ok")
        } else {
            for v in &self.violations {
                writeln!(f, "violation {v}")?;
            }
            Ok(())
        }
    }
}

/// Raw orthoalgebra data as it appears on disk, before any checking.
#[derive(Debug, Clone)]
pub struct RawOrthoAlgebra {
    pub name: String,
    pub size: usize,
    pub comp: Vec<u32>,
    pub sum: Vec<(u32, u32, u32)>,
    pub labels: Option<Vec<String>>,
}

/// Validates a raw structure. Structural errors short-circuit; otherwise the
/// report lists every axiom violation found.
pub fn validate_orthoalgebra(raw: &RawOrthoAlgebra) -> Result<ValidationReport, crate::error::CoreError> {
    let oa = OrthoAlgebra::from_parts_unchecked(
        raw.name.clone(),
        raw.size,
        raw.comp.clone(),
        &raw.sum,
        raw.labels.clone(),
    )?;
    Ok(validate_orthoalgebra_table(&oa))
}

/// Axiom checks on an already well-formed table.
pub fn validate_orthoalgebra_table(a: &OrthoAlgebra) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = a.size();
    let zero = a.zero();
    let one = a.one();

    // comp is an involution with comp(0) = 1.
    for x in 0..n {
        if a.comp(a.comp(x)) != x {
            report.push("comp involution", format!("comp(comp({x})) = {}", a.comp(a.comp(x))));
        }
    }
    if a.comp(zero) != one {
        report.push("comp of zero", format!("comp(0) = {}, expected {one}", a.comp(zero)));
    }

    // a ⊕ 0 = a.
    for x in 0..n {
        if a.oplus(x, zero) != Some(x) {
            report.push("unit law", format!("{x} ⊕ 0 = {:?}", a.oplus(x, zero)));
        }
    }

    // a ⊕ a defined iff a = 0.
    for x in 0..n {
        let diag = a.oplus(x, x);
        if x == zero {
            if diag != Some(zero) {
                report.push("0 ⊕ 0", format!("0 ⊕ 0 = {diag:?}, expected 0"));
            }
        } else if diag.is_some() {
            report.push("a⊕a defined, a≠0", format!("{x} ⊕ {x} = {diag:?}"));
        }
    }

    // a ⊕ comp(a) = 1, and comp(a) is the unique such complement.
    for x in 0..n {
        if a.oplus(x, a.comp(x)) != Some(one) {
            report.push(
                "complement sum",
                format!("{x} ⊕ comp({x}) = {:?}, expected 1", a.oplus(x, a.comp(x))),
            );
        }
        for y in 0..n {
            if y != a.comp(x) && a.oplus(x, y) == Some(one) {
                report.push("unique complement", format!("{x} ⊕ {y} = 1 but comp({x}) = {}", a.comp(x)));
            }
        }
    }

    // Associativity in the partial sense: (a⊕b)⊕c defined iff a⊕(b⊕c)
    // defined, and then equal. The table is symmetric by construction, so
    // commutativity needs no separate pass.
    for x in 0..n {
        for y in 0..n {
            let xy = a.oplus(x, y);
            for z in 0..n {
                let lhs = xy.and_then(|v| a.oplus(v, z));
                let rhs = a.oplus(y, z).and_then(|v| a.oplus(x, v));
                if lhs != rhs {
                    report.push(
                        "associativity",
                        format!("({x} ⊕ {y}) ⊕ {z} = {lhs:?} but {x} ⊕ ({y} ⊕ {z}) = {rhs:?}"),
                    );
                }
            }
        }
    }

    // The derived relation must be a partial order. Reflexivity and
    // transitivity follow from the axioms; antisymmetry is checked
    // explicitly rather than assumed.
    for x in 0..n {
        for y in 0..n {
            if x != y && a.leq(x, y) && a.leq(y, x) {
                report.push("order antisymmetry", format!("{x} <= {y} and {y} <= {x}"));
            }
        }
    }

    report
}

/// Builds the weak orthostructure D used as a validator fixture: two
/// 8-element Boolean algebras sharing the subalgebra {0, c, c', 1}, where c
/// is an atom of the first and a coatom of the second. D is a partial
/// Boolean algebra but not an orthoalgebra.
pub fn weak_orthostructure_d() -> RawOrthoAlgebra {
    // Carrier: 0, 1, a, b, c, a', b', c', d, e, d', e'  (c' = d ⊕ e).
    let labels: Vec<String> =
        ["0", "1", "a", "b", "c", "a'", "b'", "c'", "d", "e", "d'", "e'"]
            .iter()
            .map(|s| s.to_string())
            .collect();
    let n = labels.len();
    let idx = |s: &str| labels.iter().position(|l| l == s).unwrap() as u32;
    let comp: Vec<u32> = ["1", "0", "a'", "b'", "c'", "a", "b", "c", "d'", "e'", "d", "e"]
        .iter()
        .map(|s| idx(s))
        .collect();
    let mut sum: Vec<(u32, u32, u32)> = Vec::new();
    for x in 0..n as u32 {
        sum.push((0, x, x));
        let c = comp[x as usize];
        if x <= c {
            sum.push((x, c, 1));
        }
    }
    // Block 1: atoms a, b, c.
    for (x, y, z) in [("a", "b", "c'"), ("a", "c", "b'"), ("b", "c", "a'")] {
        sum.push((idx(x).min(idx(y)), idx(x).max(idx(y)), idx(z)));
    }
    // Block 2: atoms d, e, c' (c is a coatom there).
    for (x, y, z) in [("d", "e", "c"), ("d", "c'", "e'"), ("e", "c'", "d'")] {
        sum.push((idx(x).min(idx(y)), idx(x).max(idx(y)), idx(z)));
    }
    sum.sort_unstable();
    sum.dedup();
    RawOrthoAlgebra { name: "weak_orthostructure_D".into(), size: n, comp, sum, labels: Some(labels) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn power_set_validates() {
        let a = catalog::power_set(3).unwrap();
        assert!(validate_orthoalgebra_table(&a).is_ok());
    }

    #[test]
    fn self_sum_violation_is_reported() {
        // 2-element Boolean algebra with a bogus 1 ⊕ 1 entry.
        let raw = RawOrthoAlgebra {
            name: "bad".into(),
            size: 2,
            comp: vec![1, 0],
            sum: vec![(0, 0, 0), (0, 1, 1), (1, 1, 0)],
            labels: None,
        };
        let report = validate_orthoalgebra(&raw).unwrap();
        assert!(report.violations.iter().any(|v| v.axiom == "a⊕a defined, a≠0"));
    }

    #[test]
    fn out_of_range_is_structural() {
        let raw = RawOrthoAlgebra {
            name: "bad".into(),
            size: 2,
            comp: vec![1, 0],
            sum: vec![(0, 0, 0), (0, 1, 7)],
            labels: None,
        };
        assert!(validate_orthoalgebra(&raw).is_err());
    }

    #[test]
    fn conflicting_pair_is_structural() {
        let raw = RawOrthoAlgebra {
            name: "bad".into(),
            size: 3,
            comp: vec![1, 0, 2],
            sum: vec![(0, 1, 1), (1, 0, 0)],
            labels: None,
        };
        assert!(validate_orthoalgebra(&raw).is_err());
    }

    #[test]
    fn weak_orthostructure_d_is_not_an_orthoalgebra() {
        let raw = weak_orthostructure_d();
        let report = validate_orthoalgebra(&raw).unwrap();
        assert!(!report.is_ok());
    }
}
