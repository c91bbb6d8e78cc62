//! Validation reports shared by every axiom checker in the crate.
//!
//! A report accumulates one entry per violated axiom instance instead of
//! failing fast; the full list is the test surface. Instances that cannot be
//! evaluated because a partial table is undefined there (finitely windowed
//! structures) are counted as `skipped`, never as passed.

use serde::{Deserialize, Serialize};

/// Whether a violation is a malformed table or a failed law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ViolationKind {
    /// An index out of range, a missing required table entry, or a boundary
    /// mismatch. Structural errors make axiom checks meaningless, so
    /// validators report them and stop.
    Structural,
    /// A well-formed instance of an axiom that does not hold.
    Axiom,
}

/// One violated instance, tagged with the axiom class it belongs to.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    /// Stable label of the axiom class, e.g. `"assoc"` or `"beta-sigma"`.
    pub axiom: String,
    /// Human-readable description of the failing instance.
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Number of axiom instances actually evaluated.
    pub checked: u64,
    /// Number of instances skipped because a partial table was undefined.
    pub skipped: u64,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has_structural_errors(&self) -> bool {
        self.violations
            .iter()
            .any(|v| v.kind == ViolationKind::Structural)
    }

    pub fn structural(&mut self, axiom: &str, detail: String) {
        self.violations.push(Violation {
            kind: ViolationKind::Structural,
            axiom: axiom.to_string(),
            detail,
        });
    }

    /// Record the outcome of one axiom instance.
    pub fn check(&mut self, axiom: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(Violation {
                kind: ViolationKind::Axiom,
                axiom: axiom.to_string(),
                detail: detail(),
            });
        }
    }

    pub fn skip(&mut self) {
        self.skipped += 1;
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
        self.checked += other.checked;
        self.skipped += other.skipped;
    }

    /// Violations belonging to the given axiom class.
    pub fn of_class<'a>(&'a self, axiom: &'a str) -> impl Iterator<Item = &'a Violation> {
        self.violations.iter().filter(move |v| v.axiom == axiom)
    }

    pub fn summary(&self) -> String {
        if self.is_valid() {
            format!("ok ({} checked, {} skipped)", self.checked, self.skipped)
        } else {
            format!(
                "{} violation(s) ({} checked, {} skipped)",
                self.violations.len(),
                self.checked,
                self.skipped
            )
        }
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{}", self.summary())?;
        for v in &self.violations {
            let tag = match v.kind {
                ViolationKind::Structural => "structural",
                ViolationKind::Axiom => "axiom",
            };
            writeln!(f, "  [{tag}] {}: {}", v.axiom, v.detail)?;
        }
        Ok(())
    }
}
