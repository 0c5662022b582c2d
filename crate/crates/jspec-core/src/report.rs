//! Report-valued verification results shared by all checkers.

use serde::Serialize;

/// One violated fact, with the smallest witnessing instance found.
#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    /// Which law or invariant failed, e.g. `"tdatum.invariance"`.
    pub check: String,
    /// Structured witness data (indices, group elements, labels).
    pub witness: serde_json::Value,
    pub message: String,
}

/// Outcome of an exhaustive check: how many facts were verified and,
/// when it failed, the witnesses in discovery order (smallest first,
/// since all enumerations run smallest-first).
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub checks: usize,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport { name: name.into(), passed: true, checks: 0, violations: Vec::new() }
    }

    pub fn tick(&mut self) {
        self.checks += 1;
    }

    pub fn fail(&mut self, check: impl Into<String>, witness: serde_json::Value, message: String) {
        self.passed = false;
        self.violations.push(Violation { check: check.into(), witness, message });
    }

    /// Fold a sub-report into this one, prefixing its violations.
    pub fn absorb(&mut self, sub: CheckReport) {
        self.checks += sub.checks;
        if !sub.passed {
            self.passed = false;
        }
        self.violations.extend(sub.violations);
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.passed {
            write!(f, "{}: pass ({} checks)", self.name, self.checks)
        } else {
            write!(
                f,
                "{}: FAIL ({} checks, {} violations; first: {})",
                self.name,
                self.checks,
                self.violations.len(),
                self.violations[0].message
            )
        }
    }
}
