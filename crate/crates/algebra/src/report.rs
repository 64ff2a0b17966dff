//! Closure reports for exact relation checks.

use crate::op::RealLinearOp;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExactStatus {
    VerifiedExact,
    Failed,
}

impl ExactStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ExactStatus::VerifiedExact => "verified-exact",
            ExactStatus::Failed => "failed",
        }
    }
}

#[derive(Clone, Debug)]
pub struct FailedRelation {
    pub label: String,
    pub indices: Vec<usize>,
    /// Difference between the two sides, when the relation is an operator
    /// identity.
    pub residual: Option<RealLinearOp>,
    pub detail: String,
}

/// Outcome of a batch of exact relation checks. The status is derived from
/// the failure list and cannot be set directly.
#[derive(Clone, Debug)]
pub struct AlgebraClosureReport {
    pub claim: String,
    pub element_count: usize,
    pub real_dimension: Option<usize>,
    pub relations_checked: usize,
    failures: Vec<FailedRelation>,
    pub notes: Vec<String>,
}

impl AlgebraClosureReport {
    pub fn new(claim: &str, element_count: usize) -> Self {
        AlgebraClosureReport {
            claim: claim.to_string(),
            element_count,
            real_dimension: None,
            relations_checked: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Records `residual == 0` as one relation.
    pub fn check_zero(&mut self, label: impl Into<String>, indices: &[usize], residual: RealLinearOp) -> bool {
        self.relations_checked += 1;
        if residual.is_zero() {
            return true;
        }
        self.failures.push(FailedRelation {
            label: label.into(),
            indices: indices.to_vec(),
            residual: Some(residual),
            detail: String::new(),
        });
        false
    }

    /// Records a relation that is not an operator difference.
    pub fn check(&mut self, label: impl Into<String>, indices: &[usize], ok: bool, detail: impl Into<String>) -> bool {
        self.relations_checked += 1;
        if !ok {
            self.failures.push(FailedRelation {
                label: label.into(),
                indices: indices.to_vec(),
                residual: None,
                detail: detail.into(),
            });
        }
        ok
    }

    pub fn failures(&self) -> &[FailedRelation] {
        &self.failures
    }

    pub fn status(&self) -> ExactStatus {
        if self.failures.is_empty() {
            ExactStatus::VerifiedExact
        } else {
            ExactStatus::Failed
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Absorbs another report's checks, prefixing its labels.
    pub fn merge(&mut self, other: AlgebraClosureReport) {
        self.relations_checked += other.relations_checked;
        for mut f in other.failures {
            f.label = format!("{}: {}", other.claim, f.label);
            self.failures.push(f);
        }
        self.notes.extend(other.notes);
    }
}
