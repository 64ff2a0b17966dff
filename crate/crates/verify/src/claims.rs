//! Claim records. A record's status is derived from its evidence when the
//! record is built and has no setter.

use std::fmt;

use dirac_algebra::AlgebraClosureReport;
use dirac_spectral::{Bound, NumericCheck};
use serde::{Deserialize, Serialize, Serializer};

use crate::catalog::CatalogEntry;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    Exact,
    Numeric,
    /// Reported, never fails the run.
    ContestedByDesign,
}

impl ClaimKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimKind::Exact => "exact",
            ClaimKind::Numeric => "numeric",
            ClaimKind::ContestedByDesign => "contested-by-design",
        }
    }

    /// Whether a failure of this kind affects the exit status.
    pub fn gates_exit(self) -> bool {
        !matches!(self, ClaimKind::ContestedByDesign)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    VerifiedExact,
    VerifiedNumeric,
    Failed,
    Contested,
}

impl ClaimStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimStatus::VerifiedExact => "verified-exact",
            ClaimStatus::VerifiedNumeric => "verified-numeric",
            ClaimStatus::Failed => "failed",
            ClaimStatus::Contested => "contested",
        }
    }

    pub fn is_verified(self) -> bool {
        matches!(self, ClaimStatus::VerifiedExact | ClaimStatus::VerifiedNumeric)
    }
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Non-finite values become null; the report writer fixes the digits.
pub(crate) fn ser_opt_f64<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) if x.is_finite() => s.serialize_f64(*x),
        _ => s.serialize_none(),
    }
}

/// 17 significant digits.
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn ser_bound<S: Serializer>(b: &Option<Bound>, s: S) -> Result<S::Ok, S::Error> {
    match b {
        Some(Bound::AtMost) => s.serialize_str("at-most"),
        Some(Bound::AtLeast) => s.serialize_str("at-least"),
        None => s.serialize_none(),
    }
}

/// One measured or checked fact behind a claim.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Evidence {
    pub name: String,
    #[serde(serialize_with = "ser_opt_f64")]
    pub value: Option<f64>,
    #[serde(serialize_with = "ser_opt_f64")]
    pub threshold: Option<f64>,
    #[serde(serialize_with = "ser_bound")]
    pub bound: Option<Bound>,
    pub passed: bool,
    /// Unjudged evidence is published but does not enter the status.
    pub judged: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Evidence {
    pub fn judged(c: &NumericCheck) -> Self {
        Evidence {
            name: c.name.clone(),
            value: Some(c.value),
            threshold: Some(c.threshold),
            bound: Some(c.bound),
            passed: c.passed(),
            judged: true,
            detail: None,
        }
    }

    /// A check measured against its threshold but kept out of the status.
    pub fn reported(c: &NumericCheck) -> Self {
        Evidence { judged: false, ..Evidence::judged(c) }
    }

    /// A bare measured value.
    pub fn value(name: impl Into<String>, v: f64) -> Self {
        Evidence {
            name: name.into(),
            value: Some(v),
            threshold: None,
            bound: None,
            passed: v.is_finite(),
            judged: false,
            detail: None,
        }
    }

    /// A judged yes/no relation.
    pub fn relation(name: impl Into<String>, ok: bool) -> Self {
        Evidence { name: name.into(), value: None, threshold: None, bound: None, passed: ok, judged: true, detail: None }
    }

    pub fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn unjudged(mut self) -> Self {
        self.judged = false;
        self
    }
}

/// Evidence for an exact report: a summary line plus one line per failure.
pub fn exact_evidence(rep: &AlgebraClosureReport) -> Vec<Evidence> {
    let mut ev = vec![Evidence::relation(
        format!("{} relations, {} failed", rep.relations_checked, rep.failures().len()),
        rep.passed(),
    )];
    for f in rep.failures() {
        let mut e = Evidence::relation(f.label.clone(), false).unjudged();
        if !f.detail.is_empty() {
            e = e.with_detail(f.detail.clone());
        }
        ev.push(e);
    }
    ev
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimRecord {
    pub id: String,
    pub group: String,
    pub anchor: String,
    pub kind: ClaimKind,
    status: ClaimStatus,
    /// Worst judged upper-bounded value.
    #[serde(serialize_with = "ser_opt_f64")]
    pub residual: Option<f64>,
    #[serde(serialize_with = "ser_opt_f64")]
    pub tolerance: Option<f64>,
    pub relations_checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub real_dimension: Option<usize>,
    pub evidence: Vec<Evidence>,
    pub notes: Vec<String>,
}

impl ClaimRecord {
    pub fn new(entry: &CatalogEntry, evidence: Vec<Evidence>, relations_checked: usize, notes: Vec<String>) -> Self {
        let judged: Vec<&Evidence> = evidence.iter().filter(|e| e.judged).collect();
        let ok = !judged.is_empty() && judged.iter().all(|e| e.passed);
        let numeric = judged.iter().any(|e| e.value.is_some());
        let status = match (entry.kind, ok) {
            (ClaimKind::ContestedByDesign, false) => ClaimStatus::Contested,
            (_, false) => ClaimStatus::Failed,
            (ClaimKind::Exact, true) => ClaimStatus::VerifiedExact,
            (ClaimKind::Numeric, true) => ClaimStatus::VerifiedNumeric,
            (ClaimKind::ContestedByDesign, true) if numeric => ClaimStatus::VerifiedNumeric,
            (ClaimKind::ContestedByDesign, true) => ClaimStatus::VerifiedExact,
        };
        let mut worst: Option<&Evidence> = None;
        for e in judged.iter().filter(|e| e.bound == Some(Bound::AtMost) && e.value.is_some()) {
            let v = e.value.unwrap();
            match worst {
                Some(w) if w.value.unwrap().is_nan() => {}
                Some(w) if !(v.is_nan() || v > w.value.unwrap()) => {}
                _ => worst = Some(e),
            }
        }
        ClaimRecord {
            id: entry.id.clone(),
            group: entry.group.clone(),
            anchor: entry.anchor.clone(),
            kind: entry.kind,
            status,
            residual: worst.and_then(|w| w.value),
            tolerance: worst.and_then(|w| w.threshold),
            relations_checked,
            element_count: None,
            real_dimension: None,
            evidence,
            notes,
        }
    }

    pub fn from_exact(entry: &CatalogEntry, rep: &AlgebraClosureReport) -> Self {
        let mut rec = ClaimRecord::new(entry, exact_evidence(rep), rep.relations_checked, rep.notes.clone());
        rec.element_count = Some(rep.element_count);
        rec.real_dimension = rep.real_dimension;
        rec
    }

    pub fn status(&self) -> ClaimStatus {
        self.status
    }

    /// Failed and counted against the exit status.
    pub fn gates_failure(&self) -> bool {
        self.kind.gates_exit() && self.status == ClaimStatus::Failed
    }
}
