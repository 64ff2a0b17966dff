//! Machine-readable and text reports.
//!
//! The machine report is JSON with sorted keys and every float written as
//! `{:.16e}` (17 significant digits), so identical runs give identical bytes.
//! Runtimes only appear in the text summary.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

use crate::claims::{format_f64, ClaimRecord, ClaimStatus};
use crate::config::RunConfig;
use crate::VerifyError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub verified_exact: usize,
    pub verified_numeric: usize,
    pub failed: usize,
    pub contested: usize,
    /// Failed claims of kind exact or numeric.
    pub gating_failures: Vec<String>,
    pub exit_code: i32,
}

impl Summary {
    fn from_records(records: &[ClaimRecord]) -> Self {
        let count = |s: ClaimStatus| records.iter().filter(|r| r.status() == s).count();
        let gating: Vec<String> = records.iter().filter(|r| r.gates_failure()).map(|r| r.id.clone()).collect();
        Summary {
            total: records.len(),
            verified_exact: count(ClaimStatus::VerifiedExact),
            verified_numeric: count(ClaimStatus::VerifiedNumeric),
            failed: count(ClaimStatus::Failed),
            contested: count(ClaimStatus::Contested),
            exit_code: i32::from(!gating.is_empty()),
            gating_failures: gating,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub generator: &'static str,
    pub config: RunConfig,
    pub claims: Vec<ClaimRecord>,
    pub summary: Summary,
    #[serde(skip)]
    timings: Vec<(String, Duration)>,
}

impl Report {
    pub fn new(config: RunConfig, mut claims: Vec<ClaimRecord>, timings: Vec<(String, Duration)>) -> Self {
        claims.sort_by(|a, b| a.id.cmp(&b.id));
        let summary = Summary::from_records(&claims);
        Report { schema_version: SCHEMA_VERSION, generator: "dirac-verify", config, claims, summary, timings }
    }

    pub fn exit_code(&self) -> i32 {
        self.summary.exit_code
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimRecord> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn timings(&self) -> &[(String, Duration)] {
        &self.timings
    }

    pub fn to_machine(&self) -> Result<String, VerifyError> {
        let v = serde_json::to_value(self)?;
        let mut out = String::new();
        write_value(&mut out, &v, 0);
        out.push('\n');
        Ok(out)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let c = &self.config;
        let _ = writeln!(
            out,
            "dirac-verify: grid {}^3, box {}, m {}, Z alpha {}, seed {}, form {}",
            c.grid, c.box_len, c.mass, c.zalpha, c.seed, c.form
        );
        for r in &self.claims {
            let floor = r.evidence.iter().find(|e| e.judged && e.bound == Some(dirac_spectral::Bound::AtLeast));
            let residual = match (r.residual, r.tolerance, floor) {
                (Some(v), Some(t), _) => format!("residual {v:.3e} (tol {t:.0e})"),
                (Some(v), None, _) => format!("residual {v:.3e}"),
                (None, _, Some(e)) => {
                    format!("value {:.3e} (floor {:.0e})", e.value.unwrap_or(f64::NAN), e.threshold.unwrap_or(f64::NAN))
                }
                _ => format!("{} relations", r.relations_checked),
            };
            let time = self
                .timings
                .iter()
                .find(|(id, _)| *id == r.id)
                .map(|(_, d)| format!("{:.2}s", d.as_secs_f64()))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "{:<20} {:<17} {:<20} {:<34} {}",
                r.id,
                r.status().as_str(),
                r.kind.as_str(),
                residual,
                time
            );
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{} claims: {} verified-exact, {} verified-numeric, {} failed, {} contested",
            s.total, s.verified_exact, s.verified_numeric, s.failed, s.contested
        );
        if s.gating_failures.is_empty() {
            let _ = writeln!(out, "exit 0");
        } else {
            let _ = writeln!(out, "exit 1: {}", s.gating_failures.join(", "));
        }
        out
    }
}

fn indent(out: &mut String, level: usize) {
    for _ in 0..level {
        out.push_str("  ");
    }
}

fn write_value(out: &mut String, v: &Value, level: usize) {
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                let _ = write!(out, "{i}");
            } else if let Some(u) = n.as_u64() {
                let _ = write!(out, "{u}");
            } else {
                out.push_str(&format_f64(n.as_f64().unwrap_or(f64::NAN)));
            }
        }
        Value::String(s) => out.push_str(&Value::String(s.clone()).to_string()),
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str("[]");
                return;
            }
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                indent(out, level + 1);
                write_value(out, item, level + 1);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            indent(out, level);
            out.push(']');
        }
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push_str("{\n");
            // serde_json's default map is ordered by key
            for (k, (key, item)) in map.iter().enumerate() {
                indent(out, level + 1);
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(out, item, level + 1);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            indent(out, level);
            out.push('}');
        }
    }
}
