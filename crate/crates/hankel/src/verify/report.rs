//! Structured verification records and the JSON report document.
//!
//! Field names are pinned by `schema/report.schema.json`; bump
//! `SCHEMA_VERSION` on any change. Reports omit timings unless explicitly
//! requested so that two runs with the same configuration and seed are
//! byte-identical.

use serde::Serialize;
use serde_json::Value;
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "not-applicable")]
    NotApplicable,
    #[serde(rename = "budget-exhausted")]
    BudgetExhausted,
}

impl Status {
    pub fn passing(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// One verified statement instance: the claim, the parameters it was
/// instantiated with, and the computed-versus-expected evidence.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub check: String,
    /// The mathematical statement this record verifies.
    pub anchor: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub computed: Value,
    pub expected: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn sort_key(&self) -> (String, String, String) {
        (
            self.suite.clone(),
            self.check.clone(),
            serde_json::to_string(&self.params).unwrap_or_default(),
        )
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub budget_exhausted: usize,
}

impl Summary {
    pub fn tally(reports: &[Report]) -> Summary {
        let mut s = Summary { total: reports.len(), ..Summary::default() };
        for r in reports {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::NotApplicable => s.not_applicable += 1,
                Status::BudgetExhausted => s.budget_exhausted += 1,
            }
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub config: Value,
    pub reports: Vec<Report>,
    pub summary: Summary,
}

/// Helper for building parameter maps tersely.
pub fn params(entries: &[(&str, Value)]) -> BTreeMap<String, Value> {
    entries.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}
