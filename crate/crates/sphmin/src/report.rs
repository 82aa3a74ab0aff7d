//! Structured pass/fail records with a versioned JSON schema.

use serde::Serialize;
use std::time::Instant;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Recorded,
}

/// One verified statement.  `statement_id` is a stable slash-separated
/// key such as `exchange/slsp(2)/w2/w=e`; a failing report always
/// carries at least one witness.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub statement_id: String,
    pub status: Status,
    pub trials: u64,
    pub witnesses: Vec<serde_json::Value>,
    pub runtime_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Builder that tracks runtime and enforces the witness invariant.
pub struct ReportBuilder {
    statement_id: String,
    trials: u64,
    witnesses: Vec<serde_json::Value>,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(statement_id: impl Into<String>) -> Self {
        Self {
            statement_id: statement_id.into(),
            trials: 0,
            witnesses: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn trial(&mut self) {
        self.trials += 1;
    }

    pub fn witness(&mut self, value: serde_json::Value) {
        self.witnesses.push(value);
    }

    pub fn fail_with(mut self, value: serde_json::Value) -> VerificationReport {
        self.witnesses.push(value);
        self.finish(Status::Fail)
    }

    pub fn finish(self, status: Status) -> VerificationReport {
        assert!(
            status != Status::Fail || !self.witnesses.is_empty(),
            "failing reports must carry a witness"
        );
        VerificationReport {
            schema: SCHEMA_VERSION,
            statement_id: self.statement_id,
            status,
            trials: self.trials,
            witnesses: self.witnesses,
            runtime_ms: self.started.elapsed().as_millis(),
        }
    }
}

/// Top-level JSON document emitted by the CLI.
#[derive(Debug, Serialize)]
pub struct ReportDocument {
    pub schema: u32,
    pub seed: u64,
    pub reports: Vec<VerificationReport>,
}

impl ReportDocument {
    pub fn new(seed: u64, reports: Vec<VerificationReport>) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            seed,
            reports,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(VerificationReport::passed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fail_requires_witness() {
        let r = ReportBuilder::new("x").fail_with(serde_json::json!({"bad": 1}));
        assert_eq!(r.status, Status::Fail);
        assert!(!r.witnesses.is_empty());
        assert!(!r.passed());
    }

    #[test]
    #[should_panic(expected = "witness")]
    fn fail_without_witness_panics() {
        let _ = ReportBuilder::new("x").finish(Status::Fail);
    }
}
