//! The JSON document every CLI command emits.
//!
//! Everything except `duration_ms` is a function of the command, its parameters and the
//! input graph; [`ReportDocument::payload`] is that deterministic part.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;

pub const REPORT_SCHEMA: &str = "flipwide-report/v1";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Success,
    Valid,
    Failure,
    Invalid,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputInfo {
    pub source: String,
    /// SHA-256 of the canonical graph6 encoding, hex.
    pub digest: String,
    pub n: usize,
    pub edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub code: i32,
    pub message: String,
}

impl From<&Error> for ErrorInfo {
    fn from(e: &Error) -> Self {
        ErrorInfo {
            kind: e.kind().into(),
            code: e.code(),
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: String,
    pub tool_version: String,
    pub command: String,
    pub params: Value,
    pub input: Option<InputInfo>,
    pub status: Status,
    /// Whether every search behind the result was exhaustive; absent when no search ran.
    pub exhaustive: Option<bool>,
    pub result: Option<Value>,
    /// Failure or invalidity reason, or the error that stopped the command.
    pub reason: Option<String>,
    pub error: Option<ErrorInfo>,
    pub duration_ms: u64,
}

impl ReportDocument {
    pub fn new(command: &str, params: Value) -> Self {
        ReportDocument {
            schema: REPORT_SCHEMA.into(),
            tool_version: TOOL_VERSION.into(),
            command: command.into(),
            params,
            input: None,
            status: Status::Success,
            exhaustive: None,
            result: None,
            reason: None,
            error: None,
            duration_ms: 0,
        }
    }

    /// Replaces any result with the error. The report then carries no partial payload.
    pub fn fail_with(&mut self, e: &Error) {
        self.status = Status::Error;
        self.result = None;
        self.exhaustive = None;
        self.reason = Some(e.to_string());
        self.error = Some(e.into());
    }

    /// 0 on success or a valid witness, 1 on failure or invalidity, 2 on input errors.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Success | Status::Valid => 0,
            Status::Failure | Status::Invalid => 1,
            Status::Error => match &self.error {
                Some(e) if is_outcome_error(e.code) => 1,
                _ => 2,
            },
        }
    }

    /// The report without `duration_ms`, serialised compactly.
    pub fn payload(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serialises");
        v.as_object_mut().expect("report is an object").remove("duration_ms");
        v.to_string()
    }
}

/// Errors that describe the outcome of a well-formed request rather than a bad request.
fn is_outcome_error(code: i32) -> bool {
    matches!(code, 8..=11)
}

/// Exit code for a batch: the largest per-report code.
pub fn batch_exit_code(reports: &[ReportDocument]) -> i32 {
    reports.iter().map(ReportDocument::exit_code).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn round_trip_and_payload() {
        let mut doc = ReportDocument::new("ramsey", json!({"k": 1, "m": 3, "t0": 8}));
        doc.result = Some(json!({"value": "2701"}));
        doc.duration_ms = 17;
        let text = serde_json::to_string(&doc).unwrap();
        let back: ReportDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
        let mut other = doc.clone();
        other.duration_ms = 99;
        assert_eq!(other.payload(), doc.payload());
        assert!(!doc.payload().contains("duration_ms"));
    }

    #[test]
    fn exit_codes() {
        let mut doc = ReportDocument::new("verify", json!({}));
        assert_eq!(doc.exit_code(), 0);
        doc.status = Status::Invalid;
        assert_eq!(doc.exit_code(), 1);
        doc.fail_with(&Error::Malformed("x".into()));
        assert_eq!(doc.exit_code(), 2);
        doc.fail_with(&Error::PreconditionFailed("x".into()));
        assert_eq!(doc.exit_code(), 1);
        assert!(doc.result.is_none());
    }
}
