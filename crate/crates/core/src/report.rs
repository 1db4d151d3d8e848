//! Structured verdicts for finite, per-parameter checks.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
    OutOfRange,
    Unresolved,
}

/// One check outcome. Serializes with the stable field order
/// `check, params, verdict, witness, data`; object keys inside `params` and
/// `data` are sorted, so equal reports give equal bytes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub params: Value,
    pub verdict: Verdict,
    pub witness: Option<Value>,
    pub data: Value,
}

impl CheckReport {
    pub fn pass(check: &str, params: Value, data: Value) -> Self {
        CheckReport {
            check: check.to_string(),
            params,
            verdict: Verdict::Pass,
            witness: None,
            data,
        }
    }

    /// A failure always carries the counterexample that caused it.
    pub fn fail(check: &str, params: Value, witness: Value, data: Value) -> Self {
        CheckReport {
            check: check.to_string(),
            params,
            verdict: Verdict::Fail,
            witness: Some(witness),
            data,
        }
    }

    pub fn with_verdict(check: &str, params: Value, verdict: Verdict, witness: Option<Value>, data: Value) -> Self {
        assert!(verdict != Verdict::Fail || witness.is_some(), "FAIL without witness");
        CheckReport {
            check: check.to_string(),
            params,
            verdict,
            witness,
            data,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
