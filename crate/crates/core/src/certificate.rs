//! JSON certificates emitted for every checked claim.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;

/// Bumped whenever the certificate layout changes.
pub const SCHEMA_VERSION: u32 = 1;

pub fn tool_version() -> String {
    format!("polyflat {} (schema {SCHEMA_VERSION})", env!("CARGO_PKG_VERSION"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Verified,
    Refuted,
    WitnessFound,
    ExhaustedNoWitness,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: String,
    pub inputs: Value,
    pub verdict: Verdict,
    pub payload: Value,
    pub version: String,
    /// Reason code from [`Error::code`], present exactly when the verdict
    /// is `error`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl Certificate {
    pub fn new(claim: &str, inputs: Value, verdict: Verdict, payload: Value) -> Self {
        Certificate {
            claim: claim.to_string(),
            inputs,
            verdict,
            payload,
            version: tool_version(),
            reason: None,
        }
    }

    pub fn from_bool(claim: &str, inputs: Value, ok: bool, payload: Value) -> Self {
        let verdict = if ok { Verdict::Verified } else { Verdict::Refuted };
        Self::new(claim, inputs, verdict, payload)
    }

    pub fn error(claim: &str, inputs: Value, err: &Error) -> Self {
        let mut c = Self::new(
            claim,
            inputs,
            Verdict::Error,
            serde_json::json!({ "message": err.to_string() }),
        );
        c.reason = Some(err.code().to_string());
        c
    }

    /// 0 verified or witness found, 1 refuted or exhausted, 2 bad input,
    /// 3 internal failure.
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Verified | Verdict::WitnessFound => 0,
            Verdict::Refuted | Verdict::ExhaustedNoWitness => 1,
            Verdict::Error => match self.reason.as_deref() {
                Some("internal_assertion") | Some("io") => 3,
                _ => 2,
            },
        }
    }

    /// Compact single-line JSON; object keys are sorted so output is
    /// byte-stable.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

/// Exit code for a batch: the worst of the individual codes.
pub fn batch_exit_code(certs: &[Certificate]) -> i32 {
    certs.iter().map(Certificate::exit_code).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn round_trip() {
        let c = Certificate::new(
            "x",
            json!({"n": 5}),
            Verdict::ExhaustedNoWitness,
            json!({"b": [1, 2], "a": null}),
        );
        let s = c.to_json();
        assert_eq!(Certificate::from_json(&s).unwrap(), c);
        assert_eq!(Certificate::from_json(&s).unwrap().to_json(), s);
        assert!(s.contains("\"exhausted_no_witness\""));
        assert!(!s.contains("reason"));
    }

    #[test]
    fn exit_codes() {
        let e = Certificate::error("x", json!({}), &Error::InvalidArgument("bad".into()));
        assert_eq!(e.reason.as_deref(), Some("invalid_argument"));
        assert_eq!(e.exit_code(), 2);
        assert_eq!(
            Certificate::error("x", json!({}), &Error::Internal("boom".into())).exit_code(),
            3
        );
        assert_eq!(Certificate::from_bool("x", json!({}), false, json!({})).exit_code(), 1);
    }
}
