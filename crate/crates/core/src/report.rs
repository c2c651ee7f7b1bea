//! Machine-readable verification reports.

use std::fmt;

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    /// A known counterexample outside the property's hypotheses reproduced.
    #[serde(rename = "EXPECTED-FAIL")]
    ExpectedFail,
    /// Outcome noted without an expectation either way.
    #[serde(rename = "RECORDED")]
    Recorded,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::ExpectedFail => "EXPECTED-FAIL",
            Verdict::Recorded => "RECORDED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub row: String,
    pub instances: usize,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub version: String,
    pub input_sha256: String,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn new(input: &[u8]) -> Self {
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            input_sha256: sha256_hex(input),
            checks: Vec::new(),
        }
    }

    pub fn has_failures(&self) -> bool {
        self.checks.iter().any(|c| c.verdict == Verdict::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises") + "\n"
    }

    /// One line per check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{:<14} {:<32} {:>5}  {}\n",
                c.verdict.to_string(),
                c.name,
                c.instances,
                c.row
            ));
            if let Some(w) = &c.witness {
                out.push_str(&format!("               witness: {w}\n"));
            }
        }
        out
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_of_empty_input() {
        assert_eq!(
            sha256_hex(b""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }

    #[test]
    fn json_shape() {
        let mut r = Report::new(b"abc");
        r.checks.push(CheckRecord {
            name: "meets".into(),
            row: "r".into(),
            instances: 3,
            verdict: Verdict::ExpectedFail,
            witness: None,
        });
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["checks"][0]["verdict"], "EXPECTED-FAIL");
        assert!(v["checks"][0].get("witness").is_none());
        assert_eq!(
            v["input_sha256"],
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
        assert!(!r.has_failures());
    }
}
