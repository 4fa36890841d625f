//! Machine-readable check reports.
//!
//! Reports are the external contract of the batch runner: byte-identical
//! for identical (config, seed, tool version). All maps are ordered, records
//! are sorted by name, and every rational is serialized as exact `{num,den}`
//! strings.

use serde::Serialize;

use crate::Result;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

/// One named check with its verdict and exact payload. The `anchor` slug
/// names the mathematical property the record tests.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub verdict: Verdict,
    pub anchor: String,
    pub payload: serde_json::Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub suite: String,
    pub algebra: String,
    pub seed: u64,
    pub max_degree: usize,
    pub overall: Verdict,
    pub inconclusive_present: bool,
    pub records: Vec<CheckRecord>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(suite: &str, algebra: &str, seed: u64, max_degree: usize) -> Self {
        CheckReport {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            suite: suite.into(),
            algebra: algebra.into(),
            seed,
            max_degree,
            overall: Verdict::Pass,
            inconclusive_present: false,
            records: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        name: impl Into<String>,
        anchor: impl Into<String>,
        verdict: Verdict,
        payload: serde_json::Value,
    ) {
        self.records.push(CheckRecord {
            name: name.into(),
            verdict,
            anchor: anchor.into(),
            payload,
        });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Sorts records canonically and computes the aggregate verdict:
    /// fail if any record failed, otherwise pass; inconclusive records only
    /// set the flag.
    pub fn finalize(mut self) -> Self {
        self.records.sort_by(|a, b| a.name.cmp(&b.name));
        self.notes.sort();
        self.inconclusive_present = self
            .records
            .iter()
            .any(|r| r.verdict == Verdict::Inconclusive);
        self.overall = if self.records.iter().any(|r| r.verdict == Verdict::Fail) {
            Verdict::Fail
        } else {
            Verdict::Pass
        };
        self
    }

    /// Deterministic JSON bytes (two-space indentation, trailing newline).
    pub fn to_json_bytes(&self) -> Result<Vec<u8>> {
        let mut bytes = serde_json::to_vec_pretty(self)?;
        bytes.push(b'\n');
        Ok(bytes)
    }

    /// Human summary; the JSON form is the contract.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "suite {} on {} (seed {}, max degree {}, tool {})\n",
            self.suite, self.algebra, self.seed, self.max_degree, self.tool_version
        ));
        for r in &self.records {
            let v = match r.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::Inconclusive => "INCONCLUSIVE",
            };
            out.push_str(&format!("{v:>12}  {}  [{}]\n", r.name, r.anchor));
        }
        for n in &self.notes {
            out.push_str(&format!("        note  {n}\n"));
        }
        out.push_str(&format!(
            "overall: {}{}\n",
            match self.overall {
                Verdict::Pass => "pass",
                Verdict::Fail => "fail",
                Verdict::Inconclusive => "inconclusive",
            },
            if self.inconclusive_present && self.overall == Verdict::Pass {
                " (with inconclusive records)"
            } else {
                ""
            }
        ));
        out
    }

    /// Process exit status: 0 on pass, 1 on fail.
    pub fn exit_code(&self) -> i32 {
        match self.overall {
            Verdict::Fail => 1,
            _ => 0,
        }
    }
}
