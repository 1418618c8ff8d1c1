//! Machine-readable results of invariant suites and claim probes.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
    Reported,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Failed => "failed",
            Status::Reported => "reported",
        }
    }
}

/// Outcome of one asserted invariant.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimReport {
    pub claim: String,
    pub status: Status,
    pub params: Value,
    /// Number of individual instances checked.
    pub checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

/// Outcome of a probe: findings are data, never failures.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeReport {
    pub claim: String,
    pub status: Status,
    pub params: Value,
    pub radius: u32,
    pub checked: u64,
    pub disagreements: Vec<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub passed: bool,
    pub claims: Vec<ClaimReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeSummary {
    pub probes: Vec<ProbeReport>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, seed: u64, mut claims: Vec<ClaimReport>) -> Self {
        claims.sort_by(|a, b| a.claim.cmp(&b.claim));
        let passed = claims.iter().all(|c| c.status != Status::Failed);
        Self { suite: suite.into(), seed, passed, claims }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite {} (seed {})\n", self.suite, self.seed);
        for c in &self.claims {
            let _ = write!(out, "  {:<9} {:<28} {:>8} checked", c.status.as_str(), c.claim, c.checked);
            if let Some(ms) = c.timing_ms {
                let _ = write!(out, "  {ms:.1} ms");
            }
            out.push('\n');
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "            witness: {w}");
            }
        }
        let _ = writeln!(out, "{}", if self.passed { "all invariants verified" } else { "FAILED" });
        out
    }
}

impl ProbeSummary {
    pub fn new(mut probes: Vec<ProbeReport>) -> Self {
        probes.sort_by(|a, b| (&a.claim, a.params.to_string()).cmp(&(&b.claim, b.params.to_string())));
        Self { probes }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in &self.probes {
            let _ = write!(
                out,
                "{:<9} {:<24} {} radius {}: {} findings over {} cases",
                p.status.as_str(),
                p.claim,
                p.params,
                p.radius,
                p.disagreements.len(),
                p.checked
            );
            if let Some(ms) = p.timing_ms {
                let _ = write!(out, "  {ms:.1} ms");
            }
            out.push('\n');
            for d in p.disagreements.iter().take(5) {
                let _ = writeln!(out, "    {d}");
            }
            if p.disagreements.len() > 5 {
                let _ = writeln!(out, "    ... {} more", p.disagreements.len() - 5);
            }
        }
        out
    }
}
