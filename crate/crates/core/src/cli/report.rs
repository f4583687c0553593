use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::sullivan::{ComparisonVerdict, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ClaimStatus {
    Pass,
    Discrepant,
    Unstated,
}

impl ClaimStatus {
    pub fn label(self) -> &'static str {
        match self {
            ClaimStatus::Pass => "PASS",
            ClaimStatus::Discrepant => "DISCREPANT",
            ClaimStatus::Unstated => "UNSTATED",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub id: String,
    /// The mathematical statement being checked.
    pub anchor: String,
    pub computed: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    pub status: ClaimStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub tool_version: String,
    pub algebra_name: String,
    pub claims: Vec<ClaimRecord>,
    pub verdict: Option<ComparisonVerdict>,
    /// Step name to wall time in microseconds; empty unless requested.
    #[serde(default)]
    pub timings: BTreeMap<String, u64>,
}

impl AuditReport {
    pub fn new(algebra_name: &str) -> Self {
        AuditReport {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            algebra_name: algebra_name.to_string(),
            claims: Vec::new(),
            verdict: None,
            timings: BTreeMap::new(),
        }
    }

    /// Record a claim; the status is PASS or DISCREPANT when an expected
    /// value is given and UNSTATED otherwise.
    pub fn claim(&mut self, id: &str, anchor: &str, computed: impl Into<String>, expected: Option<&str>) -> &mut ClaimRecord {
        let computed = computed.into();
        let status = match expected {
            None => ClaimStatus::Unstated,
            Some(e) if e == computed => ClaimStatus::Pass,
            Some(_) => ClaimStatus::Discrepant,
        };
        self.claims.push(ClaimRecord {
            id: id.to_string(),
            anchor: anchor.to_string(),
            computed,
            expected: expected.map(str::to_string),
            status,
            note: None,
        });
        self.claims.last_mut().expect("just pushed")
    }

    pub fn get(&self, id: &str) -> Option<&ClaimRecord> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn count(&self, status: ClaimStatus) -> usize {
        self.claims.iter().filter(|c| c.status == status).count()
    }

    pub fn is_certificate(&self) -> bool {
        self.verdict.as_ref().is_some_and(ComparisonVerdict::is_certificate)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "audit of {} (solvmodel {})", self.algebra_name, self.tool_version);
        for c in &self.claims {
            let _ = writeln!(out, "[{:<10}] {}: {}", c.status.label(), c.id, c.anchor);
            let _ = writeln!(out, "             computed: {}", c.computed);
            if let Some(e) = &c.expected {
                let _ = writeln!(out, "             expected: {e}");
            }
            if let Some(n) = &c.note {
                let _ = writeln!(out, "             note: {n}");
            }
        }
        let _ = writeln!(
            out,
            "{} PASS, {} DISCREPANT, {} UNSTATED",
            self.count(ClaimStatus::Pass),
            self.count(ClaimStatus::Discrepant),
            self.count(ClaimStatus::Unstated)
        );
        if let Some(v) = &self.verdict {
            out.push_str(&render_verdict(v));
        }
        for (step, us) in &self.timings {
            let _ = writeln!(out, "time {step}: {:.3} ms", *us as f64 / 1000.0);
        }
        out
    }
}

pub fn render_verdict(v: &ComparisonVerdict) -> String {
    let mut out = String::new();
    for p in &v.compared_degrees {
        let _ = writeln!(
            out,
            "degree {p}: fiber stage-0 count {} ({}), CE closed generators {}",
            v.fiber_counts[p],
            if v.fiber_stable[p] { "perturbation-stable" } else { "not stable" },
            v.ce_counts[p]
        );
    }
    match &v.verdict {
        Verdict::NoLatticeCertificate { degree, fiber, ce } => {
            let _ = writeln!(out, "verdict: no lattice (degree {degree}: {fiber} ≠ {ce})");
        }
        Verdict::Inconclusive => {
            let _ = writeln!(out, "verdict: inconclusive");
        }
    }
    out
}
