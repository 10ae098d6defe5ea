//! Structured pass/fail reporting for the claim verifiers and searches.
//!
//! Every check records both the expected and the observed value as strings,
//! so a failing report is diagnosable without re-running anything.

use serde::Serialize;

/// One verified fact: a name, what was expected, what was observed.
#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

impl CheckLine {
    pub fn compare<E: ToString, O: ToString>(name: &str, expected: E, observed: O) -> Self {
        let expected = expected.to_string();
        let observed = observed.to_string();
        let pass = expected == observed;
        CheckLine {
            name: name.to_string(),
            expected,
            observed,
            pass,
        }
    }
}

/// Outcome of one claim verification: its checks, free-form measurement
/// notes, and an optional counterexample coloring when a check that expected
/// unsatisfiability found a coloring instead.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub claim: String,
    pub pass: bool,
    pub checks: Vec<CheckLine>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<u8>>,
    pub elapsed_ms: u64,
}

impl ClaimReport {
    pub fn new(claim: &str) -> Self {
        ClaimReport {
            claim: claim.to_string(),
            pass: true,
            checks: Vec::new(),
            notes: Vec::new(),
            witness: None,
            elapsed_ms: 0,
        }
    }

    pub fn push(&mut self, check: CheckLine) {
        self.pass &= check.pass;
        self.checks.push(check);
    }

    pub fn note<S: ToString>(&mut self, s: S) {
        self.notes.push(s.to_string());
    }

    /// Renders the report as the human-readable lines the CLI prints.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        out.push_str(&format!("{}: {} ({} ms)\n", self.claim, verdict, self.elapsed_ms));
        for c in &self.checks {
            let mark = if c.pass { "ok " } else { "FAIL" };
            out.push_str(&format!(
                "  [{mark}] {}: expected {}, observed {}\n",
                c.name, c.expected, c.observed
            ));
        }
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        if let Some(w) = &self.witness {
            let rendered: Vec<String> = w.iter().map(|c| c.to_string()).collect();
            out.push_str(&format!("  witness coloring: {}\n", rendered.join(" ")));
        }
        out
    }
}
