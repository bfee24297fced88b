//! Deterministic JSON reports shared by the library and the command-line tool.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    /// A stated claim that was found to be inaccurate; the computed value is in `detail`.
    #[serde(rename = "FLAGGED")]
    Flagged,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub claim: String,
    pub paper_ref: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl ClaimResult {
    pub fn new(claim: impl Into<String>, paper_ref: impl Into<String>, status: Status) -> Self {
        ClaimResult { claim: claim.into(), paper_ref: paper_ref.into(), status, witness: None, detail: None }
    }

    pub fn check(claim: impl Into<String>, paper_ref: impl Into<String>, ok: bool) -> Self {
        Self::new(claim, paper_ref, Status::from_bool(ok))
    }

    pub fn with_witness(mut self, w: Option<impl ToString>) -> Self {
        self.witness = w.map(|w| w.to_string());
        self
    }

    pub fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub input: Option<String>,
    pub results: Vec<ClaimResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
}

impl Report {
    pub fn new(command: impl Into<String>, input: Option<String>) -> Self {
        Report { command: command.into(), input, results: Vec::new(), data: None }
    }

    pub fn push(&mut self, r: ClaimResult) {
        self.results.push(r);
    }

    pub fn any_failed(&self) -> bool {
        self.results.iter().any(|r| r.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.results.iter().filter(|r| r.status == status).count()
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
