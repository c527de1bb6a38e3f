//! Machine-readable results: tallies as `{"weight": "count"}` maps with
//! decimal-string counts, so values beyond 64 bits survive any JSON reader.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::relations::{RelationReport, RelationSuite};
use crate::tally::WeightTally;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl From<&RelationReport> for CheckResult {
    fn from(r: &RelationReport) -> Self {
        Self {
            name: r.name.clone(),
            pass: r.passed(),
            detail: r.detail(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LwdReport {
    /// Where the code came from: a family with parameters or a file path.
    pub code: String,
    /// Length of every tally in the report.
    pub n: usize,
    pub k: Option<usize>,
    pub mode: String,
    /// The transfer identity applied, for derived tallies.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity: Option<String>,
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<WeightTally>,
    #[serde(rename = "L")]
    pub lwd: WeightTally,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub only_odd: Option<WeightTally>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckResult>,
    pub duration_ms: u64,
}

impl LwdReport {
    pub fn new(
        code: impl Into<String>,
        k: Option<usize>,
        mode: impl Into<String>,
        lwd: WeightTally,
    ) -> Self {
        Self {
            code: code.into(),
            n: lwd.length(),
            k,
            mode: mode.into(),
            identity: None,
            weights: None,
            lwd,
            only_odd: None,
            checks: Vec::new(),
            duration_ms: 0,
        }
    }

    pub fn with_checks(mut self, suite: &RelationSuite) -> Self {
        self.checks = suite.reports.iter().map(CheckResult::from).collect();
        self
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Parses a report and restores every tally's length to `n`.
    pub fn from_json(text: &str) -> Result<Self> {
        let mut r: LwdReport = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        let n = r.n;
        r.lwd = r.lwd.with_length(n)?;
        r.weights = r.weights.map(|t| t.with_length(n)).transpose()?;
        r.only_odd = r.only_odd.map(|t| t.with_length(n)).transpose()?;
        Ok(r)
    }
}
