//! Verification records shared by the suites and the command line.

use serde::Serialize;

use crate::error::{Error, Result};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// A mismatch with a printed formula that does not affect the mathematics.
    RecordedDiscrepancy,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::RecordedDiscrepancy => "recorded-discrepancy",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub detail: String,
}

impl CheckRecord {
    pub fn new(id: &str, anchor: &str, status: Status, detail: impl Into<String>) -> Self {
        CheckRecord { id: id.to_string(), anchor: anchor.to_string(), status, detail: detail.into() }
    }

    /// Pass with the returned detail, or fail with the error text.
    pub fn from_result(id: &str, anchor: &str, r: Result<String>) -> Self {
        match r {
            Ok(detail) => CheckRecord::new(id, anchor, Status::Pass, detail),
            Err(e) => CheckRecord::new(id, anchor, Status::Fail, e.to_string()),
        }
    }

    pub fn discrepancy(id: &str, anchor: &str, detail: impl Into<String>) -> Self {
        CheckRecord::new(id, anchor, Status::RecordedDiscrepancy, detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub suite: String,
    pub checks: Vec<CheckRecord>,
    pub overall: Status,
}

impl Report {
    pub fn new(suite: &str, checks: Vec<CheckRecord>) -> Self {
        let overall = if checks.iter().any(|c| c.status == Status::Fail) { Status::Fail } else { Status::Pass };
        Report { schema_version: REPORT_SCHEMA_VERSION, suite: suite.to_string(), checks, overall }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("suite {}\n", self.suite);
        for c in &self.checks {
            s.push_str(&format!("  [{}] {} ({}): {}\n", c.status.as_str(), c.id, c.anchor, c.detail));
        }
        s.push_str(&format!("overall: {}\n", self.overall.as_str()));
        s
    }
}

/// Turns a failed condition into an `IdentityFailed` error.
pub fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::IdentityFailed(what()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrepancies_do_not_fail() {
        let r = Report::new(
            "x",
            vec![CheckRecord::new("a", "here", Status::Pass, ""), CheckRecord::discrepancy("b", "there", "typo")],
        );
        assert!(r.passed());
        let r = Report::new("x", vec![CheckRecord::from_result("c", "z", Err(Error::ZeroInput))]);
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn json_uses_kebab_status() {
        let r = Report::new("s", vec![CheckRecord::discrepancy("b", "t", "d")]);
        assert!(r.to_json().contains("\"recorded-discrepancy\""));
    }
}
