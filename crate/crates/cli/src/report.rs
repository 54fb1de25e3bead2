use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::config::{RunConfig, Suite};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckResult {
    pub id: String,
    pub suite: Suite,
    pub status: Status,
    pub paper_ref: String,
    pub details: String,
    /// Kept out of the check objects so that reports compare byte for byte;
    /// the header carries the timings.
    #[serde(skip)]
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Header {
    pub version: &'static str,
    pub config: RunConfig,
    pub timings: BTreeMap<String, u64>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub header: Header,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    /// Sorts by id and fills in the summary and timings.
    pub fn new(config: RunConfig, mut checks: Vec<CheckResult>, elapsed_ms: u64) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        let timings = checks.iter().map(|c| (c.id.clone(), c.elapsed_ms)).collect();
        Report { header: Header { version: env!("CARGO_PKG_VERSION"), config, timings, elapsed_ms }, checks, summary }
    }

    pub fn exit_code(&self) -> i32 {
        if self.summary.fail == 0 {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.checks {
            let _ = writeln!(out, "{} {:width$} [{}] {}", c.status.label(), c.id, c.paper_ref, c.details);
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{} passed, {} failed, {} skipped ({} ms)",
            s.pass, s.fail, s.skipped, self.header.elapsed_ms
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(id: &str, status: Status, ms: u64) -> CheckResult {
        CheckResult {
            id: id.into(),
            suite: Suite::Fgl,
            status,
            paper_ref: "ref".into(),
            details: String::new(),
            elapsed_ms: ms,
        }
    }

    #[test]
    fn sorted_and_counted() {
        let r = Report::new(
            RunConfig::default(),
            vec![check("b", Status::Fail, 3), check("a", Status::Pass, 1), check("c", Status::Skipped, 2)],
            6,
        );
        assert_eq!(r.checks[0].id, "a");
        assert_eq!(r.summary, Summary { pass: 1, fail: 1, skipped: 1 });
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn timings_only_in_header() {
        let a = Report::new(RunConfig::default(), vec![check("a", Status::Pass, 1)], 1);
        let b = Report::new(RunConfig::default(), vec![check("a", Status::Pass, 99)], 99);
        let strip = |r: &Report| {
            let mut v = serde_json::to_value(r).unwrap();
            v.as_object_mut().unwrap().remove("header");
            v
        };
        assert_eq!(strip(&a), strip(&b));
        assert_eq!(a.header.timings["a"], 1);
    }
}
