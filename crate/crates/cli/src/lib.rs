//! Batch verification driver for the `chromalg` library.

pub mod config;
pub mod report;
pub mod suites;

use std::time::Instant;

pub use config::{Format, RunConfig, Suite, UnknownSuite};
pub use report::{CheckResult, Report, Status, Summary};

/// Runs the selected suites, one thread per suite, and collects a report.
pub fn run(config: &RunConfig) -> Report {
    let start = Instant::now();
    let results: Vec<CheckResult> = std::thread::scope(|scope| {
        let handles: Vec<_> =
            config.suites.iter().map(|&s| scope.spawn(move || suites::run_suite(s, config))).collect();
        handles.into_iter().flat_map(|h| h.join().expect("suite thread")).collect()
    });
    Report::new(config.clone(), results, start.elapsed().as_millis() as u64)
}

/// One row of the suite listing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteInfo {
    pub suite: Suite,
    pub checks: usize,
    pub refs: Vec<&'static str>,
}

pub fn list_suites() -> Vec<SuiteInfo> {
    Suite::ALL
        .into_iter()
        .map(|s| {
            let cs = suites::checks(s);
            let mut refs: Vec<&str> = cs.iter().map(|c| c.paper_ref).collect();
            refs.sort();
            refs.dedup();
            SuiteInfo { suite: s, checks: cs.len(), refs }
        })
        .collect()
}
