//! Check registry. Each suite is a static table of checks.

mod bp;
mod elliptic;
mod fgl;
mod kforms;
mod modularforms;
mod moduli;
mod steenrod;

use std::time::Instant;

use crate::config::{RunConfig, Suite};
use crate::report::{CheckResult, Status};

pub enum Outcome {
    Pass(String),
    Fail(String),
    Skipped(String),
}

pub type CheckFn = fn(&RunConfig) -> chromalg::Result<Outcome>;

pub struct Check {
    pub id: &'static str,
    pub paper_ref: &'static str,
    pub run: CheckFn,
}

/// `Pass` or `Fail` with the same details.
pub fn verdict(ok: bool, details: impl Into<String>) -> Outcome {
    if ok {
        Outcome::Pass(details.into())
    } else {
        Outcome::Fail(details.into())
    }
}

pub fn checks(suite: Suite) -> &'static [Check] {
    match suite {
        Suite::Moduli => moduli::CHECKS,
        Suite::Elliptic => elliptic::CHECKS,
        Suite::Fgl => fgl::CHECKS,
        Suite::Bp => bp::CHECKS,
        Suite::Steenrod => steenrod::CHECKS,
        Suite::Kforms => kforms::CHECKS,
        Suite::Modularforms => modularforms::CHECKS,
    }
}

/// Looks a check up by its full id.
pub fn find(id: &str) -> Option<(Suite, &'static Check)> {
    Suite::ALL.into_iter().find_map(|s| checks(s).iter().find(|c| c.id == id).map(|c| (s, c)))
}

pub fn run_check(suite: Suite, check: &Check, config: &RunConfig) -> CheckResult {
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(|| (check.run)(config));
    let (status, details) = match outcome {
        Ok(Ok(Outcome::Pass(d))) => (Status::Pass, d),
        Ok(Ok(Outcome::Fail(d))) => (Status::Fail, d),
        Ok(Ok(Outcome::Skipped(d))) => (Status::Skipped, d),
        Ok(Err(e)) => (Status::Fail, format!("error: {e}")),
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            (Status::Fail, format!("panicked: {msg}"))
        }
    };
    CheckResult {
        id: check.id.to_string(),
        suite,
        status,
        paper_ref: check.paper_ref.to_string(),
        details,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

pub fn run_suite(suite: Suite, config: &RunConfig) -> Vec<CheckResult> {
    checks(suite).iter().map(|c| run_check(suite, c, config)).collect()
}

/// Seeded generator for the randomized checks, one stream per check id.
pub fn rng_for(config: &RunConfig, id: &str) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    let salt = id.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
    rand_chacha::ChaCha8Rng::seed_from_u64(config.seed ^ salt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn ids_unique_and_prefixed() {
        let mut seen = BTreeSet::new();
        for s in Suite::ALL {
            for c in checks(s) {
                assert!(c.id.starts_with(&format!("{}.", s.name())), "{}", c.id);
                assert!(!c.paper_ref.is_empty());
                assert!(seen.insert(c.id), "duplicate {}", c.id);
            }
        }
        assert!(seen.len() >= 40, "only {} checks", seen.len());
    }

    #[test]
    fn refs_resolve_to_claim_index() {
        let index = include_str!("../../../../docs/claims.md");
        let keys: BTreeSet<&str> = index
            .lines()
            .filter_map(|l| l.strip_prefix("- `"))
            .filter_map(|l| l.split_once("`:").map(|(k, _)| k))
            .collect();
        for s in Suite::ALL {
            for c in checks(s) {
                assert!(keys.contains(c.paper_ref), "{} cites unknown claim {}", c.id, c.paper_ref);
            }
        }
    }
}
