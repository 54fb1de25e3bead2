use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;

/// A named group of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Moduli,
    Elliptic,
    Fgl,
    Bp,
    Steenrod,
    Kforms,
    Modularforms,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Moduli, Suite::Elliptic, Suite::Fgl, Suite::Bp, Suite::Steenrod, Suite::Kforms, Suite::Modularforms];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Moduli => "moduli",
            Suite::Elliptic => "elliptic",
            Suite::Fgl => "fgl",
            Suite::Bp => "bp",
            Suite::Steenrod => "steenrod",
            Suite::Kforms => "kforms",
            Suite::Modularforms => "modularforms",
        }
    }

    /// Expands `all` and removes duplicates, keeping canonical order.
    pub fn parse_list<S: AsRef<str>>(names: &[S]) -> Result<Vec<Suite>, UnknownSuite> {
        let mut out = Vec::new();
        for n in names {
            match n.as_ref() {
                "all" => out.extend(Suite::ALL),
                s => out.push(s.parse()?),
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        write!(f, "unknown suite '{}' (expected one of: {}, all)", self.0, names.join(", "))
    }
}

impl std::error::Error for UnknownSuite {}

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RunConfig {
    pub max_degree: usize,
    pub series_prec: usize,
    pub two_adic_prec: usize,
    pub q_terms: usize,
    pub suites: Vec<Suite>,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    /// Seed for the randomized checks.
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_degree: 32,
            series_prec: 12,
            two_adic_prec: 4,
            q_terms: 16,
            suites: Suite::ALL.to_vec(),
            output_path: None,
            format: Format::Text,
            seed: 0,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        let bounds = [
            ("max-degree", self.max_degree),
            ("series-prec", self.series_prec),
            ("two-adic-prec", self.two_adic_prec),
            ("q-terms", self.q_terms),
        ];
        for (name, v) in bounds {
            if v == 0 {
                return Err(format!("--{name} must be positive"));
            }
        }
        if self.suites.is_empty() {
            return Err("no suites selected".into());
        }
        Ok(())
    }

    /// Reads `VERIFY_SEED`, defaulting to 0.
    pub fn seed_from_env() -> Result<u64, String> {
        match std::env::var("VERIFY_SEED") {
            Ok(s) => s.trim().parse().map_err(|_| format!("VERIFY_SEED={s} is not an unsigned integer")),
            Err(_) => Ok(0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_expands_in_order() {
        let s = Suite::parse_list(&["steenrod", "all", "bp"]).unwrap();
        assert_eq!(s, Suite::ALL.to_vec());
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert_eq!(Suite::parse_list(&["tmf"]), Err(UnknownSuite("tmf".into())));
    }

    #[test]
    fn zero_bound_is_invalid() {
        let c = RunConfig { q_terms: 0, ..Default::default() };
        assert!(c.validate().is_err());
        assert!(RunConfig::default().validate().is_ok());
    }
}
