use std::path::PathBuf;
use std::process::ExitCode;

use chromalg_cli::{list_suites, run, Format, RunConfig, Suite};
use clap::Parser;

/// Runs the verification suites and reports one line per check.
#[derive(Parser, Debug)]
#[command(name = "verify", version)]
struct Args {
    /// Suites to run: moduli, elliptic, fgl, bp, steenrod, kforms, modularforms, all.
    #[arg(required_unless_present = "list_suites")]
    suites: Vec<String>,
    /// Degree bound for the Steenrod and Tor computations.
    #[arg(long, default_value_t = 32)]
    max_degree: usize,
    /// Total-degree precision of formal group laws.
    #[arg(long, default_value_t = 12)]
    series_prec: usize,
    /// Precision of the canonical-subgroup computations.
    #[arg(long, default_value_t = 4)]
    two_adic_prec: usize,
    /// Number of q-expansion coefficients.
    #[arg(long, default_value_t = 16)]
    q_terms: usize,
    /// Write the JSON report to PATH (`-` for standard output).
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// List the suites with their check counts.
    #[arg(long)]
    list_suites: bool,
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("verify: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if args.list_suites {
        for s in list_suites() {
            println!("{:<13} {:>3} checks  {}", s.suite.name(), s.checks, s.refs.join(", "));
        }
        return ExitCode::SUCCESS;
    }
    let suites = match Suite::parse_list(&args.suites) {
        Ok(s) => s,
        Err(e) => return usage(&e.to_string()),
    };
    let seed = match RunConfig::seed_from_env() {
        Ok(s) => s,
        Err(e) => return usage(&e),
    };
    let config = RunConfig {
        max_degree: args.max_degree,
        series_prec: args.series_prec,
        two_adic_prec: args.two_adic_prec,
        q_terms: args.q_terms,
        suites,
        format: if args.json.is_some() { Format::Json } else { Format::Text },
        output_path: args.json.clone(),
        seed,
    };
    if let Err(e) = config.validate() {
        return usage(&e);
    }
    let report = run(&config);
    match &args.json {
        Some(p) if p.as_os_str() == "-" => println!("{}", report.to_json()),
        Some(p) => {
            if let Err(e) = std::fs::write(p, report.to_json() + "\n") {
                eprintln!("verify: cannot write {}: {e}", p.display());
                return ExitCode::from(2);
            }
            print!("{}", report.to_text());
        }
        None => print!("{}", report.to_text()),
    }
    ExitCode::from(report.exit_code() as u8)
}
