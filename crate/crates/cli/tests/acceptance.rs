//! Acceptance criteria 1-11. Prints one line per criterion and exits
//! nonzero if any criterion fails or exceeds its time limit.

use std::process::Command;
use std::time::{Duration, Instant};

use chromalg_cli::suites::{find, run_check};
use chromalg_cli::{RunConfig, Status};

struct Criterion {
    number: u32,
    title: &'static str,
    limit: Duration,
    run: fn() -> Result<String, String>,
}

/// Runs the named checks under `config` and joins their details.
fn checks(config: &RunConfig, ids: &[&str]) -> Result<String, String> {
    let mut notes = Vec::new();
    for id in ids {
        let (suite, check) = find(id).ok_or_else(|| format!("no check {id}"))?;
        let r = run_check(suite, check, config);
        if r.status != Status::Pass {
            return Err(format!("{id}: {:?}: {}", r.status, r.details));
        }
        notes.push(id.to_string());
    }
    Ok(notes.join(", "))
}

fn defaults() -> RunConfig {
    RunConfig::default()
}

fn modular_invariants() -> Result<String, String> {
    checks(&defaults(), &["elliptic.c4", "elliptic.c6", "elliptic.discriminant", "elliptic.j_invariant"])
}

fn reduction_table() -> Result<String, String> {
    checks(
        &defaults(),
        &["elliptic.reduction_f2", "elliptic.reduction_f4", "elliptic.reduction_f8", "elliptic.chart_v_ordinary"],
    )
}

fn cusp_evaluation() -> Result<String, String> {
    checks(&defaults(), &["elliptic.tate_invariants", "elliptic.tate_family_map"])
}

fn hazewinkel() -> Result<String, String> {
    let config = RunConfig { series_prec: 12, ..defaults() };
    checks(&config, &["fgl.hazewinkel_v1", "fgl.hazewinkel_v2", "fgl.multiplicative_v2", "fgl.tate_v2"])
}

fn canonical_subgroup() -> Result<String, String> {
    // b-precision is twice the 2-adic precision.
    let config = RunConfig { two_adic_prec: 4, ..defaults() };
    checks(&config, &["fgl.canonical_quotient"])
}

fn cech() -> Result<String, String> {
    checks(
        &defaults(),
        &[
            "moduli.h0_ranks",
            "moduli.h1_degree_minus_four",
            "moduli.duality_annihilation",
            "moduli.h1_vanishing",
            "moduli.higher_vanishing",
        ],
    )
}

fn steenrod() -> Result<String, String> {
    let a = checks(&defaults(), &["steenrod.subalgebra_dims"])?;
    let b = checks(&RunConfig { max_degree: 48, ..defaults() }, &["steenrod.convolution"])?;
    let c = checks(&RunConfig { max_degree: 32, ..defaults() }, &["steenrod.duality_e2"])?;
    let d = checks(&RunConfig { max_degree: 16, ..defaults() }, &["steenrod.square"])?;
    Ok(format!("{a}, {b} to 48, {c} to 32, {d} to 16"))
}

fn tor_degeneration() -> Result<String, String> {
    // bpn_regular caps at degree 20 and exterior_pattern at 24.
    checks(&RunConfig { max_degree: 24, ..defaults() }, &["bp.bpn_regular", "bp.exterior_pattern"])
}

fn q_expansions() -> Result<String, String> {
    checks(
        &RunConfig { q_terms: 16, ..defaults() },
        &[
            "modularforms.delta_integrality",
            "modularforms.delta_product",
            "modularforms.j_inverse",
            "modularforms.psi_defect_random",
        ],
    )
}

fn forms_and_fibers() -> Result<String, String> {
    // Series precision is exclusive, so 13 reaches degree 12.
    checks(
        &RunConfig { series_prec: 13, ..defaults() },
        &[
            "elliptic.supersingular_automorphisms",
            "elliptic.node_group_law",
            "kforms.conic_vs_multiplicative",
            "kforms.degree_two_generator",
            "kforms.galois_cohomology",
            "kforms.frobenius_obstruction",
        ],
    )
}

fn verify_all(path: &std::path::Path) -> Result<serde_json::Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(["all", "--json"])
        .arg(path)
        .output()
        .map_err(|e| e.to_string())?;
    if out.status.code() != Some(0) {
        return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stdout)));
    }
    let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    serde_json::from_str(&text).map_err(|e| e.to_string())
}

fn determinism() -> Result<String, String> {
    let dir = std::env::temp_dir().join(format!("verify-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let mut a = verify_all(&dir.join("a.json"))?;
    let mut b = verify_all(&dir.join("b.json"))?;
    let _ = std::fs::remove_dir_all(&dir);
    let n = a["checks"].as_array().map_or(0, Vec::len);
    for r in [&mut a, &mut b] {
        r.as_object_mut().ok_or("report is not an object")?.remove("header");
    }
    if a != b {
        return Err("reports differ outside the header".into());
    }
    if n < 40 {
        return Err(format!("only {n} checks"));
    }
    Ok(format!("two runs of `verify all --json` agree on {n} checks"))
}

const CRITERIA: &[Criterion] = &[
    Criterion { number: 1, title: "modular invariants", limit: Duration::from_secs(1), run: modular_invariants },
    Criterion { number: 2, title: "reduction-type table", limit: Duration::from_secs(5), run: reduction_table },
    Criterion { number: 3, title: "cusp evaluation", limit: Duration::from_secs(1), run: cusp_evaluation },
    Criterion { number: 4, title: "Hazewinkel generators", limit: Duration::from_secs(10), run: hazewinkel },
    Criterion { number: 5, title: "canonical subgroup", limit: Duration::from_secs(10), run: canonical_subgroup },
    Criterion { number: 6, title: "Cech cohomology", limit: Duration::from_secs(1), run: cech },
    Criterion { number: 7, title: "Steenrod suite", limit: Duration::from_secs(60), run: steenrod },
    Criterion { number: 8, title: "Tor degeneration", limit: Duration::from_secs(60), run: tor_degeneration },
    Criterion { number: 9, title: "q-expansions", limit: Duration::from_secs(5), run: q_expansions },
    Criterion { number: 10, title: "Gm forms and fibers", limit: Duration::from_secs(30), run: forms_and_fibers },
    Criterion { number: 11, title: "determinism", limit: Duration::from_secs(300), run: determinism },
];

fn main() {
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (ok, details) = match outcome {
            Ok(d) if elapsed <= c.limit => (true, d),
            Ok(d) => (false, format!("{d}; over the {:?} limit", c.limit)),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "{} criterion {:>2} {} ({:.2?} / {:?}): {}",
            if ok { "PASS" } else { "FAIL" },
            c.number,
            c.title,
            elapsed,
            c.limit,
            details
        );
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
