use chromalg::bptheory::{
    bpn_sequence, bpn_shadow_module, koszul_tor, regular_sequence_check, right_unit, tor_degeneration_identity,
    tor_side_dims, v_degree, zero_action_tor_dims,
};
use chromalg::exactalg::{LocalInt, MPoly, Ring};
use chromalg::Z2Local;

use super::{verdict, Check, Outcome};
use crate::RunConfig;

pub static CHECKS: &[Check] = &[
    Check { id: "bp.right_unit_v1", paper_ref: "bp.right-unit", run: right_unit_v1 },
    Check { id: "bp.right_unit_invariance", paper_ref: "bp.right-unit", run: right_unit_invariance },
    Check { id: "bp.right_unit_log", paper_ref: "bp.right-unit", run: right_unit_log },
    Check { id: "bp.degeneration_p2", paper_ref: "tor.degeneration", run: degeneration_p2 },
    Check { id: "bp.degeneration_p3", paper_ref: "tor.degeneration", run: degeneration_p3 },
    Check { id: "bp.bpn_regular", paper_ref: "tor.regular-sequence", run: bpn_regular },
    Check { id: "bp.exterior_pattern", paper_ref: "tor.exterior", run: exterior_pattern },
];

/// Largest `k <= 3` with `v_k` in range at `p = 2`.
fn top_index(config: &RunConfig) -> u32 {
    (1..=3).take_while(|&k| v_degree(2, k) <= config.max_degree as i64).last().unwrap_or(0)
}

fn right_unit_v1(_: &RunConfig) -> chromalg::Result<Outcome> {
    let t2 = right_unit::<2>(1, 2)?;
    let want2 = MPoly::<Z2Local>::var("v1", 2) + MPoly::from_int(2) * MPoly::var("t1", 2);
    let t3 = right_unit::<3>(1, 4)?;
    let want3 = MPoly::<LocalInt<3>>::var("v1", 4) + MPoly::from_int(3) * MPoly::var("t1", 4);
    let ok = *t2.eta(1) == want2 && *t3.eta(1) == want3;
    Ok(verdict(ok, format!("eta_R(v1) = {} at p = 2, {} at p = 3", t2.eta(1), t3.eta(1))))
}

fn right_unit_invariance(config: &RunConfig) -> chromalg::Result<Outcome> {
    let k = top_index(config);
    if k == 0 {
        return Ok(Outcome::Skipped(format!("no v_k in degrees <= {}", config.max_degree)));
    }
    let t = right_unit::<2>(k, config.max_degree as i64)?;
    let bad: Vec<u32> = (1..=k).filter(|&i| !t.invariant_mod_previous(i).unwrap_or(false)).collect();
    Ok(verdict(bad.is_empty(), format!("eta_R(v_i) = v_i mod (2, v_1, ..., v_(i-1)) for i <= {k}; failures {bad:?}")))
}

fn right_unit_log(config: &RunConfig) -> chromalg::Result<Outcome> {
    let k = top_index(config);
    if k == 0 {
        return Ok(Outcome::Skipped(format!("no v_k in degrees <= {}", config.max_degree)));
    }
    let ok = right_unit::<2>(k, config.max_degree as i64)?.reproduces_log_formula()?;
    Ok(verdict(ok, format!("l_n(eta_R(v)) = sum l_i t_j^(2^i) over Q for n <= {k}")))
}

fn degeneration_p2(config: &RunConfig) -> chromalg::Result<Outcome> {
    let n = config.max_degree;
    for k in 0..4 {
        let r = tor_degeneration_identity(k, 2, n)?;
        if !r.holds() {
            return Ok(Outcome::Fail(format!("n = {k}: first mismatch in degree {:?}", r.first_mismatch())));
        }
    }
    Ok(Outcome::Pass(format!(
        "F_2[t_i] ⊗ Λ[x_k : k > n] matches B_* and the full count matches A_* for n = 0..3 through degree {n}"
    )))
}

fn degeneration_p3(config: &RunConfig) -> chromalg::Result<Outcome> {
    let n = config.max_degree.max(20);
    let r = tor_degeneration_identity(1, 3, n)?;
    let printed_differs = r.printed_bstar != r.bstar_side;
    let note = if printed_differs {
        let d = (0..=n).find(|&d| r.printed_bstar[d] != r.bstar_side[d]).unwrap_or(0);
        format!("; the form with squared xi differs from B_* from degree {d}")
    } else {
        String::new()
    };
    Ok(verdict(r.holds(), format!("p = 3, n = 1 through degree {n}: first mismatch {:?}{note}", r.first_mismatch())))
}

fn bpn_regular(config: &RunConfig) -> chromalg::Result<Outcome> {
    let n = (config.max_degree as i64).min(20);
    let mut notes = Vec::new();
    for k in 1..=2u32 {
        if v_degree(2, k) > n {
            break;
        }
        let m = bpn_shadow_module::<2>(k, n)?;
        let seq = bpn_sequence::<2>(k, n)?;
        let rep = regular_sequence_check(&seq, &m, n)?;
        if !rep.regular {
            let w = rep.steps.last().and_then(|s| s.witness.clone());
            return Ok(Outcome::Fail(format!("n = {k}: not regular, witness {w:?}")));
        }
        let tor = koszul_tor(&seq, &m, n)?;
        let h0: Vec<usize> = (0..=n).map(|d| tor.dim(0, d)).collect();
        if !tor.higher_vanish() || h0 != tor_side_dims(2, std::iter::empty(), n as usize) {
            return Ok(Outcome::Fail(format!("n = {k}: Koszul homology not concentrated in H_0 = F_2[t_i]")));
        }
        notes.push(k.to_string());
    }
    Ok(Outcome::Pass(format!(
        "(2, eta_R(v_1), ..., eta_R(v_n)) is regular with H_0 = F_2[t_i] through degree {n} for n = {}",
        notes.join(", ")
    )))
}

fn exterior_pattern(config: &RunConfig) -> chromalg::Result<Outcome> {
    let n = config.max_degree.min(24);
    let r = tor_degeneration_identity(2, 2, n)?;
    let full = zero_action_tor_dims::<2>(0, n as i64)?;
    let tail = zero_action_tor_dims::<2>(3, n as i64)?;
    let ok = r.holds() && full == r.full_tor && tail == r.tor_side && r.full_tor.get(1) == Some(&1);
    Ok(verdict(
        ok,
        format!(
            "Koszul Tor with zero action equals F_2[t_i] ⊗ Λ[x_k] through degree {n}; degree-1 class from 2: {}",
            r.full_tor.get(1).copied().unwrap_or(0)
        ),
    ))
}
