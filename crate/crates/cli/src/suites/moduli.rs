use chromalg::moduli::{
    annihilation_check, chart_transition_check, h0_multiplication_check, vanishing_above_one, CechComplex, WeightedProj,
};

use super::{verdict, Check, Outcome};
use crate::RunConfig;

pub static CHECKS: &[Check] = &[
    Check { id: "moduli.h0_ranks", paper_ref: "moduli.cohomology", run: h0_ranks },
    Check { id: "moduli.h1_ranks", paper_ref: "moduli.cohomology", run: h1_ranks },
    Check { id: "moduli.h1_degree_minus_four", paper_ref: "moduli.duality-class", run: h1_minus_four },
    Check { id: "moduli.h1_vanishing", paper_ref: "moduli.cohomology", run: h1_vanishing },
    Check { id: "moduli.higher_vanishing", paper_ref: "moduli.cohomology", run: higher_vanishing },
    Check { id: "moduli.duality_annihilation", paper_ref: "moduli.duality-class", run: duality_annihilation },
    Check { id: "moduli.serre_duality_ranks", paper_ref: "moduli.duality-class", run: serre_duality },
    Check { id: "moduli.h0_multiplication", paper_ref: "moduli.cohomology", run: h0_multiplication },
    Check { id: "moduli.chart_transition", paper_ref: "moduli.charts", run: chart_transition },
];

const RANGE: std::ops::RangeInclusive<i64> = -40..=40;

/// `#{(i, j) >= 0 : i + 3j = n}`.
fn count_h0(n: i64) -> usize {
    if n < 0 {
        0
    } else {
        (n / 3 + 1) as usize
    }
}

/// `#{(i, j) >= 1 : i + 3j = -n}`.
fn count_h1(n: i64) -> usize {
    (1..).take_while(|j| 3 * j < -n).filter(|j| -n - 3 * j >= 1).count()
}

/// Every class lies in `|j| <= |n| / 3 + 1`.
fn window(n: i64) -> i64 {
    n.abs() + 4
}

fn ranks(n: i64) -> [usize; 4] {
    CechComplex::new(&WeightedProj::default(), n, window(n)).cohomology().h
}

fn h0_ranks(_: &RunConfig) -> chromalg::Result<Outcome> {
    let bad: Vec<i64> = RANGE.filter(|&n| ranks(n)[0] != count_h0(n)).collect();
    Ok(verdict(bad.is_empty(), format!("H^0(O(n)) = #{{i + 3j = n}} for n in [-40, 40]; mismatches {bad:?}")))
}

fn h1_ranks(_: &RunConfig) -> chromalg::Result<Outcome> {
    let bad: Vec<i64> = RANGE.filter(|&n| ranks(n)[1] != count_h1(n)).collect();
    Ok(verdict(
        bad.is_empty(),
        format!("H^1(O(n)) = #{{i + 3j = -n, i, j >= 1}} for n in [-40, 40]; mismatches {bad:?}"),
    ))
}

fn h1_minus_four(_: &RunConfig) -> chromalg::Result<Outcome> {
    let p = WeightedProj::default();
    let gens = p.h1(-4);
    let r = ranks(-4);
    let ok = r[1] == 1 && gens == vec![p.duality_class()];
    let names: Vec<String> = gens.iter().map(|m| p.monomial_string(*m)).collect();
    Ok(verdict(ok, format!("rank {} generated by {}", r[1], names.join(", "))))
}

fn h1_vanishing(_: &RunConfig) -> chromalg::Result<Outcome> {
    let bad: Vec<i64> = (-3..=40).filter(|&n| ranks(n)[1] != 0).collect();
    Ok(verdict(bad.is_empty(), format!("H^1(O(n)) = 0 for n in [-3, 40]; nonzero at {bad:?}")))
}

fn higher_vanishing(_: &RunConfig) -> chromalg::Result<Outcome> {
    let ok = vanishing_above_one(&WeightedProj::default(), RANGE);
    Ok(verdict(ok, "H^s(O(n)) = 0 for s >= 2, n in [-40, 40]"))
}

fn duality_annihilation(_: &RunConfig) -> chromalg::Result<Outcome> {
    let p = WeightedProj::default();
    let r = annihilation_check(&p);
    Ok(verdict(
        r.holds(),
        format!(
            "A D = [{}] and B D = [{}] are coboundaries: {}, {}; D is not: {} ({})",
            p.monomial_string(r.a_times_d.0),
            p.monomial_string(r.b_times_d.0),
            r.a_times_d.1,
            r.b_times_d.1,
            !r.d_is_coboundary,
            r.convention
        ),
    ))
}

fn serre_duality(_: &RunConfig) -> chromalg::Result<Outcome> {
    let bad: Vec<i64> = RANGE.filter(|&n| ranks(n)[1] != ranks(-4 - n)[0]).collect();
    Ok(verdict(bad.is_empty(), format!("rank H^1(O(n)) = rank H^0(O(-4 - n)) for n in [-40, 40]; mismatches {bad:?}")))
}

fn h0_multiplication(_: &RunConfig) -> chromalg::Result<Outcome> {
    let p = WeightedProj::default();
    let ok = (0..=9).all(|m| (0..=9).all(|n| h0_multiplication_check(&p, m, n)));
    Ok(verdict(ok, "H^0(m) x H^0(n) -> H^0(m + n) is monomial multiplication for m, n in [0, 9]"))
}

fn chart_transition(config: &RunConfig) -> chromalg::Result<Outcome> {
    let n = config.series_prec.clamp(3, 8);
    let t = chart_transition_check(n)?;
    Ok(verdict(
        t.holds(),
        format!(
            "(x, y) -> (a^-2 x, a^-3 y) takes {:?} to {:?}: {}; formal groups isomorphic through degree {}: {}",
            t.source.coeffs().map(|c| c.to_string()),
            t.target.coeffs().map(|c| c.to_string()),
            t.curves_agree,
            n - 1,
            t.fgl_iso_found
        ),
    ))
}
