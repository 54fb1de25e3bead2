use chromalg::moduli::{eisenstein_j, psi_defect, QSeries};
use chromalg::Z;
use num_traits::{One, Zero};
use rand::Rng;

use super::{rng_for, verdict, Check, Outcome};
use crate::RunConfig;

pub static CHECKS: &[Check] = &[
    Check { id: "modularforms.eisenstein", paper_ref: "qexp.eisenstein", run: eisenstein },
    Check { id: "modularforms.delta_integrality", paper_ref: "qexp.delta", run: delta_integrality },
    Check { id: "modularforms.delta_product", paper_ref: "qexp.delta", run: delta_product },
    Check { id: "modularforms.j_expansion", paper_ref: "qexp.j", run: j_expansion },
    Check { id: "modularforms.j_inverse", paper_ref: "qexp.j-inverse", run: j_inverse },
    Check { id: "modularforms.psi_defect_random", paper_ref: "qexp.psi", run: psi_defect_random },
    Check { id: "modularforms.psi_multiplicative", paper_ref: "qexp.psi", run: psi_multiplicative },
];

fn ints(v: &[i64]) -> Vec<Z> {
    v.iter().map(|&x| Z::from(x)).collect()
}

fn coeffs(f: &QSeries<Z>, from: i64, count: usize) -> Vec<Z> {
    (from..from + count as i64).map(|n| f.coeff(n)).collect()
}

fn eisenstein(config: &RunConfig) -> chromalg::Result<Outcome> {
    let e = eisenstein_j(config.q_terms.max(3))?;
    let e4 = coeffs(&e.e4, 0, 3);
    let e6 = coeffs(&e.e6, 0, 3);
    let ok = e4 == ints(&[1, 240, 2160]) && e6 == ints(&[1, -504, -16632]);
    Ok(verdict(ok, format!("E4 = {e4:?}, E6 = {e6:?}")))
}

fn delta_integrality(config: &RunConfig) -> chromalg::Result<Outcome> {
    let e = eisenstein_j(config.q_terms)?;
    let start = e.delta.start;
    Ok(verdict(
        start == 1 && e.delta.coeff(1).is_one(),
        format!(
            "(E4^3 - E6^2) / 1728 integral through q^{}; Delta = q + ... (leading exponent {start})",
            config.q_terms - 1
        ),
    ))
}

/// `q prod (1 - q^n)^24` to `terms` coefficients.
fn delta_by_product(terms: usize) -> Vec<Z> {
    let mut p = vec![Z::zero(); terms];
    p[0] = Z::one();
    for n in 1..terms {
        for _ in 0..24 {
            for k in (n..terms).rev() {
                let t = p[k - n].clone();
                p[k] -= t;
            }
        }
    }
    let mut out = vec![Z::zero()];
    out.extend(p.into_iter().take(terms - 1));
    out
}

fn delta_product(config: &RunConfig) -> chromalg::Result<Outcome> {
    let n = config.q_terms;
    let e = eisenstein_j(n)?;
    let got = coeffs(&e.delta, 0, n);
    let want = delta_by_product(n);
    let shown: Vec<String> = got.iter().skip(1).take(4).map(ToString::to_string).collect();
    Ok(verdict(
        got == want,
        format!("Delta = q prod (1 - q^n)^24 through q^{}; tau(1..4) = {}", n - 1, shown.join(", ")),
    ))
}

fn j_expansion(config: &RunConfig) -> chromalg::Result<Outcome> {
    let e = eisenstein_j(config.q_terms.max(4))?;
    let got = coeffs(&e.j, -1, 4);
    Ok(verdict(
        got == ints(&[1, 744, 196884, 21493760]),
        format!("j = q^-1 + {} + {} q + {} q^2 + ...", got[1], got[2], got[3]),
    ))
}

fn j_inverse(config: &RunConfig) -> chromalg::Result<Outcome> {
    let e = eisenstein_j(config.q_terms.max(3))?;
    let got = coeffs(&e.j_inv, 0, 3);
    Ok(verdict(got == ints(&[0, 1, -744]), format!("1/j = {} + {} q + {} q^2 + ...", got[0], got[1], got[2])))
}

fn random_series(rng: &mut impl Rng, prec: usize) -> QSeries<Z> {
    let start = rng.gen_range(-3..=3);
    let c: Vec<Z> = (0..prec).map(|_| Z::from(rng.gen_range(-1000i64..=1000))).collect();
    QSeries::new(start, c, prec)
}

fn psi_defect_random(config: &RunConfig) -> chromalg::Result<Outcome> {
    let mut rng = rng_for(config, "modularforms.psi_defect_random");
    let prec = config.q_terms;
    let bad = (0..100).filter(|_| !psi_defect(&random_series(&mut rng, prec)).coeff(0).is_zero()).count();
    Ok(verdict(bad == 0, format!("f(q^2) - f(q) has constant term 0 on 100 random series; failures {bad}")))
}

fn psi_multiplicative(config: &RunConfig) -> chromalg::Result<Outcome> {
    let mut rng = rng_for(config, "modularforms.psi_multiplicative");
    let prec = config.q_terms;
    let mut bad = 0;
    for _ in 0..20 {
        let f = random_series(&mut rng, prec);
        let g = random_series(&mut rng, prec);
        let lhs = f.mul(&g).psi();
        let rhs = f.psi().mul(&g.psi());
        let top = lhs.end().min(rhs.end());
        if (lhs.start.min(rhs.start)..top).any(|n| lhs.coeff(n) != rhs.coeff(n)) {
            bad += 1;
        }
    }
    Ok(verdict(bad == 0, format!("psi(fg) = psi(f) psi(g) on 20 random pairs; failures {bad}")))
}
