use chromalg::elliptic::{node_uniformization, reduction_type, CurveAutomorphism, ReductionType, WeierstrassCurve};
use chromalg::exactalg::{FiniteRing, MPoly, Ring};
use chromalg::fgl::{find_iso, multiplicative, IsoMode};
use chromalg::{F2, F4, F8, Q, Z};

use crate::RunConfig;
use num_traits::{One, Zero};

use super::{verdict, Check, Outcome};

type P = MPoly<Z>;

pub static CHECKS: &[Check] = &[
    Check { id: "elliptic.c4", paper_ref: "family.c4", run: c4 },
    Check { id: "elliptic.c6", paper_ref: "family.c6", run: c6 },
    Check { id: "elliptic.discriminant", paper_ref: "family.discriminant", run: discriminant },
    Check { id: "elliptic.j_invariant", paper_ref: "family.j", run: j_invariant },
    Check { id: "elliptic.three_torsion", paper_ref: "family.level-structure", run: three_torsion },
    Check { id: "elliptic.reduction_f2", paper_ref: "family.fibers", run: reduction_f2 },
    Check { id: "elliptic.reduction_f4", paper_ref: "family.fibers", run: reduction_f4 },
    Check { id: "elliptic.reduction_f8", paper_ref: "family.fibers", run: reduction_f8 },
    Check { id: "elliptic.chart_v_ordinary", paper_ref: "chart-v.ordinary", run: chart_v_ordinary },
    Check { id: "elliptic.tate_invariants", paper_ref: "cusp.tate-invariants", run: tate_invariants },
    Check { id: "elliptic.tate_family_map", paper_ref: "cusp.family-map", run: tate_family_map },
    Check { id: "elliptic.tate_formal_group", paper_ref: "cusp.multiplicative", run: tate_formal_group },
    Check { id: "elliptic.supersingular_automorphisms", paper_ref: "supersingular.automorphisms", run: automorphisms },
    Check { id: "elliptic.node_group_law", paper_ref: "cusp.node-group-law", run: node_group_law },
];

fn ab() -> (P, P) {
    (P::var("A", 1), P::var("B", 3))
}

fn n(k: i64) -> P {
    P::from_int(k)
}

fn identity(lhs: P, rhs: P, name: &str) -> Outcome {
    verdict(lhs == rhs, format!("{name} = {lhs}"))
}

fn c4(_: &RunConfig) -> chromalg::Result<Outcome> {
    let (a, b) = ab();
    let inv = WeierstrassCurve::family(a.clone(), b.clone()).invariants();
    Ok(identity(inv.c4, a.clone() * (a.pow(3) - n(24) * b), "c4"))
}

fn c6(_: &RunConfig) -> chromalg::Result<Outcome> {
    let (a, b) = ab();
    let inv = WeierstrassCurve::family(a.clone(), b.clone()).invariants();
    Ok(identity(inv.c6, -a.pow(6) + n(36) * a.pow(3) * b.clone() - n(216) * b.pow(2), "c6"))
}

fn discriminant(_: &RunConfig) -> chromalg::Result<Outcome> {
    let (a, b) = ab();
    let inv = WeierstrassCurve::family(a.clone(), b.clone()).invariants();
    let expect = b.pow(3) * (a.pow(3) - n(27) * b);
    let relation = n(1728) * inv.disc.clone() == inv.c4.pow(3) - inv.c6.pow(2);
    Ok(verdict(inv.disc == expect && relation, format!("Delta = {}; 1728 Delta = c4^3 - c6^2: {relation}", inv.disc)))
}

fn j_invariant(_: &RunConfig) -> chromalg::Result<Outcome> {
    let (a, b) = ab();
    let j = WeierstrassCurve::family(a.clone(), b.clone()).j_invariant()?;
    let num = a.pow(3) * (a.pow(3) - n(24) * b.clone()).pow(3);
    let den = b.pow(3) * (a.pow(3) - n(27) * b);
    Ok(verdict(j.num == num && j.den == den, format!("j = ({}) / ({})", j.num, j.den)))
}

fn three_torsion(_: &RunConfig) -> chromalg::Result<Outcome> {
    let (a, b) = ab();
    let c = WeierstrassCurve::family(a, b);
    let ok = c.three_torsion_check(&P::zero(), &P::zero())?;
    let slope = c.tangent_slope(&P::zero(), &P::zero())?;
    Ok(verdict(ok && slope == Some(P::zero()), "(0, 0) has order 3 with horizontal tangent"))
}

/// The fiber over `(A, B)` in characteristic 2: additive at the origin,
/// nodal on `A^3 = 27B` or `B = 0`, supersingular at `A = 0`, else ordinary.
fn expected_fiber<F: FiniteRing>(a: &F, b: &F) -> ReductionType {
    if a.is_zero() && b.is_zero() {
        ReductionType::Additive
    } else if b.is_zero() || a.pow(3) == F::from_int(27) * b.clone() {
        ReductionType::Nodal
    } else if a.is_zero() {
        ReductionType::SmoothSupersingular
    } else {
        ReductionType::SmoothOrdinary
    }
}

fn classify<F: FiniteRing>(name: &str) -> chromalg::Result<Outcome> {
    let els = F::elements();
    let mut counts = [0usize; 4];
    let mut bad = Vec::new();
    for a in &els {
        for b in &els {
            let t = reduction_type(&WeierstrassCurve::family(a.clone(), b.clone()))?;
            counts[t as usize] += 1;
            if t != expected_fiber(a, b) {
                bad.push(format!("({a}, {b}): {t:?}"));
            }
        }
    }
    let summary = format!(
        "{name}: {} ordinary, {} supersingular, {} nodal, {} additive",
        counts[0], counts[1], counts[2], counts[3]
    );
    if bad.is_empty() {
        Ok(Outcome::Pass(summary))
    } else {
        Ok(Outcome::Fail(format!("{summary}; mismatches {}", bad.join(", "))))
    }
}

fn reduction_f2(_: &RunConfig) -> chromalg::Result<Outcome> {
    classify::<F2>("F2")
}

fn reduction_f4(_: &RunConfig) -> chromalg::Result<Outcome> {
    classify::<F4>("F4")
}

fn reduction_f8(_: &RunConfig) -> chromalg::Result<Outcome> {
    classify::<F8>("F8")
}

fn chart_v_fibers<F: FiniteRing>() -> chromalg::Result<usize> {
    let mut supersingular = 0;
    for b in F::elements() {
        if reduction_type(&WeierstrassCurve::family(F::one(), b))? == ReductionType::SmoothSupersingular {
            supersingular += 1;
        }
    }
    Ok(supersingular)
}

fn chart_v_ordinary(_: &RunConfig) -> chromalg::Result<Outcome> {
    let counts = [chart_v_fibers::<F2>()?, chart_v_fibers::<F4>()?, chart_v_fibers::<F8>()?];
    Ok(verdict(counts == [0, 0, 0], format!("supersingular fibers with A = 1 over F2, F4, F8: {counts:?}")))
}

fn tate_invariants(_: &RunConfig) -> chromalg::Result<Outcome> {
    let beta = P::var("beta", 1);
    let inv = WeierstrassCurve::tate(beta.clone()).invariants();
    let ok = inv.c4 == beta.pow(4) && inv.c6 == -beta.pow(6) && inv.disc.is_zero();
    Ok(verdict(ok, format!("c4 = {}, c6 = {}, Delta = {}", inv.c4, inv.c6, inv.disc)))
}

fn tate_family_map(_: &RunConfig) -> chromalg::Result<Outcome> {
    let (a, b) = ab();
    let beta = P::var("beta", 1);
    let inv = WeierstrassCurve::family(a, b).invariants();
    let map = [("A", beta.clone()), ("B", P::zero())];
    let c4 = inv.c4.substitute(&map)?;
    let c6 = inv.c6.substitute(&map)?;
    let d = inv.disc.substitute(&map)?;
    let ok = c4 == beta.pow(4) && c6 == -beta.pow(6) && d.is_zero();
    Ok(verdict(ok, format!("A -> beta, B -> 0 sends c4 to {c4} and c6 to {c6}")))
}

fn tate_formal_group(config: &RunConfig) -> chromalg::Result<Outcome> {
    let n = config.series_prec.max(3);
    let t = WeierstrassCurve::tate(Z::one()).formal_group(n)?;
    let m = multiplicative(Z::from(-1), n);
    let found = find_iso(&t, &m, &IsoMode::Strict, n)?.found().is_some();
    Ok(verdict(found, format!("strict isomorphism to x + y - xy through total degree {}", n - 1)))
}

fn automorphisms(_: &RunConfig) -> chromalg::Result<Outcome> {
    let c = WeierstrassCurve::family(F4::zero(), F4::one());
    let g = c.automorphism_group()?;
    let rho = CurveAutomorphism { u: F4::generator(), r: F4::zero(), s: F4::zero(), t: F4::zero() };
    let ok = g.len() == 24 && g.contains(&rho) && rho.order() == 3;
    Ok(verdict(ok, format!("|Aut(y^2 + y = x^3 / F4)| = {}, u = w has order {}", g.len(), rho.order())))
}

fn node_group_law(_: &RunConfig) -> chromalg::Result<Outcome> {
    let q = |a: i64, b: i64| Q::new(a.into(), b.into());
    let c = WeierstrassCurve::new(q(3, 1), q(0, 1), q(1, 1), q(0, 1), q(0, 1));
    let d = node_uniformization(&c, 6)?;
    let formula = |t: &Q, s: &Q| (t * s - q(3, 1)) / (t + s + q(3, 1));
    let samples = [(q(1, 1), q(2, 1)), (q(-1, 2), q(5, 3)), (q(7, 1), q(7, 1)), (q(0, 1), q(4, 5))];
    let mut ok = d.node == (q(-1, 1), q(1, 1));
    for (t, s) in &samples {
        let p = Some(d.point(t));
        let r = Some(d.point(s));
        let sum = c.add_points(&p, &r)?;
        let chord = sum.and_then(|(x, y)| d.parameter(&x, &y));
        ok &= d.group_law(t, s) == Some(formula(t, s)) && chord == Some(formula(t, s));
    }
    Ok(verdict(
        ok,
        format!(
            "node at ({}, {}); G(t, t') = (tt' - 3)/(t + t' + 3) on {} chord samples",
            d.node.0,
            d.node.1,
            samples.len()
        ),
    ))
}
