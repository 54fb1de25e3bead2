use chromalg::exactalg::Ring;
use chromalg::kforms::{
    conic_vs_multiplicative, conjugation_is_ring_map, cusp_restriction_check, discriminant_classification,
    frobenius_lift_obstruction, omega_module, sqrt_minus_three, FormClass, GaloisModule, TwistedKHomotopy,
};
use chromalg::{Z13Omega, Z, Z13};
use num_traits::One;
use rand::Rng as _;

use super::{rng_for, verdict, Check, Outcome};
use crate::RunConfig;

pub static CHECKS: &[Check] = &[
    Check { id: "kforms.degree_two_generator", paper_ref: "kforms.twisted-k", run: degree_two_generator },
    Check { id: "kforms.power_generates", paper_ref: "kforms.twisted-k", run: power_generates },
    Check { id: "kforms.eigenspace_products", paper_ref: "kforms.twisted-k", run: eigenspace_products },
    Check { id: "kforms.galois_cohomology", paper_ref: "kforms.galois-cohomology", run: galois_cohomology },
    Check { id: "kforms.trivial_contrast", paper_ref: "kforms.galois-cohomology", run: trivial_contrast },
    Check { id: "kforms.conjugation_ring_map", paper_ref: "kforms.galois-cohomology", run: conjugation_ring_map },
    Check { id: "kforms.conic_vs_multiplicative", paper_ref: "kforms.conic", run: conic },
    Check { id: "kforms.discriminant", paper_ref: "kforms.forms-of-gm", run: discriminant },
    Check { id: "kforms.cusp_restriction", paper_ref: "kforms.cusp", run: cusp_restriction },
    Check { id: "kforms.frobenius_obstruction", paper_ref: "kforms.frobenius", run: frobenius_obstruction },
];

fn degree_two_generator(_: &RunConfig) -> chromalg::Result<Outcome> {
    let g = TwistedKHomotopy::default().generator(1)?;
    let ratio = g.try_div(&sqrt_minus_three()).and_then(|r| r.as_base());
    let unit = ratio.as_ref().is_some_and(|r| r.is_unit());
    let square = sqrt_minus_three().pow(2) == Z13Omega::from_int(-3);
    Ok(verdict(
        unit && square,
        format!("KU^tau_2 generated by {g} = unit * sqrt(-3) beta, sqrt(-3) = 1 + 2w squares to -3: {square}"),
    ))
}

fn power_generates(_: &RunConfig) -> chromalg::Result<Outcome> {
    let k = TwistedKHomotopy::default();
    let mut bad = Vec::new();
    for d in -8..=8 {
        if !k.power_generates(d)? {
            bad.push(d);
        }
    }
    Ok(verdict(bad.is_empty(), format!("(sqrt(-3) beta)^k generates KU^tau_2k for k in [-8, 8]; failures {bad:?}")))
}

fn eigenspace_products(_: &RunConfig) -> chromalg::Result<Outcome> {
    let ok = TwistedKHomotopy::default().multiplicative(4)?;
    Ok(verdict(ok, "KU^tau_2k * KU^tau_2m lands in KU^tau_2(k+m) for k, m in [-4, 4]"))
}

fn galois_cohomology(_: &RunConfig) -> chromalg::Result<Outcome> {
    let c = omega_module().c2_cohomology();
    let ok = c.h1.is_zero() && c.h2.is_zero() && c.h0.free_rank == 1 && c.h0.torsion.is_empty();
    Ok(verdict(
        ok,
        format!(
            "H^*(C_2; Z[1/3][w]): H^0 rank {}, H^1 generators {}, H^2 generators {}",
            c.h0.free_rank,
            c.h1.generators(),
            c.h2.generators()
        ),
    ))
}

fn trivial_contrast(_: &RunConfig) -> chromalg::Result<Outcome> {
    let c = GaloisModule::<Z>::trivial().c2_cohomology();
    let ok = c.h1.is_zero() && c.h2.free_rank == 0 && c.h2.torsion == vec![Z::from(2)];
    let tors: Vec<String> = c.h2.torsion.iter().map(ToString::to_string).collect();
    Ok(verdict(ok, format!("trivial action on Z: H^1 = 0, H^2 torsion [{}]", tors.join(", "))))
}

fn conjugation_ring_map(config: &RunConfig) -> chromalg::Result<Outcome> {
    let mut rng = rng_for(config, "kforms.conjugation_ring_map");
    let third = Z13::one().try_div(&Z13::from_int(3)).expect("3 is a unit");
    let coeff = |rng: &mut rand_chacha::ChaCha8Rng| {
        let e = rng.gen_range(0..3u32);
        Z13::from_int(rng.gen_range(-50..=50)) * third.pow(e)
    };
    let xs: Vec<Z13Omega> = (0..12).map(|_| Z13Omega::new(vec![coeff(&mut rng), coeff(&mut rng)])).collect();
    Ok(verdict(
        conjugation_is_ring_map(&xs),
        "sigma is additive, multiplicative and an involution on 12 random elements",
    ))
}

fn conic(config: &RunConfig) -> chromalg::Result<Outcome> {
    let prec = config.series_prec.max(6);
    let r = conic_vs_multiplicative(prec)?;
    let ok = r.obstruction_degree.is_some() && r.iso_over_omega;
    Ok(verdict(
        ok,
        format!(
            "(x + y + 3xy)/(1 - 3xy) vs x + y + u xy over Z[1/3], u in {{+-3^k : |k| <= 3}}: obstructed at degree {:?}; strict iso to x + y + sqrt(-3) xy over Z[1/3][w] through degree {}: {}",
            r.obstruction_degree,
            prec - 1,
            r.iso_over_omega
        ),
    ))
}

fn discriminant(_: &RunConfig) -> chromalg::Result<Outcome> {
    let three = Z13::from_int(3);
    let conic = discriminant_classification(&three, &three);
    let over_z = discriminant_classification(&Z::from(3), &Z::from(3));
    let mult = discriminant_classification(&Z::from(1), &Z::from(0));
    let ok = conic == FormClass::FormOfGm && over_z == FormClass::Degenerate && mult == FormClass::FormOfGm;
    Ok(verdict(ok, format!("b^2 - 4c: (3, 3) over Z[1/3] {conic:?}, over Z {over_z:?}; (1, 0) {mult:?}")))
}

fn cusp_restriction(_: &RunConfig) -> chromalg::Result<Outcome> {
    let one = Z13Omega::one();
    let plus = cusp_restriction_check(&one, 1)?;
    let minus = cusp_restriction_check(&one, -1);
    let ok = plus.source.transform(&plus.iso)? == plus.target;
    let note = match minus {
        Ok(_) => "B = -(1/27) A^3 also identifies".to_string(),
        Err(_) => "B = -(1/27) A^3 gives a smooth curve, so the identification holds with the + sign".to_string(),
    };
    Ok(verdict(ok, format!("A = sqrt(-3) beta, B = (1/27) A^3 is y^2 + 3xy + y = x^3 via u = {}; {note}", plus.iso.u)))
}

fn frobenius_obstruction(_: &RunConfig) -> chromalg::Result<Outcome> {
    let mut bad = Vec::new();
    for p in [3, 5, 7, 11] {
        if !frobenius_lift_obstruction(p)?.obstructed() {
            bad.push(p);
        }
    }
    Ok(verdict(
        bad.is_empty(),
        format!("Z[x]/(Phi_p) has no Frobenius lift for p in 3, 5, 7, 11 (x^j != x^p mod p); failures {bad:?}"),
    ))
}
