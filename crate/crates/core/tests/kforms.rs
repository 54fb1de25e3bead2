use chromalg::exactalg::{Ring, Zmod};
use chromalg::kforms::{
    conic_vs_multiplicative, cusp_restriction_check, discriminant_classification, frobenius_lift_obstruction,
    from_coords, omega_module, sqrt_minus_three, FormClass, GaloisModule, TwistedKHomotopy,
};
use chromalg::{Z13Omega, Z, Z13};
use num_traits::One;

#[test]
fn eigenspaces() {
    let t = omega_module();
    let plus = t.eigenspace(1);
    assert_eq!(plus.len(), 1);
    let minus = from_coords(&t.eigenspace(-1)[0]);
    let ratio = minus.try_div(&sqrt_minus_three()).and_then(|r| r.as_base()).unwrap();
    assert!(ratio.is_unit());
}

#[test]
fn twisted_k_generators() {
    let k = TwistedKHomotopy::default();
    assert!((-8..=8).all(|d| k.power_generates(d).unwrap()));
    assert!(k.multiplicative(3).unwrap());
}

#[test]
fn galois_cohomology_cases() {
    let omega = omega_module().c2_cohomology();
    assert_eq!((omega.h1.generators(), omega.h2.generators()), (0, 0));
    let z = GaloisModule::<Z>::trivial().c2_cohomology();
    assert!(z.h1.is_zero());
    assert_eq!(z.h2.torsion, vec![Z::from(2)]);
    let f2 = GaloisModule::<Zmod<2>>::trivial().c2_cohomology();
    assert_eq!(f2.h1.generators(), 1);
}

#[test]
fn conic_needs_omega_through_degree_twelve() {
    let r = conic_vs_multiplicative(13).unwrap();
    assert_eq!(r.obstruction_degree, Some(4));
    assert_eq!(r.units.len(), 14);
    assert!(r.iso_over_omega);
}

#[test]
fn discriminant_examples() {
    assert_eq!(discriminant_classification(&Z13::from_int(3), &Z13::from_int(3)), FormClass::FormOfGm);
    assert_eq!(discriminant_classification(&Z::from(3), &Z::from(3)), FormClass::Degenerate);
    assert_eq!(discriminant_classification(&Z::from(1), &Z::from(0)), FormClass::FormOfGm);
}

#[test]
fn cusp_restriction_signs() {
    let one = Z13Omega::one();
    let w = Z13Omega::generator();
    for lambda in [one.clone(), w.clone(), w.mul_ref(&w), -one.clone()] {
        let id = cusp_restriction_check(&lambda, 1).unwrap();
        assert_eq!(id.source.transform(&id.iso).unwrap(), id.target);
    }
    assert!(cusp_restriction_check(&one, -1).is_err());
}

#[test]
fn frobenius_obstruction() {
    for p in [3, 5, 7, 11] {
        let r = frobenius_lift_obstruction(p).unwrap();
        assert!(r.obstructed());
        assert_eq!(r.candidates.len() as u64, p - 1);
    }
    assert!(frobenius_lift_obstruction(13).is_err());
}
