use chromalg::elliptic::WeierstrassCurve;
use chromalg::exactalg::{LocalInt, MPoly, Ring};
use chromalg::fgl::{hazewinkel_generators, multiplicative};
use num_rational::BigRational;
use num_traits::Zero;

type Z2 = LocalInt<2>;
type P = MPoly<Z2>;

fn ab() -> (P, P) {
    (P::var("A", 1), P::var("B", 3))
}

/// Drops the coefficients divisible by 2.
fn mod_2(p: &P) -> P {
    let two = Z2::from_int(2);
    p.map_coeffs(|c| if c.try_div(&two).is_some() { Z2::zero() } else { c.clone() })
}

#[test]
fn family_generators_mod_two() {
    let (a, b) = ab();
    let f = WeierstrassCurve::family(a.clone(), b.clone()).formal_group(12).unwrap();
    let d = hazewinkel_generators(&f, 2, 2).unwrap();
    assert_eq!(mod_2(&(d.v[0].clone() - a.clone())), P::zero());
    let rest = mod_2(&(d.v[1].clone() - b.clone()));
    assert!(rest.substitute(&[("A", P::zero())]).unwrap().is_zero(), "v2 - B = {rest}");
}

#[test]
fn family_generators_match_invariant_differential() {
    // omega = (1 + a1 z + (a1^2 + a2) z^2 + (a1^3 + 2 a1 a2 + 2 a3) z^3 + ...) dz,
    // so l_1 = a1 / 2 and l_2 = (a1^3 + 2 a1 a2 + 2 a3) / 4.
    let (a, b) = ab();
    let f = WeierstrassCurve::family(a.clone(), b.clone()).formal_group(12).unwrap();
    let d = hazewinkel_generators(&f, 2, 2).unwrap();
    let q = |n: i64, k: i64| MPoly::<BigRational>::constant(BigRational::new(n.into(), k.into()));
    let (aq, bq) = (MPoly::<BigRational>::var("A", 1), MPoly::<BigRational>::var("B", 3));
    let l1 = q(1, 2) * aq.clone();
    let l2 = q(1, 4) * (aq.pow(3) + q(2, 1) * bq);
    assert_eq!(d.log_coeffs[1], l1);
    assert_eq!(d.log_coeffs[2], l2);
    let v1 = q(2, 1) * l1.clone();
    let v2 = q(2, 1) * l2 - l1 * v1.pow(2);
    assert_eq!(d.v[0], a);
    assert_eq!(d.v[1], b);
    assert_eq!(v1, MPoly::<BigRational>::var("A", 1));
    assert_eq!(v2, MPoly::<BigRational>::var("B", 3));
}

#[test]
fn tate_specialization_kills_v2() {
    let beta = P::var("beta", 1);
    let f = WeierstrassCurve::family(beta.clone(), P::zero()).formal_group(12).unwrap();
    let d = hazewinkel_generators(&f, 2, 2).unwrap();
    assert_eq!(d.v, vec![beta, P::zero()]);
}

#[test]
fn multiplicative_v2_vanishes() {
    let m = multiplicative(Z2::from_int(-1), 12);
    let d = hazewinkel_generators(&m, 2, 2).unwrap();
    assert!(d.v[1].is_zero());
}
