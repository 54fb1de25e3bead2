use chromalg::elliptic::WeierstrassCurve;
use chromalg::exactalg::MPoly;
use chromalg::moduli::{
    annihilation_check, chart_transition_check, eisenstein_j, h0_multiplication_check, psi_defect, psi_operator,
    vanishing_above_one, CechComplex, QSeries, WeightedProj,
};
use chromalg::{Z2Local, Z};
use num_traits::{One, Zero};

fn ints(v: &[i64]) -> Vec<Z> {
    v.iter().map(|&x| Z::from(x)).collect()
}

#[test]
fn spec_rank_examples() {
    let p = WeightedProj::default();
    assert_eq!(p.h0(0).len(), 1);
    assert_eq!(p.h0(3).len(), 2);
    assert!(p.h0(-1).is_empty());
    assert_eq!(p.h1(-4), vec![p.duality_class()]);
    assert_eq!(p.monomial_string(p.duality_class()), "A^-1*B^-1");
    let mut h1 = p.h1(-8);
    h1.sort();
    assert_eq!(h1, vec![(-5, -1), (-2, -2)]);
}

#[test]
fn ranks_through_forty() {
    let p = WeightedProj::default();
    for n in -40..=40i64 {
        let c = CechComplex::new(&p, n, n.abs() + 4).cohomology();
        let h0 = (0..=n.max(0) / 3).filter(|j| n - 3 * j >= 0).count();
        let h1 = (1..=(-n).max(0) / 3).filter(|j| -n - 3 * j >= 1).count();
        assert_eq!(c.h, [h0, h1, 0, 0], "degree {n}");
    }
    assert!((-3..=40).all(|n| p.h1(n).is_empty()));
    assert!(vanishing_above_one(&p, -40..=40));
}

#[test]
fn duality_class_and_products() {
    let p = WeightedProj::default();
    let r = annihilation_check(&p);
    assert!(r.holds());
    assert_eq!(r.b_times_d.0, (-1, 0));
    for m in 0..6 {
        for n in 0..6 {
            assert!(h0_multiplication_check(&p, m, n));
        }
    }
}

#[test]
fn charts_glue() {
    for prec in [3, 5, 8] {
        assert!(chart_transition_check(prec).unwrap().holds());
    }
}

#[test]
fn q_expansion_examples() {
    let e = eisenstein_j(8).unwrap();
    assert!(e.e4.coeff(0).is_one());
    let delta: Vec<Z> = (1..=5).map(|n| e.delta.coeff(n)).collect();
    assert_eq!(delta, ints(&[1, -24, 252, -1472, 4830]));
    let jinv: Vec<Z> = (0..3).map(|n| e.j_inv.coeff(n)).collect();
    assert_eq!(jinv, ints(&[0, 1, -744]));
}

#[test]
fn psi_examples() {
    let q = QSeries::new(1, ints(&[1]), 6);
    let psi = psi_operator(&q);
    assert!(psi.coeff(2).is_one() && psi.coeff(1).is_zero());
    let c = QSeries::new(0, ints(&[7]), 6);
    assert!((0..6).all(|n| psi_defect(&c).coeff(n).is_zero()));
}

#[test]
fn chart_v_j_inverse_vanishes_at_zero() {
    let b = MPoly::<Z2Local>::var("b", 3);
    let j = WeierstrassCurve::family(MPoly::one(), b).j_invariant().unwrap();
    let at_zero = |f: &MPoly<Z2Local>| f.substitute(&[("b", MPoly::zero())]).unwrap().as_constant();
    assert_eq!(at_zero(&j.den), Some(Z2Local::zero()));
    assert_eq!(at_zero(&j.num), Some(Z2Local::one()));
}
