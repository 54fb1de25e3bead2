use chromalg::elliptic::{reduction_type, ReductionType, WeierstrassCurve};
use chromalg::exactalg::{FiniteRing, Ring};
use chromalg::{F2, F4, F8};

/// Classifies `y^2 + Axy + By = x^3` over a finite field of characteristic 2
/// by searching for a singular affine point.
fn oracle<R: FiniteRing>(a: &R, b: &R) -> ReductionType {
    let els = R::elements();
    let singular = els.iter().any(|x| {
        els.iter().any(|y| {
            let f = y.mul_ref(y) + a.mul_ref(x).mul_ref(y) + b.mul_ref(y) - x.pow(3);
            let fx = a.mul_ref(y) + x.mul_ref(x);
            let fy = a.mul_ref(x) + b.clone();
            f.is_zero() && fx.is_zero() && fy.is_zero()
        })
    });
    match (singular, a.is_zero()) {
        (true, true) => ReductionType::Additive,
        (true, false) => ReductionType::Nodal,
        (false, true) => ReductionType::SmoothSupersingular,
        (false, false) => ReductionType::SmoothOrdinary,
    }
}

fn table<R: FiniteRing>() -> [usize; 4] {
    let mut counts = [0; 4];
    for a in R::elements() {
        for b in R::elements() {
            let t = reduction_type(&WeierstrassCurve::family(a.clone(), b.clone())).unwrap();
            assert_eq!(t, oracle(&a, &b), "A = {a}, B = {b}");
            let i = match t {
                ReductionType::SmoothOrdinary => 0,
                ReductionType::SmoothSupersingular => 1,
                ReductionType::Nodal => 2,
                ReductionType::Additive => 3,
            };
            counts[i] += 1;
        }
    }
    counts
}

#[test]
fn reduction_tables_match_singular_point_search() {
    assert_eq!(table::<F2>(), [0, 1, 2, 1]);
    assert_eq!(table::<F4>(), [6, 3, 6, 1]);
    assert_eq!(table::<F8>(), [42, 7, 14, 1]);
}

#[test]
fn no_supersingular_fibers_with_a_invertible() {
    for a in F8::elements().into_iter().filter(|a| a.is_unit()) {
        for b in F8::elements() {
            let t = reduction_type(&WeierstrassCurve::family(a.clone(), b)).unwrap();
            assert_ne!(t, ReductionType::SmoothSupersingular);
        }
    }
}
