use chromalg::steenrod::{duality_dims_check, quotient_module, square_check, Profile};

#[test]
fn sub_hopf_algebra_dimensions() {
    assert_eq!(Profile::a(1).total_dim(), 8);
    assert_eq!(Profile::a(2).total_dim(), 64);
    for n in 0..5 {
        assert_eq!(Profile::e(n).total_dim(), 1 << (n + 1));
    }
}

#[test]
fn convolution_through_48() {
    for p in [Profile::e(1), Profile::e(2), Profile::a(1), Profile::a(2)] {
        let q = quotient_module(&p, 48).unwrap();
        assert!(q.is_cyclic());
    }
}

#[test]
fn quotient_by_e2_matches_bstar_through_32() {
    assert!(duality_dims_check(2, 32).unwrap());
}

#[test]
fn square_through_16() {
    let r = square_check(16).unwrap();
    assert!(r.holds(), "{r:?}");
    assert_eq!(r.sq2_witness.0, r.sq2_witness.1);
}
