use std::time::Instant;

use chromalg::bptheory::{
    bpn_sequence, bpn_shadow_module, koszul_tor, regular_sequence_check, tor_degeneration_identity,
    zero_action_tor_dims,
};

#[test]
fn bp2_sequence_is_regular_and_tor_is_concentrated() {
    let start = Instant::now();
    let m = bpn_shadow_module::<2>(2, 20).unwrap();
    let seq = bpn_sequence::<2>(2, 20).unwrap();
    let rep = regular_sequence_check(&seq, &m, 20).unwrap();
    assert!(rep.regular, "{:?}", rep.steps);
    let tor = koszul_tor(&seq, &m, 20).unwrap();
    assert!(tor.higher_vanish());
    // H_0 = F_2[t_1, t_2, t_3] in degrees <= 20.
    let h0: Vec<usize> = (0..=20).map(|d| tor.dim(0, d)).collect();
    let expect = chromalg::bptheory::tor_side_dims(2, std::iter::empty(), 20);
    assert_eq!(h0, expect);
    eprintln!("bp<2> shadow through degree 20 in {:?}", start.elapsed());
}

#[test]
fn exterior_pattern_matches_dual_steenrod() {
    let r = tor_degeneration_identity(2, 2, 24).unwrap();
    assert!(r.holds());
    assert_eq!(r.full_tor[1], 1);
    let k = zero_action_tor_dims::<2>(0, 24).unwrap();
    assert_eq!(k, r.full_tor);
    let k = zero_action_tor_dims::<2>(3, 24).unwrap();
    assert_eq!(k, r.tor_side);
}
