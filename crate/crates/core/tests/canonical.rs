use chromalg::elliptic::{Gamma13Chart, WeierstrassCurve};
use chromalg::exactalg::{PowerSeries, Ring, Zmod};
use chromalg::fgl::{canonical_subgroup, quotient_by_subgroup, recognize_in_family, theta_defect, FormalGroupLaw};
use num_traits::{One, Zero};

type S<const M: u64> = PowerSeries<Zmod<M>>;

fn family_at_one<const M: u64>(b_prec: usize, n: usize) -> FormalGroupLaw<S<M>> {
    let b = S::<M>::gen(b_prec);
    WeierstrassCurve::family(S::<M>::one(), b).formal_group(n).unwrap()
}

#[test]
fn quotient_over_f2_is_frobenius_twist() {
    let f = family_at_one::<2>(8, 12);
    let k = canonical_subgroup(&f).unwrap();
    assert!(k.alpha.is_zero());
    let q = quotient_by_subgroup(&f, &k).unwrap();
    let twist = f.truncate(q.prec()).base_change(|c| c.substitute_power(2).truncate(8));
    assert_eq!(q, twist);
}

#[test]
fn kernel_over_z4_is_twice_a_unit() {
    let f = family_at_one::<4>(6, 8);
    let k = canonical_subgroup(&f).unwrap();
    let half = k.alpha.try_div(&S::<4>::from_int(2)).unwrap();
    assert!(half.is_unit());
}

#[test]
fn recognition_mod_4() {
    let f = family_at_one::<4>(4, 16);
    let k = canonical_subgroup(&f).unwrap();
    let q = quotient_by_subgroup(&f, &k).unwrap();
    let r = recognize_in_family(&q, &Gamma13Chart { a: 1 }, 4).unwrap();
    for i in 0..4 {
        let expect = if i == 2 { 1 } else { 0 };
        assert_eq!(r.b_prime.coeff(i).value() % 2, expect);
    }
    let th = theta_defect(&S::<4>::gen(4), &r.b_prime).unwrap();
    println!("b' = {}, unit = {}, prec = {}, theta = {}", r.b_prime, r.unit, q.prec(), th);
}
