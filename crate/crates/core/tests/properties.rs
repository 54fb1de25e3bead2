use chromalg::elliptic::WeierstrassCurve;
use chromalg::exactalg::Ring;
use chromalg::kforms::TwistedKHomotopy;
use chromalg::moduli::{psi_defect, CechComplex, QSeries, WeightedProj};
use chromalg::steenrod::{basis, dims, MilnorMonomial, SteenrodElement};
use chromalg::{Z13Omega, Z, Z13};
use num_traits::Zero;
use proptest::prelude::*;

fn sq(n: u32) -> SteenrodElement {
    SteenrodElement::sq(n)
}

fn binom_odd(n: i64, k: i64) -> bool {
    n >= 0 && k >= 0 && k <= n && (k & !n) == 0
}

fn adem(a: u32, b: u32) -> SteenrodElement {
    (0..=a / 2)
        .filter(|&c| binom_odd(b as i64 - c as i64 - 1, (a - 2 * c) as i64))
        .fold(SteenrodElement::zero(), |acc, c| acc.add(&sq(a + b - c).mul(&sq(c))))
}

/// Partitions of `n` into parts `2^i - 1`.
fn milnor_count(n: usize) -> usize {
    let mut p = vec![0usize; n + 1];
    p[0] = 1;
    let mut part = 1;
    while part <= n {
        for k in part..=n {
            p[k] += p[k - part];
        }
        part = 2 * part + 1;
    }
    p[n]
}

fn monomial(d: usize, pick: usize) -> SteenrodElement {
    let b = basis(d);
    SteenrodElement::from(b[pick % b.len()].clone())
}

fn series(start: i64, c: Vec<i64>) -> QSeries<Z> {
    let n = c.len();
    QSeries::new(start, c.into_iter().map(Z::from).collect(), n)
}

fn z13(n: i64, e: u32) -> Z13 {
    Z13::from_int(n) * Z13::from_int(3).inverse().unwrap().pow(e)
}

proptest! {
    #[test]
    fn adem_relations_hold(b in 1u32..12, a_frac in 0.0f64..1.0) {
        let a = 1 + ((2 * b - 1) as f64 * a_frac) as u32;
        prop_assume!(a < 2 * b);
        prop_assert_eq!(sq(a).mul(&sq(b)), adem(a, b));
    }

    #[test]
    fn milnor_product_associative(d in proptest::array::uniform3(0usize..10), pick in proptest::array::uniform3(0usize..64)) {
        let [x, y, z] = [0, 1, 2].map(|i| monomial(d[i], pick[i]));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn milnor_unit(d in 0usize..16, pick in 0usize..64) {
        let x = monomial(d, pick);
        let one = SteenrodElement::from(MilnorMonomial::unit());
        prop_assert_eq!(one.mul(&x), x.clone());
        prop_assert_eq!(x.mul(&one), x);
    }

    #[test]
    fn dims_match_partition_count(n in 0usize..60) {
        prop_assert_eq!(dims(n)[n], milnor_count(n));
    }

    #[test]
    fn cech_euler_characteristic(n in -60i64..60, extra in 0i64..6) {
        let p = WeightedProj::default();
        let c = CechComplex::new(&p, n, n.abs() / 3 + 2 + extra);
        let r = c.cohomology();
        let chi = (c.c0_a.len() + c.c0_b.len()) as i64 - c.c1.len() as i64;
        prop_assert_eq!(r.h[0] as i64 - r.h[1] as i64, chi);
        prop_assert_eq!(r.h[0], p.h0(n).len());
        prop_assert_eq!(r.h[1], p.h1(n).len());
    }

    #[test]
    fn curve_invariant_identities(a in proptest::array::uniform5(-20i64..20)) {
        let c = WeierstrassCurve::new(Z::from(a[0]), Z::from(a[1]), Z::from(a[2]), Z::from(a[3]), Z::from(a[4]));
        let i = c.invariants();
        prop_assert_eq!(&i.b2 * &i.b6 - &i.b4 * &i.b4, Z::from(4) * &i.b8);
        prop_assert_eq!(i.c4.pow(3) - i.c6.pow(2), Z::from(1728) * &i.disc);
    }

    #[test]
    fn family_fgl_low_terms(a in -20i64..20, b in -20i64..20) {
        let f = WeierstrassCurve::family(Z::from(a), Z::from(b)).formal_group(6).unwrap();
        f.validate().unwrap();
        prop_assert_eq!(f.coeff(1, 0), Z::from(1));
        prop_assert_eq!(f.coeff(1, 1), Z::from(-a));
        prop_assert_eq!(f.coeff(2, 1), Z::zero());
        prop_assert_eq!(f.coeff(3, 1), Z::from(-2 * b));
        prop_assert_eq!(f.coeff(2, 2), Z::from(-3 * b));
        prop_assert_eq!(f.coeff(1, 3), f.coeff(3, 1));
    }

    #[test]
    fn psi_defect_constant_term(start in -4i64..4, c in proptest::collection::vec(-1000i64..1000, 1..20)) {
        prop_assert!(psi_defect(&series(start, c)).coeff(0).is_zero());
    }

    #[test]
    fn psi_is_multiplicative(s in -2i64..3, t in -2i64..3, c in proptest::collection::vec(-50i64..50, 8), d in proptest::collection::vec(-50i64..50, 8)) {
        let (f, g) = (series(s, c), series(t, d));
        let lhs = f.mul(&g).psi();
        let rhs = f.psi().mul(&g.psi());
        for n in lhs.start.min(rhs.start)..lhs.end().min(rhs.end()) {
            prop_assert_eq!(lhs.coeff(n), rhs.coeff(n));
        }
    }

    #[test]
    fn eigenspace_products(k in -6i64..6, m in -6i64..6, x in (-30i64..30, 0u32..3), y in (-30i64..30, 0u32..3)) {
        let ku = TwistedKHomotopy::default();
        let a = ku.generator(k).unwrap() * Z13Omega::from_base(z13(x.0, x.1));
        let b = ku.generator(m).unwrap() * Z13Omega::from_base(z13(y.0, y.1));
        prop_assert!(ku.in_degree(&a, k) && ku.in_degree(&b, m));
        prop_assert!(ku.in_degree(&(a * b), k + m));
    }
}
