//! Formal groups of Weierstrass curves and reduction types.

use super::WeierstrassCurve;
use crate::error::{Error, Result};
use crate::exactalg::{FiniteRing, Ring, TruncSeries};
use crate::fgl::{FglFamily, FormalGroupLaw};

const XY: [&str; 2] = ["x", "y"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionType {
    SmoothOrdinary,
    SmoothSupersingular,
    Nodal,
    Additive,
}

/// A reduction type with the evidence behind it.
#[derive(Clone, Debug, PartialEq)]
pub struct ReductionReport {
    pub tag: ReductionType,
    /// Height of the formal group, for smooth curves in characteristic p.
    pub height: Option<usize>,
    /// Whether `j = 0`, for smooth curves.
    pub j_zero: Option<bool>,
    /// In characteristic 2 and 3, supersingular exactly when `j = 0`.
    pub consistent: bool,
}

/// The series `w(z) = -1/y` in `z = -x/y`, to order `n`.
pub fn w_series<R: Ring>(c: &WeierstrassCurve<R>, n: usize) -> TruncSeries<R> {
    let z = TruncSeries::<R>::var(&["x"], "x", n).expect("x is a variable");
    let z2 = z.pow(2);
    let z3 = z.pow(3);
    let mut w = TruncSeries::zero(&["x"], n);
    for _ in 0..n {
        let w2 = w.pow(2);
        let next = z3.clone()
            + (z.clone() * w.clone()).scale(&c.a1)
            + (z2.clone() * w.clone()).scale(&c.a2)
            + w2.scale(&c.a3)
            + (z.clone() * w2.clone()).scale(&c.a4)
            + (w2 * w.clone()).scale(&c.a6);
        if next == w {
            break;
        }
        w = next;
    }
    w
}

/// The formal group law in the coordinate `z = -x/y`, to total degree
/// below `n`, by chord addition of formal points.
pub fn formal_group_of_curve<R: Ring>(c: &WeierstrassCurve<R>, n: usize) -> Result<FormalGroupLaw<R>> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("precision {n} is below 3")));
    }
    let w = w_series(c, n + 1);
    let z1 = TruncSeries::<R>::var(&XY, "x", n)?;
    let z2 = TruncSeries::<R>::var(&XY, "y", n)?;
    // lambda = (w(z1) - w(z2)) / (z1 - z2)
    let mut terms = Vec::new();
    for (e, a) in w.terms() {
        let k = e[0];
        for i in 0..k {
            if (k - 1) < n as u32 {
                terms.push((vec![i, k - 1 - i], a.clone()));
            }
        }
    }
    let mut lambda = TruncSeries::zero(&XY, n);
    for t in terms {
        lambda = lambda + TruncSeries::from_terms(&XY, n, [t])?;
    }
    let w1 = crate::exactalg::series_compose(&w.truncate(n), &[("x", z1.clone())])?;
    let nu = w1 - lambda.clone() * z1.clone();
    let l2 = lambda.pow(2);
    let num = lambda.scale(&c.a1)
        + l2.scale(&c.a3)
        + nu.scale(&c.a2)
        + (lambda.clone() * nu.clone()).scale(&(R::from_int(2) * c.a4.clone()))
        + (l2.clone() * nu.clone()).scale(&(R::from_int(3) * c.a6.clone()));
    let den = TruncSeries::constant(&XY, R::one(), n)
        + lambda.scale(&c.a2)
        + l2.scale(&c.a4)
        + (l2 * lambda.clone()).scale(&c.a6);
    let z3 = -z1 - z2 - num * den.inverse()?;
    let w3 = lambda * z3.clone() + nu;
    let d = TruncSeries::constant(&XY, R::one(), n) - z3.scale(&c.a1) - w3.scale(&c.a3);
    let f = -(z3 * d.inverse()?);
    FormalGroupLaw::from_series_unchecked(f)
}

impl<R: Ring> WeierstrassCurve<R> {
    pub fn formal_group(&self, n: usize) -> Result<FormalGroupLaw<R>> {
        formal_group_of_curve(self, n)
    }
}

/// The curves `y^2 + a xy + b y = x^3` with `a` fixed.
#[derive(Clone, Copy, Debug)]
pub struct Gamma13Chart {
    pub a: i64,
}

impl FglFamily for Gamma13Chart {
    fn member<R: Ring>(&self, b: &R, n: usize) -> Result<FormalGroupLaw<R>> {
        formal_group_of_curve(&WeierstrassCurve::family(R::from_int(self.a), b.clone()), n)
    }
}

/// Classification over a finite field. Smooth curves are split by the
/// height of the formal group; in characteristic 0 they count as ordinary.
pub fn reduction_report<R: FiniteRing>(c: &WeierstrassCurve<R>) -> Result<ReductionReport> {
    let inv = c.invariants();
    if inv.disc.is_zero() {
        let tag = if inv.c4.is_zero() { ReductionType::Additive } else { ReductionType::Nodal };
        return Ok(ReductionReport { tag, height: None, j_zero: None, consistent: true });
    }
    let p = R::characteristic();
    let j_zero = c.j_value()?.is_zero();
    if p == 0 {
        return Ok(ReductionReport {
            tag: ReductionType::SmoothOrdinary,
            height: None,
            j_zero: Some(j_zero),
            consistent: true,
        });
    }
    let n = (p * p) as usize + 2;
    let h = formal_group_of_curve(c, n)?.height(p)?;
    let tag = if h >= 2 { ReductionType::SmoothSupersingular } else { ReductionType::SmoothOrdinary };
    let consistent = !(p == 2 || p == 3) || (h >= 2) == j_zero;
    Ok(ReductionReport { tag, height: Some(h), j_zero: Some(j_zero), consistent })
}

pub fn reduction_type<R: FiniteRing>(c: &WeierstrassCurve<R>) -> Result<ReductionType> {
    Ok(reduction_report(c)?.tag)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Cubic8, Ext, MPoly, Omega, Zmod};
    use crate::fgl::{find_iso, multiplicative, IsoMode};
    use num_bigint::BigInt;
    use num_traits::{One, Zero};

    type F2 = Zmod<2>;
    type F4 = Ext<F2, Omega>;
    type F8 = Ext<F2, Cubic8>;
    type P = MPoly<BigInt>;

    #[test]
    fn family_law_low_terms() {
        let (a, b) = (P::var("A", 1), P::var("B", 3));
        let f = formal_group_of_curve(&WeierstrassCurve::family(a.clone(), b.clone()), 5).unwrap();
        f.validate().unwrap();
        assert_eq!(f.coeff(1, 1), -a.clone());
        for (e, c) in f.series().terms() {
            assert_eq!(c.homogeneous_weight(), Some(e[0] as i64 + e[1] as i64 - 1));
        }
    }

    #[test]
    fn tate_law_is_multiplicative() {
        let t = formal_group_of_curve(&WeierstrassCurve::tate(BigInt::one()), 8).unwrap();
        t.validate().unwrap();
        let m = multiplicative(BigInt::from(-1), 8);
        assert!(find_iso(&t, &m, &IsoMode::Strict, 8).unwrap().found().is_some());
    }

    #[test]
    fn reduction_examples() {
        let c = |a: F2, b: F2| reduction_type(&WeierstrassCurve::family(a, b)).unwrap();
        assert_eq!(c(F2::one(), F2::zero()), ReductionType::Nodal);
        assert_eq!(c(F2::zero(), F2::one()), ReductionType::SmoothSupersingular);
        assert_eq!(c(F2::zero(), F2::zero()), ReductionType::Additive);
        let r = reduction_report(&WeierstrassCurve::family(F4::one(), F4::generator())).unwrap();
        assert_eq!(r.tag, ReductionType::SmoothOrdinary);
        assert!(r.consistent);
    }

    #[test]
    fn supersingular_height_two() {
        let f = formal_group_of_curve(&WeierstrassCurve::family(F4::zero(), F4::one()), 6).unwrap();
        assert_eq!(f.height(2).unwrap(), 2);
    }

    #[test]
    fn chart_v_ordinary_over_f8() {
        for b in F8::elements() {
            let t = reduction_type(&WeierstrassCurve::family(F8::one(), b)).unwrap();
            assert_ne!(t, ReductionType::SmoothSupersingular);
        }
    }
}
