//! Weierstrass curves, their invariants, reduction types, formal groups,
//! torsion, automorphisms and nodes.

mod formal;
mod node;

pub use formal::{
    formal_group_of_curve, reduction_report, reduction_type, Gamma13Chart, ReductionReport, ReductionType,
};
pub use node::{node_uniformization, NodeData};

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exactalg::{FiniteRing, PowerSeries, Ring};

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeierstrassCurve<R: Ring> {
    pub a1: R,
    pub a2: R,
    pub a3: R,
    pub a4: R,
    pub a6: R,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CurveInvariants<R: Ring> {
    pub b2: R,
    pub b4: R,
    pub b6: R,
    pub b8: R,
    pub c4: R,
    pub c6: R,
    pub disc: R,
}

/// `j = num / den` with `num = c4^3` and `den = disc`.
#[derive(Clone, Debug, PartialEq)]
pub struct JInvariant<R: Ring> {
    pub num: R,
    pub den: R,
}

impl<R: Ring> JInvariant<R> {
    /// The quotient, when it exists in the ring.
    pub fn value(&self) -> Option<R> {
        self.num.try_div(&self.den)
    }
}

/// `x = u^2 x' + r`, `y = u^3 y' + u^2 s x' + t`.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveAutomorphism<R: Ring> {
    pub u: R,
    pub r: R,
    pub s: R,
    pub t: R,
}

impl<R: Ring> CurveAutomorphism<R> {
    pub fn identity() -> Self {
        CurveAutomorphism { u: R::one(), r: R::zero(), s: R::zero(), t: R::zero() }
    }

    /// The change of variables `self` followed by `other`.
    pub fn then(&self, other: &Self) -> Self {
        let u2 = self.u.mul_ref(&self.u);
        CurveAutomorphism {
            u: self.u.mul_ref(&other.u),
            r: self.r.add_ref(&u2.mul_ref(&other.r)),
            s: self.s.add_ref(&self.u.mul_ref(&other.s)),
            t: self.t.clone() + u2.mul_ref(&self.u).mul_ref(&other.t) + u2.mul_ref(&self.s).mul_ref(&other.r),
        }
    }

    pub fn order(&self) -> usize {
        let mut g = self.clone();
        let mut k = 1;
        while g != Self::identity() {
            g = g.then(self);
            k += 1;
        }
        k
    }
}

impl<R: Ring> fmt::Display for CurveAutomorphism<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(u,r,s,t) = ({}, {}, {}, {})", self.u, self.r, self.s, self.t)
    }
}

/// An affine point, or `None` for the point at infinity.
pub type Point<R> = Option<(R, R)>;

impl<R: Ring> WeierstrassCurve<R> {
    pub fn new(a1: R, a2: R, a3: R, a4: R, a6: R) -> Self {
        WeierstrassCurve { a1, a2, a3, a4, a6 }
    }

    /// `y^2 + A xy + B y = x^3`.
    pub fn family(a: R, b: R) -> Self {
        Self::new(a, R::zero(), b, R::zero(), R::zero())
    }

    /// `y^2 + beta xy = x^3`.
    pub fn tate(beta: R) -> Self {
        Self::family(beta, R::zero())
    }

    pub fn coeffs(&self) -> [R; 5] {
        [self.a1.clone(), self.a2.clone(), self.a3.clone(), self.a4.clone(), self.a6.clone()]
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> WeierstrassCurve<S> {
        WeierstrassCurve::new(f(&self.a1), f(&self.a2), f(&self.a3), f(&self.a4), f(&self.a6))
    }

    pub fn invariants(&self) -> CurveInvariants<R> {
        let i = |n: i64| R::from_int(n);
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let b2 = a1.mul_ref(a1) + i(4) * a2.clone();
        let b4 = a1.mul_ref(a3) + i(2) * a4.clone();
        let b6 = a3.mul_ref(a3) + i(4) * a6.clone();
        let b8 = a1.mul_ref(a1).mul_ref(a6) + i(4) * a2.mul_ref(a6) - a1.mul_ref(a3).mul_ref(a4)
            + a2.mul_ref(a3).mul_ref(a3)
            - a4.mul_ref(a4);
        let c4 = b2.mul_ref(&b2) - i(24) * b4.clone();
        let c6 = -b2.pow(3) + i(36) * b2.mul_ref(&b4) - i(216) * b6.clone();
        let disc = -b2.mul_ref(&b2).mul_ref(&b8) - i(8) * b4.pow(3) - i(27) * b6.mul_ref(&b6)
            + i(9) * b2.mul_ref(&b4).mul_ref(&b6);
        CurveInvariants { b2, b4, b6, b8, c4, c6, disc }
    }

    pub fn discriminant(&self) -> R {
        self.invariants().disc
    }

    pub fn j_invariant(&self) -> Result<JInvariant<R>> {
        let inv = self.invariants();
        if inv.disc.is_zero() {
            return Err(Error::JUndefined);
        }
        Ok(JInvariant { num: inv.c4.pow(3), den: inv.disc })
    }

    /// `j` as a ring element, defined when the discriminant is a unit.
    pub fn j_value(&self) -> Result<R> {
        let inv = self.invariants();
        let d = inv.disc.inverse().ok_or(Error::JUndefined)?;
        Ok(inv.c4.pow(3) * d)
    }

    /// The curve in the coordinates `x'`, `y'` of `w`.
    pub fn transform(&self, w: &CurveAutomorphism<R>) -> Result<Self> {
        let CurveAutomorphism { u, r, s, t } = w;
        let ui = u.inverse().ok_or_else(|| Error::NotInvertible(format!("u = {u}")))?;
        let i = |n: i64| R::from_int(n);
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let n1 = a1.clone() + i(2) * s.clone();
        let n2 = a2.clone() - s.mul_ref(a1) + i(3) * r.clone() - s.mul_ref(s);
        let n3 = a3.clone() + r.mul_ref(a1) + i(2) * t.clone();
        let n4 = a4.clone() - s.mul_ref(a3) + i(2) * r.mul_ref(a2) - (t.clone() + r.mul_ref(s)).mul_ref(a1)
            + i(3) * r.mul_ref(r)
            - i(2) * s.mul_ref(t);
        let n6 = a6.clone() + r.mul_ref(a4) + r.mul_ref(r).mul_ref(a2) + r.pow(3)
            - t.mul_ref(a3)
            - t.mul_ref(t)
            - r.mul_ref(t).mul_ref(a1);
        Ok(Self::new(n1 * ui.clone(), n2 * ui.pow(2), n3 * ui.pow(3), n4 * ui.pow(4), n6 * ui.pow(6)))
    }

    /// `y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6`.
    pub fn eval(&self, x: &R, y: &R) -> R {
        y.mul_ref(y) + self.a1.mul_ref(x).mul_ref(y) + self.a3.mul_ref(y)
            - x.pow(3)
            - self.a2.mul_ref(&x.mul_ref(x))
            - self.a4.mul_ref(x)
            - self.a6.clone()
    }

    pub fn contains(&self, p: &Point<R>) -> bool {
        p.as_ref().is_none_or(|(x, y)| self.eval(x, y).is_zero())
    }

    pub fn negate(&self, p: &Point<R>) -> Point<R> {
        p.as_ref().map(|(x, y)| (x.clone(), -y.clone() - self.a1.mul_ref(x) - self.a3.clone()))
    }

    /// Slope of the tangent line at `p`, `None` when it is vertical.
    pub fn tangent_slope(&self, x: &R, y: &R) -> Result<Option<R>> {
        let num =
            R::from_int(3) * x.mul_ref(x) + R::from_int(2) * self.a2.mul_ref(x) + self.a4.clone() - self.a1.mul_ref(y);
        let den = R::from_int(2) * y.clone() + self.a1.mul_ref(x) + self.a3.clone();
        if den.is_zero() {
            return Ok(None);
        }
        num.try_div(&den).map(Some).ok_or_else(|| Error::NotInvertible(format!("tangent slope {num} / {den}")))
    }

    /// Chord-tangent addition; divisions must be exact in the ring.
    pub fn add_points(&self, p: &Point<R>, q: &Point<R>) -> Result<Point<R>> {
        let (Some((x1, y1)), Some((x2, y2))) = (p, q) else {
            return Ok(p.clone().or_else(|| q.clone()));
        };
        let lambda = if x1 == x2 {
            if self.negate(p) == *q {
                return Ok(None);
            }
            match self.tangent_slope(x1, y1)? {
                Some(l) => l,
                None => return Ok(None),
            }
        } else {
            let (dy, dx) = (y2.clone() - y1.clone(), x2.clone() - x1.clone());
            dy.try_div(&dx).ok_or_else(|| Error::NotInvertible(format!("chord slope {dy} / {dx}")))?
        };
        let nu = y1.clone() - lambda.mul_ref(x1);
        let x3 = lambda.mul_ref(&lambda) + self.a1.mul_ref(&lambda) - self.a2.clone() - x1.clone() - x2.clone();
        let y3 = -(lambda.clone() + self.a1.clone()).mul_ref(&x3) - nu - self.a3.clone();
        Ok(Some((x3, y3)))
    }

    /// Whether `[2] p = -p`, i.e. `p` has order dividing 3.
    pub fn three_torsion_check(&self, x: &R, y: &R) -> Result<bool> {
        let p = Some((x.clone(), y.clone()));
        if !self.contains(&p) {
            return Err(Error::NotOnCurve);
        }
        Ok(self.add_points(&p, &p)? == self.negate(&p))
    }
}

impl<R: FiniteRing> WeierstrassCurve<R> {
    /// All `(u, r, s, t)` fixing the curve, with closure under composition
    /// checked.
    pub fn automorphism_group(&self) -> Result<Vec<CurveAutomorphism<R>>> {
        let els = R::elements();
        let mut out = Vec::new();
        for u in els.iter().filter(|u| u.is_unit()) {
            for r in &els {
                for s in &els {
                    for t in &els {
                        let w = CurveAutomorphism { u: u.clone(), r: r.clone(), s: s.clone(), t: t.clone() };
                        if self.transform(&w)? == *self {
                            out.push(w);
                        }
                    }
                }
            }
        }
        for g in &out {
            for h in &out {
                if !out.contains(&g.then(h)) {
                    return Err(Error::Mismatch(format!("{g} then {h} leaves the group")));
                }
            }
        }
        Ok(out)
    }
}

/// `j^{-1} = b^3 (1 - 27b) / (1 - 24b)^3` on the chart `A = 1`, as a series
/// in `b` to precision `prec`.
pub fn j_inverse_chart_v<R: Ring>(prec: usize) -> Result<PowerSeries<R>> {
    let b = PowerSeries::<R>::gen(prec);
    let curve = WeierstrassCurve::family(PowerSeries::one(), b);
    let inv = curve.invariants();
    inv.disc.try_div(&inv.c4.pow(3)).ok_or_else(|| Error::NotInvertible("c4 on the chart A = 1".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Ext, MPoly, Omega, Zmod};
    use num_bigint::BigInt;
    use num_traits::Zero;

    type P = MPoly<BigInt>;
    type F4 = Ext<Zmod<2>, Omega>;

    fn ab() -> (P, P) {
        (P::var("A", 1), P::var("B", 3))
    }

    #[test]
    fn family_invariants() {
        let (a, b) = ab();
        let inv = WeierstrassCurve::family(a.clone(), b.clone()).invariants();
        let n = |k: i64| P::from_int(k);
        assert_eq!(inv.c4, a.clone() * (a.pow(3) - n(24) * b.clone()));
        assert_eq!(inv.c6, -a.pow(6) + n(36) * a.pow(3) * b.clone() - n(216) * b.pow(2));
        assert_eq!(inv.disc, b.pow(3) * (a.pow(3) - n(27) * b.clone()));
        assert_eq!(n(1728) * inv.disc.clone(), inv.c4.pow(3) - inv.c6.pow(2));
    }

    #[test]
    fn tate_invariants() {
        let beta = P::var("beta", 1);
        let inv = WeierstrassCurve::tate(beta.clone()).invariants();
        assert_eq!(inv.c4, beta.pow(4));
        assert_eq!(inv.c6, -beta.pow(6));
        assert!(inv.disc.is_zero());
        assert!(matches!(WeierstrassCurve::tate(beta).j_invariant(), Err(Error::JUndefined)));
    }

    #[test]
    fn supersingular_j_is_zero() {
        let c = WeierstrassCurve::family(F4::zero(), F4::one());
        assert_eq!(c.j_value().unwrap(), F4::zero());
    }

    #[test]
    fn chart_v_series() {
        let s = j_inverse_chart_v::<BigInt>(6).unwrap();
        let c: Vec<i64> = (0..6).map(|i| i64::try_from(s.coeff(i)).unwrap()).collect();
        // b^3 (1 - 27 b) (1 + 72 b + ...) = b^3 + 45 b^4 + ...
        assert_eq!(&c[..5], &[0, 0, 0, 1, 45]);
    }

    #[test]
    fn origin_is_three_torsion() {
        let (a, b) = ab();
        let c = WeierstrassCurve::family(a, b);
        assert!(c.three_torsion_check(&P::zero(), &P::zero()).unwrap());
        assert_eq!(c.tangent_slope(&P::zero(), &P::zero()).unwrap(), Some(P::zero()));
        let e = WeierstrassCurve::family(F4::zero(), F4::one());
        assert!(e.three_torsion_check(&F4::zero(), &F4::zero()).unwrap());
    }

    #[test]
    fn two_torsion_point_is_not_three_torsion() {
        let i = BigInt::from;
        let c = WeierstrassCurve::new(i(1), i(0), i(1), i(0), i(1));
        assert!(!c.three_torsion_check(&i(-1), &i(0)).unwrap());
        assert_eq!(c.three_torsion_check(&i(1), &i(1)), Err(Error::NotOnCurve));
    }

    #[test]
    fn automorphisms_of_supersingular_curve() {
        let c = WeierstrassCurve::family(F4::zero(), F4::one());
        let g = c.automorphism_group().unwrap();
        assert_eq!(g.len(), 24);
        let w = F4::generator();
        let rho = CurveAutomorphism { u: w, r: F4::zero(), s: F4::zero(), t: F4::zero() };
        assert!(g.contains(&rho));
        assert_eq!(rho.order(), 3);
        let o = WeierstrassCurve::family(F4::one(), F4::generator());
        assert_eq!(o.automorphism_group().unwrap().len(), 2);
    }

    #[test]
    fn transform_composition_is_action() {
        let i = BigInt::from;
        let c = WeierstrassCurve::new(i(1), i(-1), i(1), i(0), i(3));
        let g = CurveAutomorphism { u: i(-1), r: i(2), s: i(1), t: i(-3) };
        let h = CurveAutomorphism { u: i(1), r: i(-1), s: i(4), t: i(5) };
        let lhs = c.transform(&g).unwrap().transform(&h).unwrap();
        assert_eq!(lhs, c.transform(&g.then(&h)).unwrap());
    }
}
