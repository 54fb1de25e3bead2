//! Nodal cubics and the group law on their smooth locus.

use super::WeierstrassCurve;
use crate::error::{Error, Result};
use crate::exactalg::Ring;
use crate::fgl::{conic_fgl, FormalGroupLaw};

/// Moving the node to the origin gives `Y^2 + alpha XY + gamma X^2 = X^3`.
/// The smooth locus is parametrized by `u = Y/X`, with `X = u^2 + alpha u
/// + gamma` and `Y = u X`; the group law is
/// `G(u, u') = (u u' - gamma) / (u + u' + alpha)` with unit at `u = oo`.
#[derive(Clone, Debug)]
pub struct NodeData<R: Ring> {
    pub node: (R, R),
    pub alpha: R,
    pub gamma: R,
    /// The law in `s = 1/u`: `(s + s' + alpha s s') / (1 - gamma s s')`.
    pub fgl: FormalGroupLaw<R>,
}

impl<R: Ring> NodeData<R> {
    /// `G(u, u')`; `None` is the unit.
    pub fn group_law(&self, u: &R, v: &R) -> Option<R> {
        let den = u.clone() + v.clone() + self.alpha.clone();
        (u.mul_ref(v) - self.gamma.clone()).try_div(&den)
    }

    /// The point of the curve with parameter `u`.
    pub fn point(&self, u: &R) -> (R, R) {
        let x = u.mul_ref(u) + self.alpha.mul_ref(u) + self.gamma.clone();
        let y = u.mul_ref(&x);
        (x + self.node.0.clone(), y + self.node.1.clone())
    }

    /// The parameter `u = (y - y0) / (x - x0)` of a smooth point.
    pub fn parameter(&self, x: &R, y: &R) -> Option<R> {
        (y.clone() - self.node.1.clone()).try_div(&(x.clone() - self.node.0.clone()))
    }
}

/// Locates the node from `x0 = -(c6 + b2 c4) / (12 c4)` and
/// `y0 = -(a1 x0 + a3) / 2`, checks the singularity equations and returns
/// the parametrization with its formal group law to degree `n`.
pub fn node_uniformization<R: Ring>(c: &WeierstrassCurve<R>, n: usize) -> Result<NodeData<R>> {
    let inv = c.invariants();
    if !inv.disc.is_zero() {
        return Err(Error::NotNodal(format!("discriminant {} is nonzero", inv.disc)));
    }
    if inv.c4.is_zero() {
        return Err(Error::NotNodal("c4 = 0: the singularity is a cusp".into()));
    }
    let i = |k: i64| R::from_int(k);
    let x0 = (-(inv.c6.clone() + inv.b2.mul_ref(&inv.c4)))
        .try_div(&(i(12) * inv.c4.clone()))
        .ok_or_else(|| Error::NotNodal("x-coordinate of the node is not in the ring".into()))?;
    let y0 = (-(c.a1.mul_ref(&x0) + c.a3.clone()))
        .try_div(&i(2))
        .ok_or_else(|| Error::NotNodal("y-coordinate of the node is not in the ring".into()))?;
    let fx = c.a1.mul_ref(&y0) - i(3) * x0.mul_ref(&x0) - i(2) * c.a2.mul_ref(&x0) - c.a4.clone();
    let fy = i(2) * y0.clone() + c.a1.mul_ref(&x0) + c.a3.clone();
    if !(c.eval(&x0, &y0).is_zero() && fx.is_zero() && fy.is_zero()) {
        return Err(Error::NotNodal(format!("({x0}, {y0}) is not singular")));
    }
    let alpha = c.a1.clone();
    let gamma = -(i(3) * x0.clone() + c.a2.clone());
    let (fgl, _) = conic_fgl(alpha.clone(), gamma.clone(), n);
    Ok(NodeData { node: (x0, y0), alpha, gamma, fgl })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::InvertedPrime;
    use crate::fgl::{find_iso, multiplicative, IsoMode};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type Z13 = InvertedPrime<3>;

    #[test]
    fn nodal_cubic_uniformization() {
        let i = Z13::from_int;
        let c = WeierstrassCurve::new(i(3), i(0), i(1), i(0), i(0));
        let d = node_uniformization(&c, 8).unwrap();
        assert_eq!(d.node, (i(-1), i(1)));
        assert_eq!((d.alpha.clone(), d.gamma.clone()), (i(3), i(3)));
        let (conic, disc) = conic_fgl(i(3), i(3), 8);
        assert_eq!(d.fgl, conic);
        assert_eq!(disc, i(-3));
    }

    #[test]
    fn group_law_matches_chords() {
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        let c = WeierstrassCurve::new(q(3, 1), q(0, 1), q(1, 1), q(0, 1), q(0, 1));
        let d = node_uniformization(&c, 6).unwrap();
        for (u, v) in [(q(1, 1), q(2, 1)), (q(-1, 2), q(5, 3)), (q(7, 1), q(7, 1))] {
            let p = Some(d.point(&u));
            let r = Some(d.point(&v));
            assert!(c.contains(&p));
            let s = c.add_points(&p, &r).unwrap().unwrap();
            assert_eq!(d.parameter(&s.0, &s.1), d.group_law(&u, &v));
        }
    }

    #[test]
    fn tate_node_is_multiplicative() {
        let c = WeierstrassCurve::tate(BigInt::from(1));
        let d = node_uniformization(&c, 8).unwrap();
        assert_eq!(d.node, (BigInt::from(0), BigInt::from(0)));
        let m = multiplicative(BigInt::from(1), 8);
        assert!(find_iso(&d.fgl, &m, &IsoMode::Strict, 8).unwrap().found().is_some());
    }

    #[test]
    fn smooth_curve_rejected() {
        let c = WeierstrassCurve::family(BigInt::from(1), BigInt::from(1));
        assert!(matches!(node_uniformization(&c, 6), Err(Error::NotNodal(_))));
    }
}
