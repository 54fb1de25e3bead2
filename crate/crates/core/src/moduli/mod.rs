//! The weighted projective line `P(1, 3)` over `Z_(2)`: Čech cohomology of
//! `O(n)`, the chart change `a^3 b = 1`, and classical q-expansions.

mod cech;
mod qseries;

pub use cech::{annihilation_check, AnnihilationReport, CechComplex, CechRanks, Monomial, WeightedProj};
pub use qseries::{eisenstein_j, psi_defect, psi_operator, EisensteinData, QSeries};

use num_traits::One;

use crate::elliptic::{CurveAutomorphism, WeierstrassCurve};
use crate::error::Result;
use crate::exactalg::{LocalInt, MPoly, Ring};
use crate::fgl::{find_iso, IsoMode, IsoResult};

type Z2 = LocalInt<2>;

/// `H^s(O(n))` vanishes for `s >= 2`: the cover has two charts, so the
/// Čech complex has length two.
pub fn vanishing_above_one(space: &WeightedProj, degrees: impl IntoIterator<Item = i64>) -> bool {
    degrees.into_iter().all(|n| {
        let c = CechComplex::new(space, n, n.abs() + 4).cohomology();
        c.h[2] == 0 && c.h[3] == 0
    })
}

/// `H^0(m) ⊗ H^0(n) -> H^0(m + n)` agrees with polynomial multiplication.
pub fn h0_multiplication_check(space: &WeightedProj, m: i64, n: i64) -> bool {
    let target = space.h0(m + n);
    space.h0(m).iter().all(|a| {
        space.h0(n).iter().all(|b| {
            let prod = space.monomial_poly(*a) * space.monomial_poly(*b);
            let sum = (a.0 + b.0, a.1 + b.1);
            target.contains(&sum) && prod == space.monomial_poly(sum)
        })
    })
}

/// The two charts `y^2 + xy + a^-3 y = x^3` and `y^2 + a xy + y = x^3`.
#[derive(Clone, Debug)]
pub struct ChartTransition {
    pub source: WeierstrassCurve<MPoly<Z2>>,
    pub target: WeierstrassCurve<MPoly<Z2>>,
    pub transformed: WeierstrassCurve<MPoly<Z2>>,
    pub curves_agree: bool,
    pub fgl_iso_found: bool,
    pub prec: usize,
}

impl ChartTransition {
    pub fn holds(&self) -> bool {
        self.curves_agree && self.fgl_iso_found
    }
}

/// Applies `(x, y) -> (lambda^2 x, lambda^3 y)` with `lambda = a^-1` and
/// compares curves and formal groups to order `prec`.
pub fn chart_transition_check(prec: usize) -> Result<ChartTransition> {
    let a = MPoly::<Z2>::unit_var("a", 1);
    let lambda = a.inverse().expect("a is invertible");
    let zero = MPoly::<Z2>::from_int(0);
    let one = MPoly::<Z2>::one();
    let source = WeierstrassCurve::new(one.clone(), zero.clone(), lambda.pow(3), zero.clone(), zero.clone());
    let target = WeierstrassCurve::new(a.clone(), zero.clone(), one, zero.clone(), zero.clone());
    let w = CurveAutomorphism { u: lambda.clone(), r: zero.clone(), s: zero.clone(), t: zero };
    let transformed = source.transform(&w)?;
    let curves_agree = transformed == target;
    let f = source.formal_group(prec)?;
    let g = target.formal_group(prec)?;
    let iso = find_iso(&f, &g, &IsoMode::LinearUnit(vec![lambda.clone(), a]), prec)?;
    Ok(ChartTransition {
        source,
        target,
        transformed,
        curves_agree,
        fgl_iso_found: matches!(iso, IsoResult::Found(_)),
        prec,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chart_transition() {
        let t = chart_transition_check(6).unwrap();
        assert!(t.curves_agree);
        assert!(t.fgl_iso_found);
    }

    #[test]
    fn trivial_transition_is_identity() {
        let c = WeierstrassCurve::<Z2>::family(Z2::one(), Z2::one());
        assert_eq!(c.transform(&CurveAutomorphism::identity()).unwrap(), c);
    }

    #[test]
    fn structural_vanishing() {
        assert!(vanishing_above_one(&WeightedProj::default(), -12..=12));
        assert!(h0_multiplication_check(&WeightedProj::default(), 3, 4));
    }
}
