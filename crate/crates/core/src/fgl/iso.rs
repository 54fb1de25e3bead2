//! Degreewise search for isomorphisms of formal group laws.

use num_bigint::BigInt;

use super::{FormalGroupLaw, XY};
use crate::error::Result;
use crate::exactalg::{series_compose, Ring, TruncSeries};

#[derive(Clone, Debug)]
pub enum IsoMode<R> {
    /// `phi'(0) = 1`.
    Strict,
    /// `phi'(0)` ranges over the given units.
    LinearUnit(Vec<R>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum IsoResult<R: Ring> {
    /// `phi` with `phi(F(x,y)) = G(phi(x), phi(y))`.
    Found(TruncSeries<R>),
    /// No solution in this degree; for a sweep, the largest degree any
    /// candidate reached.
    Obstruction { degree: usize, witness: String },
}

impl<R: Ring> IsoResult<R> {
    pub fn found(&self) -> Option<&TruncSeries<R>> {
        match self {
            IsoResult::Found(p) => Some(p),
            IsoResult::Obstruction { .. } => None,
        }
    }
}

fn binom(n: usize, k: usize) -> BigInt {
    let mut r = BigInt::from(1);
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// `phi(F(x,y)) - G(phi(x), phi(y))`.
pub(crate) fn iso_defect<R: Ring>(
    f: &FormalGroupLaw<R>,
    g: &FormalGroupLaw<R>,
    phi: &TruncSeries<R>,
) -> Result<TruncSeries<R>> {
    let left = series_compose(phi, &[("x", f.series().clone())])?;
    let px = phi.embed(&XY)?;
    let py = phi.rename(&["y"])?.embed(&XY)?;
    let right = series_compose(g.series(), &[("x", px), ("y", py)])?;
    left.checked_sub(&right)
}

fn solve_from<R: Ring>(
    f: &FormalGroupLaw<R>,
    g: &FormalGroupLaw<R>,
    a1: R,
    n: usize,
) -> Result<std::result::Result<TruncSeries<R>, (usize, String)>> {
    let mut phi = TruncSeries::from_terms(&["x"], n, [(vec![1], a1)])?;
    for k in 2..n {
        let e = iso_defect(f, g, &phi)?;
        let ek: Vec<R> = (0..=k).map(|i| e.coeff(&[i as u32, (k - i) as u32])).collect();
        if ek.iter().all(|c| c.is_zero()) {
            continue;
        }
        if !ek[0].is_zero() || !ek[k].is_zero() {
            return Ok(Err((k, format!("pure power terms in degree {k}"))));
        }
        let bins: Vec<R> = (0..=k).map(|i| R::from_bigint(&binom(k, i))).collect();
        let consistent = |c: &R| (1..k).all(|i| c.mul_ref(&bins[i]) == -ek[i].clone());
        let sol = (1..k).filter_map(|i| (-ek[i].clone()).try_div(&bins[i])).find(|c| consistent(c));
        match sol {
            Some(c) => {
                let t = TruncSeries::from_terms(&["x"], n, [(vec![k as u32], c)])?;
                phi = phi.checked_add(&t)?;
            }
            None => {
                let terms: Vec<String> = (1..k).map(|i| format!("{}", ek[i])).collect();
                return Ok(Err((k, format!("degree {k} defect [{}] not solvable", terms.join(", ")))));
            }
        }
    }
    Ok(Ok(phi))
}

/// Solves for `phi` degree by degree up to truncation order `n`.
pub fn find_iso<R: Ring>(
    f: &FormalGroupLaw<R>,
    g: &FormalGroupLaw<R>,
    mode: &IsoMode<R>,
    n: usize,
) -> Result<IsoResult<R>> {
    let n = n.min(f.prec()).min(g.prec());
    let candidates = match mode {
        IsoMode::Strict => vec![R::one()],
        IsoMode::LinearUnit(us) => us.clone(),
    };
    let mut worst = 0;
    let mut notes = Vec::new();
    for a1 in candidates {
        if !a1.is_unit() {
            notes.push(format!("{a1}: not a unit"));
            continue;
        }
        match solve_from(f, g, a1.clone(), n)? {
            Ok(phi) => return Ok(IsoResult::Found(phi)),
            Err((d, w)) => {
                worst = worst.max(d);
                notes.push(format!("{a1}: {w}"));
            }
        }
    }
    Ok(IsoResult::Obstruction { degree: worst, witness: notes.join("; ") })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Ext, InvertedPrime, Omega};
    use crate::fgl::{conic_fgl, multiplicative};
    use num_traits::One;

    type Z13 = InvertedPrime<3>;
    type T = Ext<Z13, Omega>;

    #[test]
    fn identity_iso() {
        let (c, _) = conic_fgl(BigInt::from(3), BigInt::from(3), 8);
        let r = find_iso(&c, &c, &IsoMode::Strict, 8).unwrap();
        assert_eq!(r.found().unwrap(), &TruncSeries::var(&["x"], "x", 8).unwrap());
    }

    #[test]
    fn conic_becomes_multiplicative_over_omega() {
        let (c, _) = conic_fgl(T::from_int(3), T::from_int(3), 12);
        let w = T::generator();
        let s = T::one() + w.clone() + w;
        let m = multiplicative(s, 12);
        let r = find_iso(&c, &m, &IsoMode::Strict, 12).unwrap();
        let phi = r.found().expect("iso over Z[1/3][w]");
        assert!(iso_defect(&c, &m, phi).unwrap().is_zero());
    }

    #[test]
    fn round_trip_is_identity() {
        let (c, _) = conic_fgl(T::from_int(3), T::from_int(3), 10);
        let w = T::generator();
        let m = multiplicative(T::one() + w.clone() + w, 10);
        let a = find_iso(&c, &m, &IsoMode::Strict, 10).unwrap().found().cloned().unwrap();
        let b = find_iso(&m, &c, &IsoMode::Strict, 10).unwrap().found().cloned().unwrap();
        let ab = series_compose(&b, &[("x", a)]).unwrap();
        assert_eq!(ab, TruncSeries::var(&["x"], "x", 10).unwrap());
    }
}
