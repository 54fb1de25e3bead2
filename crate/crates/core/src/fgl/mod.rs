//! One-dimensional formal group laws.

mod canonical;
mod iso;
mod log;

pub use canonical::{
    canonical_subgroup, isogeny, quotient_by_subgroup, recognize_in_family, theta_defect, FglFamily, KernelPolynomial,
    Recognition,
};
pub use iso::{find_iso, IsoMode, IsoResult};
pub use log::{fgl_exp, fgl_log, hazewinkel_generators, PTypicalData};

use crate::error::{Error, Result};
use crate::exactalg::{series_compose, Ring, RingDescriptor, TruncSeries};

pub(crate) const XY: [&str; 2] = ["x", "y"];

/// `F(x, y)` truncated at total degree `prec`, with the unit, symmetry and
/// associativity identities checked on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalGroupLaw<R: Ring> {
    f: TruncSeries<R>,
}

/// `[m](x)` together with the height it reveals.
#[derive(Clone, Debug)]
pub struct PSeriesData<R: Ring> {
    pub m: i64,
    pub series: TruncSeries<R>,
    pub height_mod_p: Option<usize>,
}

fn var1<R: Ring>(n: usize) -> TruncSeries<R> {
    TruncSeries::var(&["x"], "x", n).expect("x is a variable")
}

impl<R: Ring> FormalGroupLaw<R> {
    /// Validates and wraps a series in the variables `x, y`.
    pub fn new(f: TruncSeries<R>) -> Result<Self> {
        let g = Self::from_series_unchecked(f)?;
        g.validate()?;
        Ok(g)
    }

    /// Wraps a series already known to be a formal group law, such as the
    /// image of one under a ring map.
    pub fn from_series_unchecked(f: TruncSeries<R>) -> Result<Self> {
        if f.vars() != XY {
            return Err(Error::VariableMismatch(format!("expected x, y; got {:?}", f.vars())));
        }
        Ok(FormalGroupLaw { f })
    }

    pub fn series(&self) -> &TruncSeries<R> {
        &self.f
    }

    pub fn prec(&self) -> usize {
        self.f.order()
    }

    pub fn ring(&self) -> RingDescriptor {
        R::descriptor()
    }

    /// Coefficient of `x^i y^j`.
    pub fn coeff(&self, i: u32, j: u32) -> R {
        self.f.coeff(&[i, j])
    }

    /// Checks `F(x,0) = x`, `F(x,y) = F(y,x)` and associativity to the
    /// truncation.
    pub fn validate(&self) -> Result<()> {
        let n = self.prec();
        for (e, c) in self.f.terms() {
            let ok = match (e[0], e[1]) {
                (0, 0) => false,
                (1, 0) | (0, 1) => c.is_one(),
                (_, 0) | (0, _) => false,
                _ => true,
            };
            if !ok {
                return Err(Error::InvalidFgl(format!("unit axiom fails at x^{}y^{}", e[0], e[1])));
            }
        }
        if !(self.coeff(1, 0).is_one() && self.coeff(0, 1).is_one()) {
            return Err(Error::InvalidFgl("linear part is not x + y".into()));
        }
        for (e, c) in self.f.terms() {
            if self.coeff(e[1], e[0]) != *c {
                return Err(Error::InvalidFgl(format!("not symmetric at x^{}y^{}", e[0], e[1])));
            }
        }
        let v3 = ["x", "y", "z"];
        let x = TruncSeries::var(&v3, "x", n)?;
        let y = TruncSeries::var(&v3, "y", n)?;
        let z = TruncSeries::var(&v3, "z", n)?;
        let fxy = series_compose(&self.f, &[("x", x.clone()), ("y", y.clone())])?;
        let fyz = series_compose(&self.f, &[("x", y), ("y", z.clone())])?;
        let left = series_compose(&self.f, &[("x", fxy), ("y", z)])?;
        let right = series_compose(&self.f, &[("x", x), ("y", fyz)])?;
        if left != right {
            let d = left.checked_sub(&right)?.min_degree().unwrap_or(0);
            return Err(Error::InvalidFgl(format!("associativity fails in degree {d}")));
        }
        Ok(())
    }

    /// `F(a, b)` for series `a`, `b` without constant term over a common
    /// variable list.
    pub fn add(&self, a: &TruncSeries<R>, b: &TruncSeries<R>) -> Result<TruncSeries<R>> {
        series_compose(&self.f, &[("x", a.clone()), ("y", b.clone())])
    }

    /// The formal inverse `i(x)` with `F(x, i(x)) = 0`.
    pub fn inverse_series(&self) -> Result<TruncSeries<R>> {
        let n = self.prec();
        let mut i = var1::<R>(n).scale(&-R::one());
        for k in 2..n {
            let e = self.add(&var1(n), &i)?.coeff1(k);
            if !e.is_zero() {
                let corr = TruncSeries::from_terms(&["x"], n, [(vec![k as u32], -e)])?;
                i = i.checked_add(&corr)?;
            }
        }
        Ok(i)
    }

    /// `[m](x)`, by repeated formal addition.
    pub fn m_series(&self, m: i64) -> Result<PSeriesData<R>> {
        let n = self.prec();
        let x = var1::<R>(n);
        let step = if m >= 0 { x.clone() } else { self.inverse_series()? };
        let mut acc = TruncSeries::zero(&["x"], n);
        for _ in 0..m.unsigned_abs() {
            acc = self.add(&step, &acc)?;
        }
        Ok(PSeriesData { m, series: acc, height_mod_p: None })
    }

    /// Height of a law over a ring of characteristic `p`: `[p](x)` starts with
    /// a nonzero multiple of `x^{p^h}`.
    pub fn height(&self, p: u64) -> Result<usize> {
        if R::characteristic() != p {
            return Err(Error::InvalidArgument(format!(
                "height needs characteristic {p}; ring is {}",
                R::descriptor()
            )));
        }
        let ps = self.m_series(p as i64)?.series;
        let d = ps.min_degree().ok_or(Error::HeightExceedsPrecision(self.prec()))?;
        let mut h = 0;
        let mut q = 1;
        while q < d {
            q *= p as usize;
            h += 1;
        }
        if q != d {
            return Err(Error::InvalidFgl(format!("[{p}](x) starts in degree {d}, not a power of {p}")));
        }
        Ok(h)
    }

    /// `[p](x)` with its height after reducing coefficients along `red`.
    pub fn p_series_with_height<S: Ring>(&self, p: u64, red: impl Fn(&R) -> S) -> Result<PSeriesData<R>> {
        let mut data = self.m_series(p as i64)?;
        data.height_mod_p = Some(self.base_change(red).height(p)?);
        Ok(data)
    }

    /// Image under a ring map.
    pub fn base_change<S: Ring>(&self, f: impl Fn(&R) -> S) -> FormalGroupLaw<S> {
        FormalGroupLaw { f: self.f.map_coeffs(f) }
    }

    pub fn truncate(&self, n: usize) -> Self {
        FormalGroupLaw { f: self.f.truncate(n) }
    }

    /// `F` conjugated by a coordinate change: `phi(F(phi^{-1}(x), phi^{-1}(y)))`.
    pub fn conjugate(&self, phi: &TruncSeries<R>) -> Result<Self> {
        let n = self.prec().min(phi.order());
        let inv = crate::exactalg::series_reverse(&phi.truncate(n))?;
        let xs = inv.rename(&["x"])?.embed(&XY)?;
        let ys = inv.rename(&["y"])?.embed(&XY)?;
        let inner = series_compose(&self.f.truncate(n), &[("x", xs), ("y", ys)])?;
        let outer = series_compose(&phi.rename(&["x"])?, &[("x", inner)])?;
        Self::from_series_unchecked(outer)
    }
}

/// `x + y`.
pub fn additive<R: Ring>(n: usize) -> FormalGroupLaw<R> {
    let f = TruncSeries::from_terms(&XY, n, [(vec![1, 0], R::one()), (vec![0, 1], R::one())]).expect("two variables");
    FormalGroupLaw { f }
}

/// `x + y + u x y`.
pub fn multiplicative<R: Ring>(u: R, n: usize) -> FormalGroupLaw<R> {
    let f = TruncSeries::from_terms(&XY, n, [(vec![1, 0], R::one()), (vec![0, 1], R::one()), (vec![1, 1], u)])
        .expect("two variables");
    FormalGroupLaw { f }
}

/// `(x + y + b x y) / (1 - c x y)`, with its discriminant `b^2 - 4c`.
pub fn conic_fgl<R: Ring>(b: R, c: R, n: usize) -> (FormalGroupLaw<R>, R) {
    let num = multiplicative(b.clone(), n).f;
    let cxy = TruncSeries::from_terms(&XY, n, [(vec![1, 1], c.clone())]).expect("two variables");
    let f = num.checked_mul(&cxy.geometric().expect("unit constant term")).expect("same variables");
    let disc = b.mul_ref(&b) - R::from_int(4).mul_ref(&c);
    (FormalGroupLaw { f }, disc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Zmod;
    use num_bigint::BigInt;

    #[test]
    fn built_in_laws_validate() {
        additive::<BigInt>(8).validate().unwrap();
        multiplicative(BigInt::from(-1), 8).validate().unwrap();
        let (c, d) = conic_fgl(BigInt::from(3), BigInt::from(3), 8);
        c.validate().unwrap();
        assert_eq!(d, BigInt::from(-3));
        assert_eq!(c.coeff(1, 1), BigInt::from(3));
        assert_eq!(c.coeff(2, 1), BigInt::from(3));
        assert_eq!(c.coeff(2, 2), BigInt::from(9));
    }

    #[test]
    fn broken_law_is_rejected() {
        let f = TruncSeries::from_terms(
            &XY,
            6,
            [
                (vec![1, 0], BigInt::from(1)),
                (vec![0, 1], BigInt::from(1)),
                (vec![2, 1], BigInt::from(1)),
                (vec![1, 2], BigInt::from(1)),
            ],
        )
        .unwrap();
        assert!(matches!(FormalGroupLaw::new(f), Err(Error::InvalidFgl(_))));
    }

    #[test]
    fn two_series_of_multiplicative() {
        let m = multiplicative(BigInt::from(1), 6);
        let two = m.m_series(2).unwrap().series;
        assert_eq!(two.univariate_coeffs(), vec![0, 2, 1, 0, 0, 0].into_iter().map(BigInt::from).collect::<Vec<_>>());
        let red = m.base_change(Zmod::<2>::from_bigint);
        assert_eq!(red.height(2).unwrap(), 1);
        assert!(matches!(additive::<Zmod<2>>(6).height(2), Err(Error::HeightExceedsPrecision(6))));
    }

    #[test]
    fn inverse_series_cancels() {
        let (c, _) = conic_fgl(BigInt::from(3), BigInt::from(3), 8);
        let i = c.inverse_series().unwrap();
        let x = var1::<BigInt>(8);
        assert!(c.add(&x, &i).unwrap().is_zero());
        assert!(c.m_series(-1).unwrap().series == i);
    }
}
