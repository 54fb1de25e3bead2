//! Logarithms and Hazewinkel generators.

use super::FormalGroupLaw;
use crate::error::{Error, Result};
use crate::exactalg::{series_reverse, QLift, Ring, TruncSeries};

/// p-typical log coefficients and Hazewinkel generators.
#[derive(Clone, Debug)]
pub struct PTypicalData<R: QLift> {
    pub p: u64,
    /// `l_0 = 1, l_1, ..., l_n`: the coefficients of `x^{p^k}` in the log.
    pub log_coeffs: Vec<R::Lift>,
    /// `v_1, ..., v_n`, in the base ring.
    pub v: Vec<R>,
}

/// The logarithm `l` with `l(F(x,y)) = l(x) + l(y)` and `l'(0) = 1`, over
/// the Q-algebra containing the base ring.
pub fn fgl_log<R: QLift>(f: &FormalGroupLaw<R>) -> Result<TruncSeries<R::Lift>> {
    if !R::descriptor().is_torsion_free() {
        return Err(Error::NeedsTorsionFree);
    }
    let n = f.prec();
    // l'(x) = 1 / (dF/dy)(x, 0)
    let mut dy = TruncSeries::<R::Lift>::zero(&["x"], n.saturating_sub(1));
    for (e, c) in f.series().terms() {
        if e[1] == 1 {
            let t = TruncSeries::from_terms(&["x"], n - 1, [(vec![e[0]], c.lift())])?;
            dy = dy.checked_add(&t)?;
        }
    }
    let dl = dy.inverse()?;
    dl.integrate("x")
}

/// Compositional inverse of the logarithm.
pub fn fgl_exp<R: QLift>(f: &FormalGroupLaw<R>) -> Result<TruncSeries<R::Lift>> {
    series_reverse(&fgl_log(f)?)
}

fn int_pow(p: u64, k: u32) -> usize {
    (p as usize).pow(k)
}

/// Hazewinkel generators `v_1..v_n` from `p l_n = sum_{i<n} l_i v_{n-i}^{p^i}`.
pub fn hazewinkel_generators<R: QLift>(f: &FormalGroupLaw<R>, p: u64, n: usize) -> Result<PTypicalData<R>> {
    let top = int_pow(p, n as u32);
    if f.prec() <= top {
        return Err(Error::Truncation(format!("need precision above {top} for v_{n} at p = {p}, have {}", f.prec())));
    }
    let log = fgl_log(f)?;
    let ell: Vec<R::Lift> = (0..=n).map(|k| log.coeff1(int_pow(p, k as u32))).collect();
    let pl = R::Lift::from_int(p as i64);
    let mut vs: Vec<R::Lift> = Vec::with_capacity(n);
    for m in 1..=n {
        let mut v = pl.mul_ref(&ell[m]);
        for i in 1..m {
            v = v - ell[i].mul_ref(&vs[m - i - 1].pow(int_pow(p, i as u32) as u32));
        }
        vs.push(v);
    }
    let v = vs
        .iter()
        .enumerate()
        .map(|(i, x)| {
            R::lower(x).ok_or_else(|| Error::IntegralityFailure(format!("v_{} = {x} is not in the base ring", i + 1)))
        })
        .collect::<Result<Vec<R>>>()?;
    Ok(PTypicalData { p, log_coeffs: ell, v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::MPoly;
    use crate::fgl::{additive, multiplicative};
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::Zero;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn logs_of_basic_laws() {
        let l = fgl_log(&additive::<BigInt>(6)).unwrap();
        assert_eq!(l.univariate_coeffs(), vec![q(0, 1), q(1, 1), q(0, 1), q(0, 1), q(0, 1), q(0, 1)]);
        let l = fgl_log(&multiplicative(BigInt::from(-1), 6)).unwrap();
        assert_eq!(l.univariate_coeffs(), vec![q(0, 1), q(1, 1), q(1, 2), q(1, 3), q(1, 4), q(1, 5)]);
    }

    #[test]
    fn multiplicative_hazewinkel() {
        type P = MPoly<BigInt>;
        let u = P::var("u", 1);
        let m = multiplicative(-u.clone(), 6);
        let d = hazewinkel_generators(&m, 2, 2).unwrap();
        assert_eq!(d.v, vec![u.clone(), P::zero()]);
        let m = multiplicative(u.clone(), 6);
        let d = hazewinkel_generators(&m, 2, 2).unwrap();
        assert_eq!(d.v, vec![-u, P::zero()]);
    }

    #[test]
    fn precision_is_checked() {
        let m = multiplicative(BigInt::from(1), 4);
        assert!(matches!(hazewinkel_generators(&m, 2, 2), Err(Error::Truncation(_))));
    }
}
