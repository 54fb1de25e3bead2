//! Weierstrass division and preparation for univariate series over a
//! complete local ring whose maximal ideal is nilpotent at the working
//! precision (Z/p^k, (Z/p^k)[[b]] truncated in b).

use num_traits::Zero;

use super::ring::Ring;
use super::series::TruncSeries;
use crate::error::{Error, Result};

const MAX_ROUNDS: usize = 4096;

/// Result of preparing `f = unit * distinguished`.
#[derive(Debug, Clone)]
pub struct Prepared<R: Ring> {
    pub unit: TruncSeries<R>,
    /// Monic polynomial, coefficients from the constant term up.
    pub distinguished: Vec<R>,
}

impl<R: Ring> Prepared<R> {
    pub fn degree(&self) -> usize {
        self.distinguished.len() - 1
    }
}

/// First index whose coefficient is a unit.
pub fn weierstrass_degree<R: Ring>(f: &[R]) -> Option<usize> {
    f.iter().position(Ring::is_unit)
}

fn mul_trunc<R: Ring>(a: &[R], b: &[R], n: usize) -> Vec<R> {
    let mut c = vec![R::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            if !y.is_zero() {
                c[i + j] = c[i + j].add_ref(&x.mul_ref(y));
            }
        }
    }
    c
}

fn inv_trunc<R: Ring>(a: &[R], n: usize) -> Option<Vec<R>> {
    let c0 = a.first()?.inverse()?;
    let mut g = vec![R::zero(); n];
    if n == 0 {
        return Some(g);
    }
    g[0] = c0.clone();
    for k in 1..n {
        let mut s = R::zero();
        for j in 1..=k.min(a.len() - 1) {
            s = s + a[j].mul_ref(&g[k - j]);
        }
        g[k] = -(s.mul_ref(&c0));
    }
    Some(g)
}

/// Divides `g` by `f` (both known below degree `n`): `g = q*f + r` with
/// `deg r < d`, where `d` is the Weierstrass degree of `f`. The quotient is
/// known below degree `n - d`.
pub fn weierstrass_divide<R: Ring>(g: &[R], f: &[R], n: usize) -> Result<(Vec<R>, Vec<R>)> {
    let d = weierstrass_degree(&f[..f.len().min(n)])
        .ok_or_else(|| Error::PreparationFailed("no unit coefficient below the truncation".into()))?;
    let get = |v: &[R], i: usize| v.get(i).cloned().unwrap_or_else(R::zero);
    let low: Vec<R> = (0..d).map(|i| get(f, i)).collect();
    let high: Vec<R> = (d..n).map(|i| get(f, i)).collect();
    let hinv = inv_trunc(&high, n - d).expect("leading coefficient is a unit");
    let mut s: Vec<R> = (0..n).map(|i| get(g, i)).collect();
    let mut q = vec![R::zero(); n - d];
    for _ in 0..MAX_ROUNDS {
        let s_hi: Vec<R> = s[d..].to_vec();
        if s_hi.iter().all(Zero::is_zero) {
            s.truncate(d);
            return Ok((q, s));
        }
        let t = mul_trunc(&s_hi, &hinv, n - d);
        for (qi, ti) in q.iter_mut().zip(&t) {
            *qi = qi.add_ref(ti);
        }
        // s <- s_lo - t * low
        let tl = mul_trunc(&t, &low, n);
        for (i, si) in s.iter_mut().enumerate() {
            let lo = if i < d { si.clone() } else { R::zero() };
            *si = lo - tl[i].clone();
        }
    }
    Err(Error::PreparationFailed("division did not converge; maximal ideal not nilpotent".into()))
}

/// Factors a univariate series as `unit * distinguished`.
pub fn weierstrass_prepare<R: Ring>(f: &TruncSeries<R>) -> Result<Prepared<R>> {
    let n = f.order();
    let coeffs = f.univariate_coeffs();
    let d = weierstrass_degree(&coeffs)
        .ok_or_else(|| Error::PreparationFailed("no unit coefficient below the truncation".into()))?;
    let mut xd = vec![R::zero(); n];
    xd[d] = R::one();
    // x^d = q f + r, so x^d - r = q f and f = q^{-1} (x^d - r).
    let (q, r) = weierstrass_divide(&xd, &coeffs, n)?;
    let unit = inv_trunc(&q, n - d).ok_or_else(|| Error::PreparationFailed("quotient not a unit".into()))?;
    let mut dist: Vec<R> = r.into_iter().map(|c| -c).collect();
    dist.push(R::one());
    let var = f.vars()[0].to_string();
    Ok(Prepared { unit: TruncSeries::univariate(&var, &unit, n - d), distinguished: dist })
}
