//! Laurent q-series and the classical Eisenstein series.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactalg::{PowerSeries, Ring};

/// `q^start * series`, known modulo `q^{start + prec}`.
#[derive(Clone, Debug, PartialEq)]
pub struct QSeries<R: Ring> {
    pub start: i64,
    pub series: PowerSeries<R>,
}

impl<R: Ring> QSeries<R> {
    pub fn new(start: i64, coeffs: Vec<R>, prec: usize) -> Self {
        QSeries { start, series: PowerSeries::new(coeffs, Some(prec)) }
    }

    /// Exclusive exponent bound: the series is known below `q^end`.
    pub fn end(&self) -> i64 {
        self.start + self.series.prec().unwrap_or(usize::MAX / 2) as i64
    }

    pub fn coeff(&self, n: i64) -> R {
        if n < self.start {
            R::zero()
        } else {
            self.series.coeff((n - self.start) as usize)
        }
    }

    fn shifted(&self, start: i64) -> PowerSeries<R> {
        let k = (self.start - start) as usize;
        let mut c = vec![R::zero(); k];
        c.extend(self.series.coeffs().iter().cloned());
        PowerSeries::new(c, self.series.prec().map(|p| p + k))
    }

    pub fn add(&self, o: &Self) -> Self {
        let s = self.start.min(o.start);
        QSeries { start: s, series: self.shifted(s) + o.shifted(s) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let s = self.start.min(o.start);
        QSeries { start: s, series: self.shifted(s) - o.shifted(s) }
    }

    pub fn mul(&self, o: &Self) -> Self {
        QSeries { start: self.start + o.start, series: self.series.clone() * o.series.clone() }
    }

    /// Normalizes so the leading coefficient sits at `start`.
    pub fn normalized(&self) -> Self {
        let c = self.series.coeffs();
        let k = c.iter().position(|x| !x.is_zero()).unwrap_or(c.len());
        let prec = self.series.prec().map(|p| p.saturating_sub(k));
        QSeries { start: self.start + k as i64, series: PowerSeries::new(c[k.min(c.len())..].to_vec(), prec) }
    }

    /// Inverse, when the leading coefficient is a unit.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.normalized();
        let inv = n.series.inverse().ok_or_else(|| Error::NotInvertible(format!("{self}")))?;
        Ok(QSeries { start: -n.start, series: inv })
    }

    /// `f(q) -> f(q^2)`.
    pub fn psi(&self) -> Self {
        QSeries { start: 2 * self.start, series: self.series.substitute_power(2) }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> QSeries<S> {
        QSeries { start: self.start, series: self.series.map_coeffs(f) }
    }
}

/// `f(q^2) - f(q)`.
pub fn psi_defect<R: Ring>(f: &QSeries<R>) -> QSeries<R> {
    f.psi().sub(f)
}

pub fn psi_operator<R: Ring>(f: &QSeries<R>) -> QSeries<R> {
    f.psi()
}

impl<R: Ring> fmt::Display for QSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.series.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let n = self.start + i as i64;
            parts.push(match n {
                0 => format!("{c}"),
                1 => format!("{c}*q"),
                _ => format!("{c}*q^{n}"),
            });
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{} + O(q^{})", parts.join(" + "), self.end())
    }
}

fn sigma(k: u32, n: u64) -> BigInt {
    (1..=n).filter(|d| n.is_multiple_of(*d)).map(|d| BigInt::from(d).pow(k)).sum()
}

/// `E_4, E_6, Delta, j, 1/j` to `terms` coefficients.
#[derive(Clone, Debug)]
pub struct EisensteinData {
    pub e4: QSeries<BigInt>,
    pub e6: QSeries<BigInt>,
    pub delta: QSeries<BigInt>,
    pub j: QSeries<BigInt>,
    pub j_inv: QSeries<BigInt>,
}

pub fn eisenstein_j(terms: usize) -> Result<EisensteinData> {
    if terms < 2 {
        return Err(Error::InvalidArgument(format!("need at least 2 terms, got {terms}")));
    }
    let eis = |k: u32, c: i64| {
        let mut v = vec![BigInt::one()];
        v.extend((1..terms as u64).map(|n| BigInt::from(c) * sigma(k, n)));
        QSeries::new(0, v, terms)
    };
    let e4 = eis(3, 240);
    let e6 = eis(5, -504);
    let e4c = e4.mul(&e4).mul(&e4);
    let num = e4c.sub(&e6.mul(&e6));
    let k1728 = BigInt::from(1728);
    let coeffs = num
        .series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            c.try_div(&k1728)
                .filter(|q| q.mul_ref(&k1728) == *c)
                .ok_or_else(|| Error::IntegralityFailure(format!("coefficient of q^{i} in E4^3 - E6^2 is {c}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let delta = QSeries::new(0, coeffs, terms).normalized();
    let delta_inv = delta.inverse()?;
    let j = e4c.mul(&delta_inv);
    let e4c_inv = e4c.inverse()?;
    let j_inv = delta.mul(&e4c_inv);
    Ok(EisensteinData { e4, e6, delta, j, j_inv })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn delta_and_j() {
        let e = eisenstein_j(6).unwrap();
        assert_eq!(e.e4.coeff(0), BigInt::one());
        assert_eq!(e.delta.start, 1);
        assert_eq!((1..=4).map(|n| e.delta.coeff(n)).collect::<Vec<_>>(), ints(&[1, -24, 252, -1472]));
        assert_eq!(e.j.start, -1);
        assert_eq!(e.j.coeff(-1), BigInt::one());
        assert_eq!(e.j.coeff(0), BigInt::from(744));
        assert_eq!(e.j.coeff(1), BigInt::from(196884));
        assert!(e.j_inv.coeff(0).is_zero());
        assert_eq!(e.j_inv.coeff(1), BigInt::one());
        assert_eq!(e.j_inv.coeff(2), BigInt::from(-744));
    }

    #[test]
    fn psi_examples() {
        let q = QSeries::new(1, ints(&[1]), 8);
        assert_eq!(psi_operator(&q).coeff(2), BigInt::one());
        let c = QSeries::new(0, ints(&[5]), 8);
        assert!(psi_defect(&c).series.is_zero());
    }
}
