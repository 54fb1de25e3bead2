//! Univariate power series as ring elements, with carried precision.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ring::{Ring, RingDescriptor, RingKind};

/// `sum c_i t^i + O(t^prec)`; `prec == None` marks an exact polynomial.
#[derive(Debug, Clone)]
pub struct PowerSeries<R: Ring> {
    coeffs: Vec<R>,
    prec: Option<usize>,
}

fn min_prec(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl<R: Ring> PowerSeries<R> {
    pub fn new(coeffs: Vec<R>, prec: Option<usize>) -> Self {
        let mut s = PowerSeries { coeffs, prec };
        s.normalize();
        s
    }

    /// Exact polynomial.
    pub fn poly(coeffs: Vec<R>) -> Self {
        Self::new(coeffs, None)
    }

    /// The variable `t`, known to precision `prec`.
    pub fn gen(prec: usize) -> Self {
        Self::new(vec![R::zero(), R::one()], Some(prec))
    }

    pub fn constant(c: R, prec: Option<usize>) -> Self {
        Self::new(vec![c], prec)
    }

    fn normalize(&mut self) {
        if let Some(p) = self.prec {
            self.coeffs.truncate(p);
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn prec(&self) -> Option<usize> {
        self.prec
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Lowers the precision to at most `p`.
    pub fn truncate(&self, p: usize) -> Self {
        Self::new(self.coeffs.clone(), min_prec(self.prec, Some(p)))
    }

    /// Index of the first nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> PowerSeries<S> {
        PowerSeries::new(self.coeffs.iter().map(f).collect(), self.prec)
    }

    /// `f(t^k)`, with the precision scaled accordingly.
    pub fn substitute_power(&self, k: usize) -> Self {
        let mut c = vec![R::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            c[i * k] = a.clone();
        }
        Self::new(c, self.prec.map(|p| p * k))
    }

    /// `f(g)` for `g` with zero constant term; `None` otherwise.
    pub fn compose(&self, g: &Self) -> Option<Self> {
        if !g.coeff(0).is_zero() {
            return None;
        }
        let g_ord = g.order().unwrap_or(usize::MAX);
        // Terms f_i g^i with i*ord(g) >= prec(g) are invisible.
        let prec = match (self.prec, g.prec) {
            (None, None) => None,
            (Some(p), None) => Some(p.saturating_mul(g_ord)),
            (None, Some(q)) => Some(q),
            (Some(p), Some(q)) => Some(q.min(p.saturating_mul(g_ord))),
        };
        let mut acc = Self::new(Vec::new(), prec);
        let mut pw = Self::constant(R::one(), prec);
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                pw = pw.mul_ref(g);
                if pw.is_zero() && pw.prec.is_some() {
                    break;
                }
            }
            if !a.is_zero() {
                acc = acc + pw.clone() * Self::constant(a.clone(), None);
            }
        }
        Some(acc.truncate(prec.unwrap_or(usize::MAX)))
    }

    pub fn display_in(&self, var: &str) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let cs = if cs.chars().skip(1).any(|ch| ch == '+' || ch == '-') { format!("({cs})") } else { cs };
            parts.push(match (i, c.is_one()) {
                (0, _) => cs,
                (1, true) => var.to_string(),
                (1, false) => format!("{cs}*{var}"),
                (_, true) => format!("{var}^{i}"),
                _ => format!("{cs}*{var}^{i}"),
            });
        }
        if let Some(p) = self.prec {
            parts.push(format!("O({var}^{p})"));
        }
        if parts.is_empty() {
            return "0".into();
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl<R: Ring> PartialEq for PowerSeries<R> {
    /// Equality to the coarser of the two precisions.
    fn eq(&self, o: &Self) -> bool {
        let p = min_prec(self.prec, o.prec).unwrap_or(usize::MAX);
        let n = self.coeffs.len().max(o.coeffs.len()).min(p);
        (0..n).all(|i| self.coeff(i) == o.coeff(i))
    }
}

impl<R: Ring> Add for PowerSeries<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.add_ref(&o)
    }
}

impl<R: Ring> Sub for PowerSeries<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.add_ref(&-o)
    }
}

impl<R: Ring> Neg for PowerSeries<R> {
    type Output = Self;
    fn neg(self) -> Self {
        PowerSeries { coeffs: self.coeffs.into_iter().map(|c| -c).collect(), prec: self.prec }
    }
}

impl<R: Ring> Mul for PowerSeries<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}

impl<R: Ring> Zero for PowerSeries<R> {
    fn zero() -> Self {
        PowerSeries { coeffs: Vec::new(), prec: None }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for PowerSeries<R> {
    fn one() -> Self {
        Self::poly(vec![R::one()])
    }
}

impl<R: Ring> fmt::Display for PowerSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("b"))
    }
}

impl<R: Ring> Ring for PowerSeries<R> {
    fn descriptor() -> RingDescriptor {
        let base = R::descriptor();
        let ch = base.characteristic;
        RingDescriptor::new(RingKind::PowerSeries { base: Box::new(base) }, ch)
    }

    fn from_bigint(n: &BigInt) -> Self {
        Self::poly(vec![R::from_bigint(n)])
    }

    /// Exact polynomials are invertible only when constant.
    fn inverse(&self) -> Option<Self> {
        let c0 = self.coeff(0).inverse()?;
        let Some(p) = self.prec else {
            return (self.coeffs.len() == 1).then(|| Self::poly(vec![c0]));
        };
        let mut g = vec![R::zero(); p];
        if p > 0 {
            g[0] = c0.clone();
        }
        for n in 1..p {
            let mut s = R::zero();
            for k in 1..=n.min(self.coeffs.len().saturating_sub(1)) {
                s = s + self.coeffs[k].mul_ref(&g[n - k]);
            }
            g[n] = -(s.mul_ref(&c0));
        }
        Some(Self::new(g, Some(p)))
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(inv) = d.inverse() {
            return Some(self.mul_ref(&inv));
        }
        // Strip a common power of t, then divide by the unit part.
        let k = d.order()?;
        if self.order()? < k || !d.coeff(k).is_unit() {
            // Coefficientwise exact division by a constant.
            if d.coeffs.len() == 1 {
                let c: Option<Vec<R>> = self.coeffs.iter().map(|a| a.try_div(&d.coeffs[0])).collect();
                return Some(Self::new(c?, min_prec(self.prec, d.prec)));
            }
            return None;
        }
        let shift = |s: &Self| Self::new(s.coeffs[k..].to_vec(), s.prec.map(|p| p.saturating_sub(k)));
        let (a, b) = (shift(self), shift(d));
        let b =
            if b.prec.is_none() && b.coeffs.len() > 1 { b.truncate(a.prec.unwrap_or(self.coeffs.len())) } else { b };
        Some(a.mul_ref(&b.inverse()?))
    }

    fn add_ref(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n).map(|i| self.coeff(i) + o.coeff(i)).collect();
        Self::new(c, min_prec(self.prec, o.prec))
    }

    fn mul_ref(&self, o: &Self) -> Self {
        let prec = min_prec(self.prec, o.prec);
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Self::new(Vec::new(), prec);
        }
        let mut n = self.coeffs.len() + o.coeffs.len() - 1;
        if let Some(p) = prec {
            n = n.min(p);
        }
        let mut c = vec![R::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= n {
                break;
            }
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    c[i + j] = c[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        Self::new(c, prec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = PowerSeries<BigInt>;

    #[test]
    fn geometric_series() {
        let f = S::new(vec![BigInt::from(1), BigInt::from(-24)], Some(4));
        let g = f.inverse().unwrap();
        let want: Vec<BigInt> = [1, 24, 576, 13824].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(g.coeffs(), &want[..]);
    }

    #[test]
    fn exact_polynomials_are_not_inverted() {
        let f = S::poly(vec![BigInt::from(1), BigInt::from(1)]);
        assert!(f.inverse().is_none());
        assert!(S::from_int(-1).inverse().is_some());
    }

    #[test]
    fn precision_propagates() {
        let t = S::gen(5);
        let x = t.pow(3) * S::from_int(7);
        assert_eq!(x.prec(), Some(5));
        assert!(t.pow(5).is_zero());
        assert_eq!(x.substitute_power(2).prec(), Some(10));
    }

    #[test]
    fn compose_with_series() {
        let t = S::gen(6);
        let f = S::poly(vec![BigInt::from(0), BigInt::from(1), BigInt::from(1)]);
        let g = f.compose(&(t.clone() + t.pow(2))).unwrap();
        // (t+t^2) + (t+t^2)^2 = t + 2t^2 + 2t^3 + t^4
        let want: Vec<BigInt> = [0, 1, 2, 2, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(g.coeffs(), &want[..]);
    }
}
