//! Multivariate power series truncated at a total degree.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::powerseries::PowerSeries;
use super::ring::Ring;
use crate::error::{Error, Result};

/// `sum c_e x^e` over monomials of total degree `< order`.
#[derive(Clone)]
pub struct TruncSeries<R: Ring> {
    vars: Arc<Vec<String>>,
    order: usize,
    terms: BTreeMap<Vec<u32>, R>,
}

fn total(e: &[u32]) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

impl<R: Ring> TruncSeries<R> {
    pub fn zero(vars: &[&str], order: usize) -> Self {
        TruncSeries { vars: Arc::new(vars.iter().map(|s| s.to_string()).collect()), order, terms: BTreeMap::new() }
    }

    fn empty_like(&self, order: usize) -> Self {
        TruncSeries { vars: self.vars.clone(), order, terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[&str], c: R, order: usize) -> Self {
        let mut s = Self::zero(vars, order);
        s.add_term(vec![0; vars.len()], c);
        s
    }

    pub fn var(vars: &[&str], name: &str, order: usize) -> Result<Self> {
        let i = vars
            .iter()
            .position(|v| *v == name)
            .ok_or_else(|| Error::VariableMismatch(format!("{name} not among {vars:?}")))?;
        let mut s = Self::zero(vars, order);
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        s.add_term(e, R::one());
        Ok(s)
    }

    pub fn from_terms(vars: &[&str], order: usize, terms: impl IntoIterator<Item = (Vec<u32>, R)>) -> Result<Self> {
        let mut s = Self::zero(vars, order);
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(Error::InvalidArgument("exponent length mismatch".into()));
            }
            s.add_term(e, c);
        }
        Ok(s)
    }

    /// Univariate series `sum c_i x^i` truncated at `order`.
    pub fn univariate(var: &str, coeffs: &[R], order: usize) -> Self {
        let mut s = Self::zero(&[var], order);
        for (i, c) in coeffs.iter().enumerate() {
            s.add_term(vec![i as u32], c.clone());
        }
        s
    }

    fn add_term(&mut self, e: Vec<u32>, c: R) {
        if c.is_zero() || total(&e) >= self.order {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn vars(&self) -> Vec<&str> {
        self.vars.iter().map(String::as_str).collect()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> R {
        self.terms.get(e).cloned().unwrap_or_else(R::zero)
    }

    /// Coefficient of `x^i` in a univariate series.
    pub fn coeff1(&self, i: usize) -> R {
        self.coeff(&[i as u32])
    }

    pub fn constant_term(&self) -> R {
        self.coeff(&vec![0; self.vars.len()])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest total degree present.
    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| total(e)).min()
    }

    pub fn homogeneous(&self, d: usize) -> Self {
        let mut s = self.empty_like(self.order);
        for (e, c) in &self.terms {
            if total(e) == d {
                s.terms.insert(e.clone(), c.clone());
            }
        }
        s
    }

    pub fn truncate(&self, n: usize) -> Self {
        let n = n.min(self.order);
        let mut s = self.empty_like(n);
        for (e, c) in &self.terms {
            if total(e) < n {
                s.terms.insert(e.clone(), c.clone());
            }
        }
        s
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncSeries<S> {
        let mut s = TruncSeries { vars: self.vars.clone(), order: self.order, terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            s.add_term(e.clone(), f(c));
        }
        s
    }

    pub fn try_map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<TruncSeries<S>> {
        let mut s = TruncSeries { vars: self.vars.clone(), order: self.order, terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            s.add_term(e.clone(), f(c)?);
        }
        Ok(s)
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map_coeffs(|a| a.mul_ref(c))
    }

    fn check_vars(&self, o: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.vars, &o.vars) || self.vars == o.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch(format!("{:?} vs {:?}", self.vars, o.vars)))
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        self.check_vars(o)?;
        let mut s = self.truncate(o.order);
        for (e, c) in &o.terms {
            s.add_term(e.clone(), c.clone());
        }
        Ok(s)
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        self.checked_add(&o.neg_ref())
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        self.check_vars(o)?;
        let n = self.order.min(o.order);
        let mut s = self.empty_like(n);
        for (ea, ca) in &self.terms {
            let da = total(ea);
            if da >= n {
                continue;
            }
            for (eb, cb) in &o.terms {
                if da + total(eb) >= n {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                s.add_term(e, ca.mul_ref(cb));
            }
        }
        Ok(s)
    }

    fn neg_ref(&self) -> Self {
        let mut s = self.empty_like(self.order);
        for (e, c) in &self.terms {
            s.terms.insert(e.clone(), -c.clone());
        }
        s
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(&self.vars(), R::one(), self.order);
        for _ in 0..k {
            acc = acc.checked_mul(self).expect("same variables");
        }
        acc
    }

    /// Multiplicative inverse; needs a unit constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.constant_term();
        let c0i = c0.inverse().ok_or_else(|| Error::NotInvertible(format!("constant term {c0} is not a unit")))?;
        // 1/(c0(1+m)) = c0^{-1} sum (-m)^k
        let one = Self::constant(&self.vars(), R::one(), self.order);
        let m = self.scale(&c0i).checked_sub(&one)?;
        let neg_m = m.neg_ref();
        let mut acc = one.clone();
        let mut pw = one;
        for _ in 1..self.order.max(1) {
            pw = pw.checked_mul(&neg_m)?;
            if pw.is_zero() {
                break;
            }
            acc = acc.checked_add(&pw)?;
        }
        Ok(acc.scale(&c0i))
    }

    /// `1/(1-f)` for `f` with zero constant term.
    pub fn geometric(&self) -> Result<Self> {
        let one = Self::constant(&self.vars(), R::one(), self.order);
        one.checked_sub(self)?.inverse()
    }

    fn index_of(&self, var: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| Error::VariableMismatch(format!("{var} not among {:?}", self.vars)))
    }

    /// Partial derivative; the truncation order drops by one.
    pub fn derivative(&self, var: &str) -> Result<Self> {
        let i = self.index_of(var)?;
        let mut s = self.empty_like(self.order.saturating_sub(1));
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[i] -= 1;
            s.add_term(f, c.mul_ref(&R::from_int(e[i] as i64)));
        }
        Ok(s)
    }

    /// Antiderivative in `var` with zero constant of integration; the
    /// truncation order rises by one. Fails when a coefficient is not
    /// divisible by the new exponent.
    pub fn integrate(&self, var: &str) -> Result<Self> {
        let i = self.index_of(var)?;
        let mut s = self.empty_like(self.order + 1);
        for (e, c) in &self.terms {
            let mut f = e.clone();
            f[i] += 1;
            let q = c
                .div_int(f[i] as i64)
                .ok_or_else(|| Error::IntegralityFailure(format!("{c} is not divisible by {}", f[i])))?;
            s.add_term(f, q);
        }
        Ok(s)
    }

    /// Re-expresses the series over a larger variable list containing its own.
    pub fn embed(&self, vars: &[&str]) -> Result<Self> {
        let idx: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                vars.iter()
                    .position(|w| w == v)
                    .ok_or_else(|| Error::VariableMismatch(format!("{v} not among {vars:?}")))
            })
            .collect::<Result<_>>()?;
        let mut s = Self::zero(vars, self.order);
        for (e, c) in &self.terms {
            let mut f = vec![0; vars.len()];
            for (k, &x) in e.iter().enumerate() {
                f[idx[k]] = x;
            }
            s.add_term(f, c.clone());
        }
        Ok(s)
    }

    /// Renames variables positionally.
    pub fn rename(&self, vars: &[&str]) -> Result<Self> {
        if vars.len() != self.vars.len() {
            return Err(Error::VariableMismatch("rename needs the same number of variables".into()));
        }
        Ok(TruncSeries {
            vars: Arc::new(vars.iter().map(|s| s.to_string()).collect()),
            order: self.order,
            terms: self.terms.clone(),
        })
    }

    /// Coefficients of a univariate series, up to the truncation order.
    pub fn univariate_coeffs(&self) -> Vec<R> {
        assert_eq!(self.vars.len(), 1, "univariate series expected");
        (0..self.order).map(|i| self.coeff1(i)).collect()
    }

    pub fn to_power_series(&self) -> PowerSeries<R> {
        PowerSeries::new(self.univariate_coeffs(), Some(self.order))
    }
}

/// Substitutes series for variables of `f`. All substituted series must share
/// one variable list; variables of `f` left out of `args` are kept and must
/// belong to that list. The result is truncated at the smallest order.
pub fn series_compose<R: Ring>(f: &TruncSeries<R>, args: &[(&str, TruncSeries<R>)]) -> Result<TruncSeries<R>> {
    let target: Vec<String> = match args.first() {
        Some((_, s)) => s.vars.to_vec(),
        None => return Ok(f.clone()),
    };
    let tv: Vec<&str> = target.iter().map(String::as_str).collect();
    let mut order = f.order;
    let mut images = Vec::with_capacity(f.vars.len());
    for v in f.vars.iter() {
        let img = match args.iter().find(|(n, _)| n == v) {
            Some((_, s)) => {
                if *s.vars != target {
                    return Err(Error::VariableMismatch(format!(
                        "substituted series use {:?} and {:?}",
                        s.vars, target
                    )));
                }
                let c = s.constant_term();
                if !c.is_zero() {
                    return Err(Error::Composition(format!("substitution for {v} has constant term {c}")));
                }
                s.clone()
            }
            None => TruncSeries::var(&tv, v, f.order)?,
        };
        order = order.min(img.order);
        images.push(img);
    }
    // Powers of each image up to the largest exponent that can matter.
    let mut powers: Vec<Vec<TruncSeries<R>>> = Vec::with_capacity(images.len());
    for (i, img) in images.iter().enumerate() {
        let img = img.truncate(order);
        let maxe = f.terms.keys().map(|e| e[i]).max().unwrap_or(0) as usize;
        let mut pw = vec![TruncSeries::constant(&tv, R::one(), order)];
        for k in 1..=maxe.min(order) {
            let next = pw[k - 1].checked_mul(&img)?;
            pw.push(next);
        }
        powers.push(pw);
    }
    let mut acc = TruncSeries::zero(&tv, order);
    for (e, c) in &f.terms {
        if e.iter().enumerate().any(|(i, &x)| x as usize >= powers[i].len()) {
            continue;
        }
        let mut t: Option<TruncSeries<R>> = None;
        for (i, &x) in e.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let p = &powers[i][x as usize];
            t = Some(match t {
                None => p.clone(),
                Some(t) => t.checked_mul(p)?,
            });
        }
        let t = t.unwrap_or_else(|| TruncSeries::constant(&tv, R::one(), order));
        for (te, tc) in t.terms {
            acc.add_term(te, tc.mul_ref(c));
        }
    }
    Ok(acc)
}

/// Compositional inverse of a univariate series with unit linear coefficient.
pub fn series_reverse<R: Ring>(f: &TruncSeries<R>) -> Result<TruncSeries<R>> {
    if f.vars.len() != 1 {
        return Err(Error::VariableMismatch("reversion needs a univariate series".into()));
    }
    if !f.constant_term().is_zero() {
        return Err(Error::Composition("series to reverse has a constant term".into()));
    }
    let a1 = f.coeff1(1);
    let a1i = a1.inverse().ok_or_else(|| Error::NotInvertible(format!("linear coefficient {a1} is not a unit")))?;
    let v = f.vars[0].clone();
    let n = f.order;
    let mut g = TruncSeries::univariate(&v, &[R::zero(), a1i.clone()], n);
    // Fix one coefficient per pass: g_k -= [x^k] f(g) / a1.
    for k in 2..n {
        let fg = series_compose(f, &[(v.as_str(), g.clone())])?;
        let e = fg.coeff1(k);
        if !e.is_zero() {
            g.add_term(vec![k as u32], -(e.mul_ref(&a1i)));
        }
    }
    Ok(g)
}

impl<R: Ring> PartialEq for TruncSeries<R> {
    /// Equal variables and equal coefficients below the smaller order.
    fn eq(&self, o: &Self) -> bool {
        if self.vars != o.vars {
            return false;
        }
        let n = self.order.min(o.order);
        self.truncate(n).terms == o.truncate(n).terms
    }
}

impl<R: Ring> Add for TruncSeries<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.checked_add(&o).expect("variable sets differ")
    }
}

impl<R: Ring> Sub for TruncSeries<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.checked_sub(&o).expect("variable sets differ")
    }
}

impl<R: Ring> Mul for TruncSeries<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.checked_mul(&o).expect("variable sets differ")
    }
}

impl<R: Ring> Neg for TruncSeries<R> {
    type Output = Self;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl<R: Ring> fmt::Debug for TruncSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries({self})")
    }
}

impl<R: Ring> fmt::Display for TruncSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| total(a).cmp(&total(b)).then(b.cmp(a)));
        let mut parts = Vec::new();
        for e in keys {
            let c = &self.terms[e];
            let mono: Vec<String> = e
                .iter()
                .zip(self.vars.iter())
                .filter(|(x, _)| **x != 0)
                .map(|(x, v)| if *x == 1 { v.clone() } else { format!("{v}^{x}") })
                .collect();
            let cs = c.to_string();
            let cs = if cs.chars().skip(1).any(|ch| ch == '+' || ch == '-') { format!("({cs})") } else { cs };
            parts.push(match (mono.is_empty(), c.is_one()) {
                (true, _) => cs,
                (false, true) => mono.join("*"),
                (false, false) if cs == "-1" => format!("-{}", mono.join("*")),
                _ => format!("{cs}*{}", mono.join("*")),
            });
        }
        parts.push(format!("O({})", self.order));
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn z(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn compose_examples() {
        let f = TruncSeries::univariate("x", &z(&[0, 1]), 6);
        let g = TruncSeries::univariate("y", &z(&[0, 1, 1]), 6);
        assert_eq!(series_compose(&f, &[("x", g.clone())]).unwrap(), g);

        let f = TruncSeries::univariate("x", &z(&[0, 0, 1]), 5);
        let g = TruncSeries::univariate("x", &z(&[0, 1, 0, 1]), 5);
        let want = TruncSeries::univariate("x", &z(&[0, 0, 1, 0, 2]), 5);
        assert_eq!(series_compose(&f, &[("x", g)]).unwrap(), want);
    }

    #[test]
    fn compose_rejects_constant_terms() {
        let f = TruncSeries::univariate("x", &z(&[0, 1]), 4);
        let g = TruncSeries::univariate("x", &z(&[1, 1]), 4);
        assert!(matches!(series_compose(&f, &[("x", g)]), Err(Error::Composition(_))));
    }

    #[test]
    fn geometric_helper() {
        let f = TruncSeries::univariate("b", &z(&[0, 24]), 4);
        let g = f.geometric().unwrap();
        assert_eq!(g.univariate_coeffs(), z(&[1, 24, 576, 13824]));
    }

    #[test]
    fn reverse_examples() {
        let f = TruncSeries::univariate("x", &z(&[0, 1, 1]), 5);
        let g = series_reverse(&f).unwrap();
        assert_eq!(g.univariate_coeffs(), z(&[0, 1, -1, 2, -5]));

        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let log1p = TruncSeries::univariate("x", &[q(0, 1), q(1, 1), q(-1, 2), q(1, 3)], 4);
        let e = series_reverse(&log1p).unwrap();
        assert_eq!(e.univariate_coeffs(), vec![q(0, 1), q(1, 1), q(1, 2), q(1, 6)]);

        let bad = TruncSeries::univariate("x", &z(&[0, 2, 1]), 4);
        assert!(matches!(series_reverse(&bad), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn mixing_variable_sets_is_an_error() {
        let a = TruncSeries::<BigInt>::var(&["x"], "x", 4).unwrap();
        let b = TruncSeries::<BigInt>::var(&["y"], "y", 4).unwrap();
        assert!(matches!(a.checked_add(&b), Err(Error::VariableMismatch(_))));
    }

    #[test]
    fn integrate_and_differentiate() {
        let q = |n: i64| BigRational::from_integer(n.into());
        let f = TruncSeries::univariate("x", &[q(1), q(1), q(1)], 3);
        let i = f.integrate("x").unwrap();
        assert_eq!(i.derivative("x").unwrap(), f);
        let fz = TruncSeries::univariate("x", &z(&[0, 1]), 3);
        assert!(fz.integrate("x").is_err());
    }
}
