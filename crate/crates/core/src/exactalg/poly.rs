//! Sparse multivariate polynomials with weighted generators.
//!
//! Generators may be flagged invertible, in which case negative exponents are
//! allowed and the value is a Laurent polynomial. Operands with different
//! generator lists are combined in the polynomial ring on the union of their
//! generators, so constants need no context.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ring::{Ring, RingDescriptor, RingKind};
use crate::error::{Error, Result};

/// A named generator with a grading weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Var {
    pub name: String,
    pub weight: i64,
    pub invertible: bool,
}

impl Var {
    pub fn new(name: &str, weight: i64) -> Self {
        Var { name: name.to_string(), weight, invertible: false }
    }

    pub fn invertible(name: &str, weight: i64) -> Self {
        Var { name: name.to_string(), weight, invertible: true }
    }
}

/// Exponent vector, indexed like the generator list.
pub type Exps = Vec<i32>;

#[derive(Clone)]
pub struct MPoly<R: Ring> {
    vars: Arc<Vec<Var>>,
    terms: BTreeMap<Exps, R>,
}

/// Polynomials in weighted generators.
pub type WeightedPoly<R> = MPoly<R>;
/// Polynomials in which some generators are inverted.
pub type LaurentPoly<R> = MPoly<R>;

impl<R: Ring> MPoly<R> {
    pub fn constant(c: R) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MPoly { vars: Arc::new(Vec::new()), terms }
    }

    /// The generator `v` itself.
    pub fn generator(v: Var) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], R::one());
        MPoly { vars: Arc::new(vec![v]), terms }
    }

    /// Non-invertible generator of the given weight.
    pub fn var(name: &str, weight: i64) -> Self {
        Self::generator(Var::new(name, weight))
    }

    /// Invertible generator of the given weight.
    pub fn unit_var(name: &str, weight: i64) -> Self {
        Self::generator(Var::invertible(name, weight))
    }

    /// Builds a polynomial from explicit terms, rejecting negative exponents
    /// on generators that are not invertible.
    pub fn from_terms(vars: Vec<Var>, terms: impl IntoIterator<Item = (Exps, R)>) -> Result<Self> {
        let mut out: BTreeMap<Exps, R> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(Error::InvalidArgument(format!(
                    "exponent vector of length {} for {} generators",
                    e.len(),
                    vars.len()
                )));
            }
            for (x, v) in e.iter().zip(&vars) {
                if *x < 0 && !v.invertible {
                    return Err(Error::InvalidArgument(format!(
                        "negative exponent on non-invertible generator {}",
                        v.name
                    )));
                }
            }
            add_term(&mut out, e, c);
        }
        Ok(MPoly { vars: Arc::new(vars), terms: out })
    }

    /// Monomial `c * prod v_i^{e_i}` over the given generators.
    pub fn monomial(vars: &[Var], e: &[i32], c: R) -> Result<Self> {
        Self::from_terms(vars.to_vec(), [(e.to_vec(), c)])
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &R)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn weighted_degree_of(&self, e: &[i32]) -> i64 {
        e.iter().zip(self.vars.iter()).map(|(x, v)| *x as i64 * v.weight).sum()
    }

    /// `Some(w)` when every term has weight `w`; the zero polynomial gives `Some(0)`.
    pub fn homogeneous_weight(&self) -> Option<i64> {
        let mut ws = self.terms.keys().map(|e| self.weighted_degree_of(e));
        let first = ws.next().unwrap_or(0);
        ws.all(|w| w == first).then_some(first)
    }

    pub fn homogeneous_component(&self, w: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| self.weighted_degree_of(e) == w)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        MPoly { vars: self.vars.clone(), terms }
    }

    /// Coefficient of the monomial given as `(name, exponent)` pairs; absent
    /// names have exponent zero.
    pub fn coefficient(&self, mono: &[(&str, i32)]) -> R {
        let mut e = vec![0; self.vars.len()];
        for (name, x) in mono {
            match self.var_index(name) {
                Some(i) => e[i] = *x,
                None if *x == 0 => {}
                None => return R::zero(),
            }
        }
        self.terms.get(&e).cloned().unwrap_or_else(R::zero)
    }

    pub fn as_constant(&self) -> Option<R> {
        match self.terms.len() {
            0 => Some(R::zero()),
            1 => self.terms.get(&vec![0; self.vars.len()]).cloned(),
            _ => None,
        }
    }

    pub fn degree_in(&self, name: &str) -> Option<i32> {
        let i = self.var_index(name)?;
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> MPoly<S> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            add_term(&mut terms, e.clone(), f(c));
        }
        MPoly { vars: self.vars.clone(), terms }
    }

    /// Evaluates at values for every generator, sending coefficients through `coef`.
    pub fn eval<S: Ring>(&self, coef: impl Fn(&R) -> S, vals: &HashMap<String, S>) -> Result<S> {
        let mut powers: Vec<HashMap<i32, S>> = vec![HashMap::new(); self.vars.len()];
        let mut acc = S::zero();
        for (e, c) in &self.terms {
            let mut t = coef(c);
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let name = &self.vars[i].name;
                if let std::collections::hash_map::Entry::Vacant(e) = powers[i].entry(x) {
                    let v = vals.get(name).ok_or_else(|| Error::InvalidArgument(format!("no value for {name}")))?;
                    let p = if x > 0 {
                        v.pow(x as u32)
                    } else {
                        v.inverse().ok_or_else(|| Error::NotInvertible(format!("{name} = {v}")))?.pow((-x) as u32)
                    };
                    e.insert(p);
                }
                t = t.mul_ref(&powers[i][&x]);
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Substitutes polynomials for some generators and keeps the others.
    pub fn substitute(&self, map: &[(&str, MPoly<R>)]) -> Result<Self> {
        let mut acc = Self::zero();
        for (e, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let v = &self.vars[i];
                let base = map
                    .iter()
                    .find(|(n, _)| *n == v.name)
                    .map(|(_, p)| p.clone())
                    .unwrap_or_else(|| Self::generator(v.clone()));
                let p = if x > 0 {
                    base.pow(x as u32)
                } else {
                    base.inverse().ok_or_else(|| Error::NotInvertible(format!("image of {}", v.name)))?.pow((-x) as u32)
                };
                t = t * p;
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Re-expresses the polynomial over a generator list containing its own.
    fn lift_to(&self, vars: &Arc<Vec<Var>>) -> BTreeMap<Exps, R> {
        if Arc::ptr_eq(&self.vars, vars) || *self.vars == **vars {
            return self.terms.clone();
        }
        let idx: Vec<usize> =
            self.vars.iter().map(|v| vars.iter().position(|w| w.name == v.name).expect("generator present")).collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut f = vec![0; vars.len()];
                for (i, &x) in e.iter().enumerate() {
                    f[idx[i]] = x;
                }
                (f, c.clone())
            })
            .collect()
    }

    fn union_vars(&self, o: &Self) -> Arc<Vec<Var>> {
        if Arc::ptr_eq(&self.vars, &o.vars) || *self.vars == *o.vars {
            return self.vars.clone();
        }
        if o.vars.is_empty() {
            return self.vars.clone();
        }
        if self.vars.is_empty() {
            return o.vars.clone();
        }
        let mut vs = (*self.vars).clone();
        for v in o.vars.iter() {
            match vs.iter().find(|w| w.name == v.name) {
                Some(w) => assert!(w == v, "generator {} used with conflicting weight or invertibility", v.name),
                None => vs.push(v.clone()),
            }
        }
        Arc::new(vs)
    }

    fn leading(&self) -> Option<(&Exps, &R)> {
        self.terms.iter().next_back()
    }
}

fn add_term<R: Ring>(m: &mut BTreeMap<Exps, R>, e: Exps, c: R) {
    if c.is_zero() {
        return;
    }
    match m.remove(&e) {
        Some(old) => {
            let s = old + c;
            if !s.is_zero() {
                m.insert(e, s);
            }
        }
        None => {
            m.insert(e, c);
        }
    }
}

impl<R: Ring> fmt::Debug for MPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl<R: Ring> PartialEq for MPoly<R> {
    fn eq(&self, o: &Self) -> bool {
        (self.clone() - o.clone()).is_zero()
    }
}

impl<R: Ring> Add for MPoly<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.add_ref(&o)
    }
}

impl<R: Ring> Sub for MPoly<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.add_ref(&-o)
    }
}

impl<R: Ring> Neg for MPoly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        let terms = self.terms.into_iter().map(|(e, c)| (e, -c)).collect();
        MPoly { vars: self.vars, terms }
    }
}

impl<R: Ring> Mul for MPoly<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}

impl<R: Ring> Zero for MPoly<R> {
    fn zero() -> Self {
        MPoly { vars: Arc::new(Vec::new()), terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<R: Ring> One for MPoly<R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<R: Ring> fmt::Display for MPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .zip(self.vars.iter())
                .filter(|(x, _)| **x != 0)
                .map(|(x, v)| if *x == 1 { v.name.clone() } else { format!("{}^{}", v.name, x) })
                .collect();
            let cs = c.to_string();
            let needs_paren = cs.chars().skip(1).any(|ch| ch == '+' || ch == '-');
            let cs = if needs_paren { format!("({cs})") } else { cs };
            parts.push(match (mono.is_empty(), c.is_one(), cs.as_str()) {
                (true, _, _) => cs.clone(),
                (false, true, _) => mono.join("*"),
                (false, false, "-1") => format!("-{}", mono.join("*")),
                _ => format!("{}*{}", cs, mono.join("*")),
            });
        }
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

impl<R: Ring> Ring for MPoly<R> {
    fn descriptor() -> RingDescriptor {
        let base = R::descriptor();
        let ch = base.characteristic;
        RingDescriptor::new(RingKind::Polynomial { base: Box::new(base) }, ch)
    }

    fn from_bigint(n: &BigInt) -> Self {
        Self::constant(R::from_bigint(n))
    }

    /// Units are monomials with a unit coefficient in invertible generators.
    fn inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().expect("one term");
        if e.iter().zip(self.vars.iter()).any(|(x, v)| *x != 0 && !v.invertible) {
            return None;
        }
        let mut terms = BTreeMap::new();
        terms.insert(e.iter().map(|x| -x).collect(), c.inverse()?);
        Some(MPoly { vars: self.vars.clone(), terms })
    }

    /// Exact division by repeated cancellation of leading terms.
    fn try_div(&self, d: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(inv) = d.inverse() {
            return Some(self.mul_ref(&inv));
        }
        let vars = self.union_vars(d);
        let dt = MPoly { vars: vars.clone(), terms: d.lift_to(&vars) };
        let (de, dc) = {
            let (e, c) = dt.leading()?;
            (e.clone(), c.clone())
        };
        let mut rem = MPoly { vars: vars.clone(), terms: self.lift_to(&vars) };
        let mut q = MPoly { vars: vars.clone(), terms: BTreeMap::new() };
        for _ in 0..(1 << 16) {
            let Some((re, rc)) = rem.leading() else {
                return Some(q);
            };
            let e: Exps = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            if e.iter().zip(vars.iter()).any(|(x, v)| *x < 0 && !v.invertible) {
                return None;
            }
            let c = rc.try_div(&dc)?;
            let t = MPoly { vars: vars.clone(), terms: BTreeMap::from([(e, c)]) };
            rem = rem - t.mul_ref(&dt);
            q = q + t;
        }
        None
    }

    fn add_ref(&self, o: &Self) -> Self {
        let vars = self.union_vars(o);
        let mut terms = self.lift_to(&vars);
        for (e, c) in o.lift_to(&vars) {
            add_term(&mut terms, e, c);
        }
        MPoly { vars, terms }
    }

    fn mul_ref(&self, o: &Self) -> Self {
        let vars = self.union_vars(o);
        let a = self.lift_to(&vars);
        let b = o.lift_to(&vars);
        let mut terms = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Exps = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                add_term(&mut terms, e, ca.mul_ref(cb));
            }
        }
        MPoly { vars, terms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = MPoly<BigInt>;

    fn ab() -> (P, P) {
        (P::var("A", 1), P::var("B", 3))
    }

    #[test]
    fn union_of_generators() {
        let (a, b) = ab();
        let p = a.clone() * b.clone() + P::from_int(2);
        assert_eq!(p.coefficient(&[("A", 1), ("B", 1)]), BigInt::from(1));
        assert_eq!(p.coefficient(&[]), BigInt::from(2));
        assert_eq!(p.homogeneous_weight(), None);
        assert_eq!(p.homogeneous_component(4), a * b);
    }

    #[test]
    fn exact_division() {
        let (a, b) = ab();
        let f = a.pow(3) - b.clone() * P::from_int(27);
        let g = b.pow(3) * f.clone();
        assert_eq!(g.try_div(&f), Some(b.pow(3)));
        assert_eq!(g.try_div(&(a.clone() + P::one())), None);
    }

    #[test]
    fn laurent_units() {
        let a = P::unit_var("a", 1);
        let inv = a.inverse().unwrap();
        assert_eq!(a.clone() * inv.clone(), P::one());
        assert!(P::var("A", 1).inverse().is_none());
        let bad = P::from_terms(vec![Var::new("A", 1)], [(vec![-1], BigInt::from(1))]);
        assert!(bad.is_err());
    }

    #[test]
    fn substitution_and_eval() {
        let (a, b) = ab();
        let f = a.pow(3) - b.clone() * P::from_int(27);
        let g = f.substitute(&[("B", P::zero())]).unwrap();
        assert_eq!(g, a.pow(3));
        let vals = HashMap::from([("A".to_string(), BigInt::from(3)), ("B".to_string(), BigInt::from(1))]);
        assert_eq!(f.eval(|c| c.clone(), &vals).unwrap(), BigInt::from(0));
    }
}
