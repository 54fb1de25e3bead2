//! Quotient extensions `R[x]/(f)` for a fixed monic `f`.

use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ring::{FiniteRing, Ring, RingDescriptor, RingKind};

/// A monic modulus polynomial fixed at the type level.
pub trait ExtModulus: fmt::Debug + Clone + PartialEq + Send + Sync + 'static {
    /// Coefficients from the constant term up, ending with the leading 1.
    fn coefficients() -> Vec<i64>;
    /// Symbol printed for the class of `x`.
    fn symbol() -> &'static str;
}

/// `x^2 + x + 1`: adjoins a primitive cube root of unity ω.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Omega;

impl ExtModulus for Omega {
    fn coefficients() -> Vec<i64> {
        vec![1, 1, 1]
    }
    fn symbol() -> &'static str {
        "w"
    }
}

/// `x^3 + x + 1`, irreducible over F_2; gives F_8.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cubic8;

impl ExtModulus for Cubic8 {
    fn coefficients() -> Vec<i64> {
        vec![1, 1, 0, 1]
    }
    fn symbol() -> &'static str {
        "g"
    }
}

/// The cyclotomic polynomial `1 + x + ... + x^(P-1)` for a prime `P`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic<const P: u64>;

impl<const P: u64> ExtModulus for Cyclotomic<P> {
    fn coefficients() -> Vec<i64> {
        vec![1; P as usize]
    }
    fn symbol() -> &'static str {
        "z"
    }
}

/// An element `c_0 + c_1 x + ... + c_{d-1} x^{d-1}` of `R[x]/(f)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Ext<R: Ring, M: ExtModulus> {
    coeffs: Vec<R>,
    _m: PhantomData<M>,
}

impl<R: Ring, M: ExtModulus> Ext<R, M> {
    pub fn degree() -> usize {
        M::coefficients().len() - 1
    }

    /// Builds an element from coefficients; shorter vectors are zero-padded and
    /// longer ones are reduced modulo `f`.
    pub fn new(coeffs: Vec<R>) -> Self {
        reduce::<R, M>(coeffs)
    }

    pub fn from_base(r: R) -> Self {
        Self::new(vec![r])
    }

    /// The class of `x`.
    pub fn generator() -> Self {
        Self::new(vec![R::zero(), R::one()])
    }

    pub fn coeff(&self, i: usize) -> &R {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// `Some(r)` when the element lies in the base ring.
    pub fn as_base(&self) -> Option<R> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| self.coeffs[0].clone())
    }

    /// Matrix of multiplication by `self` on the basis `1, x, ..., x^{d-1}`;
    /// entry `[i][j]` is the `x^i` coefficient of `self * x^j`.
    pub fn mult_matrix(&self) -> Vec<Vec<R>> {
        let d = Self::degree();
        let mut cols = Vec::with_capacity(d);
        let mut cur = self.clone();
        let x = Self::generator();
        for _ in 0..d {
            cols.push(cur.coeffs.clone());
            cur = cur * x.clone();
        }
        (0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect()
    }
}

fn reduce<R: Ring, M: ExtModulus>(mut c: Vec<R>) -> Ext<R, M> {
    let f = M::coefficients();
    let d = f.len() - 1;
    while c.len() > d {
        let top = c.pop().expect("nonempty");
        if top.is_zero() {
            continue;
        }
        // x^k = x^{k-d} * x^d and x^d = -(f_0 + ... + f_{d-1} x^{d-1}).
        let shift = c.len() - d;
        for (i, &fi) in f[..d].iter().enumerate() {
            if fi != 0 {
                let t = top.mul_ref(&R::from_int(fi));
                c[shift + i] = c[shift + i].sub_ref(&t);
            }
        }
    }
    c.resize(d, R::zero());
    Ext { coeffs: c, _m: PhantomData }
}

fn det<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    match n {
        0 => R::one(),
        1 => m[0][0].clone(),
        2 => m[0][0].mul_ref(&m[1][1]).sub_ref(&m[0][1].mul_ref(&m[1][0])),
        _ => {
            let mut acc = R::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let term = m[0][j].mul_ref(&det(&minor(m, 0, j)));
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

fn minor<R: Ring>(m: &[Vec<R>], r: usize, c: usize) -> Vec<Vec<R>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != r)
        .map(|(_, row)| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, v)| v.clone()).collect())
        .collect()
}

/// Adjugate times a vector: `adj(m) * v`.
fn adj_apply<R: Ring>(m: &[Vec<R>], v: &[R]) -> Vec<R> {
    let n = m.len();
    if n == 1 {
        return vec![v[0].clone()];
    }
    (0..n)
        .map(|i| {
            let mut acc = R::zero();
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                // adj[i][j] = (-1)^{i+j} det(minor(j, i))
                let c = det(&minor(m, j, i)).mul_ref(vj);
                acc = if (i + j) % 2 == 0 { acc + c } else { acc - c };
            }
            acc
        })
        .collect()
}

impl<R: Ring, M: ExtModulus> Add for Ext<R, M> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let c = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add_ref(b)).collect();
        Ext { coeffs: c, _m: PhantomData }
    }
}

impl<R: Ring, M: ExtModulus> Sub for Ext<R, M> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let c = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.sub_ref(b)).collect();
        Ext { coeffs: c, _m: PhantomData }
    }
}

impl<R: Ring, M: ExtModulus> Neg for Ext<R, M> {
    type Output = Self;
    fn neg(self) -> Self {
        Ext { coeffs: self.coeffs.into_iter().map(|a| -a).collect(), _m: PhantomData }
    }
}

impl<R: Ring, M: ExtModulus> Mul for Ext<R, M> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}

impl<R: Ring, M: ExtModulus> Zero for Ext<R, M> {
    fn zero() -> Self {
        Self::new(Vec::new())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl<R: Ring, M: ExtModulus> One for Ext<R, M> {
    fn one() -> Self {
        Self::new(vec![R::one()])
    }
}

impl<R: Ring, M: ExtModulus> fmt::Display for Ext<R, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = M::symbol();
            parts.push(match i {
                0 => format!("{c}"),
                1 if c.is_one() => s.to_string(),
                1 => format!("({c}){s}"),
                _ if c.is_one() => format!("{s}^{i}"),
                _ => format!("({c}){s}^{i}"),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

impl<R: Ring, M: ExtModulus> Ring for Ext<R, M> {
    fn descriptor() -> RingDescriptor {
        let base = R::descriptor();
        let ch = base.characteristic;
        RingDescriptor::new(RingKind::QuotientExtension { base: Box::new(base), modulus: M::coefficients() }, ch)
    }

    fn from_bigint(n: &BigInt) -> Self {
        Self::from_base(R::from_bigint(n))
    }

    fn inverse(&self) -> Option<Self> {
        let m = self.mult_matrix();
        let dinv = det(&m).inverse()?;
        let mut e0 = vec![R::zero(); Self::degree()];
        e0[0] = R::one();
        let v = adj_apply(&m, &e0).into_iter().map(|a| a.mul_ref(&dinv)).collect();
        Some(Ext { coeffs: v, _m: PhantomData })
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(inv) = d.inverse() {
            return Some(self.mul_ref(&inv));
        }
        let m = d.mult_matrix();
        let dt = det(&m);
        if dt.is_zero() {
            return None;
        }
        let v: Option<Vec<R>> = adj_apply(&m, &self.coeffs).into_iter().map(|a| a.try_div(&dt)).collect();
        let q = Ext { coeffs: v?, _m: PhantomData };
        (q.mul_ref(d) == *self).then_some(q)
    }

    fn mul_ref(&self, o: &Self) -> Self {
        let d = Self::degree();
        let mut c = vec![R::zero(); 2 * d];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] = c[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        reduce::<R, M>(c)
    }
}

impl<R: FiniteRing, M: ExtModulus> FiniteRing for Ext<R, M> {
    fn elements() -> Vec<Self> {
        let d = Self::degree();
        let base = R::elements();
        let mut out: Vec<Vec<R>> = vec![Vec::new()];
        for _ in 0..d {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    base.iter().map(move |b| {
                        let mut p = prefix.clone();
                        p.push(b.clone());
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(Self::new).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::scalars::{InvertedPrime, Zmod};

    type F4 = Ext<Zmod<2>, Omega>;
    type F8 = Ext<Zmod<2>, Cubic8>;
    type T = Ext<InvertedPrime<3>, Omega>;

    #[test]
    fn f4_is_a_field() {
        let els = F4::elements();
        assert_eq!(els.len(), 4);
        for a in els.iter().filter(|a| !a.is_zero()) {
            assert_eq!(a.clone() * a.inverse().unwrap(), F4::one());
        }
        let w = F4::generator();
        assert_eq!(w.pow(3), F4::one());
        assert_eq!(w.clone() * w.clone() + w + F4::one(), F4::zero());
    }

    #[test]
    fn f8_is_a_field() {
        let els = F8::elements();
        assert_eq!(els.len(), 8);
        for a in els.iter().filter(|a| !a.is_zero()) {
            assert_eq!(a.pow(7), F8::one());
        }
    }

    #[test]
    fn sqrt_minus_three() {
        let w = T::generator();
        let s = T::one() + w.clone() + w;
        assert_eq!(s.clone() * s.clone(), T::from_int(-3));
        // -3 is a unit once 3 is inverted, so is its square root.
        assert!(s.is_unit());
        assert!(!T::from_int(2).is_unit());
        assert_eq!(T::from_int(6).div_int(2), Some(T::from_int(3)));
    }
}
