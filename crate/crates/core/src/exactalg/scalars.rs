//! Concrete scalar rings: Z, Q, Z localized at a prime, Z with a prime
//! inverted, and Z/m.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ring::{EuclideanRing, FiniteRing, Ring, RingDescriptor, RingKind};
use crate::error::{Error, Result};

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `Some((p, k))` when `n = p^k` for a prime `p`.
pub(crate) fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while !n.is_multiple_of(p) {
        p += 1;
    }
    let mut m = n;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

/// p-adic valuation of a nonzero integer.
pub(crate) fn valuation(n: &BigInt, p: u64) -> u32 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut m = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

fn strip_prime(n: &BigInt, p: u64) -> BigInt {
    if n.is_zero() {
        return n.clone();
    }
    let pb = BigInt::from(p);
    let mut m = n.clone();
    while (&m % &pb).is_zero() {
        m /= &pb;
    }
    m
}

// ---------------------------------------------------------------- Z

impl Ring for BigInt {
    fn descriptor() -> RingDescriptor {
        RingDescriptor::new(RingKind::Integers, 0)
    }

    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }

    fn inverse(&self) -> Option<Self> {
        (self.abs().is_one()).then(|| self.clone())
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return self.is_zero().then(BigInt::zero);
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(BigRational::from_integer(self.clone()))
    }

    fn from_rational(q: &BigRational) -> Option<Self> {
        q.is_integer().then(|| q.to_integer())
    }
}

impl EuclideanRing for BigInt {
    fn norm(&self) -> Option<BigUint> {
        (!self.is_zero()).then(|| self.magnitude().clone())
    }

    fn div_rem_euclid(&self, d: &Self) -> (Self, Self) {
        self.div_rem(d)
    }
}

// ---------------------------------------------------------------- Q

impl Ring for BigRational {
    fn descriptor() -> RingDescriptor {
        RingDescriptor::new(RingKind::Rationals, 0)
    }

    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }

    fn from_rational(q: &BigRational) -> Option<Self> {
        Some(q.clone())
    }
}

impl EuclideanRing for BigRational {
    fn norm(&self) -> Option<BigUint> {
        (!self.is_zero()).then(BigUint::one)
    }

    fn div_rem_euclid(&self, d: &Self) -> (Self, Self) {
        (self / d, BigRational::zero())
    }
}

// ------------------------------------------------- rational newtypes

macro_rules! rational_newtype_ops {
    ($t:ident) => {
        impl<const P: u64> Add for $t<P> {
            type Output = Self;
            fn add(self, o: Self) -> Self {
                $t(self.0 + o.0)
            }
        }
        impl<const P: u64> Sub for $t<P> {
            type Output = Self;
            fn sub(self, o: Self) -> Self {
                $t(self.0 - o.0)
            }
        }
        impl<const P: u64> Mul for $t<P> {
            type Output = Self;
            fn mul(self, o: Self) -> Self {
                $t(self.0 * o.0)
            }
        }
        impl<const P: u64> Neg for $t<P> {
            type Output = Self;
            fn neg(self) -> Self {
                $t(-self.0)
            }
        }
        impl<const P: u64> Zero for $t<P> {
            fn zero() -> Self {
                $t(BigRational::zero())
            }
            fn is_zero(&self) -> bool {
                self.0.is_zero()
            }
        }
        impl<const P: u64> One for $t<P> {
            fn one() -> Self {
                $t(BigRational::one())
            }
        }
        impl<const P: u64> fmt::Display for $t<P> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }
        impl<const P: u64> $t<P> {
            pub fn value(&self) -> &BigRational {
                &self.0
            }
        }
    };
}

/// Z localized at the prime `P`: fractions whose denominator is prime to `P`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LocalInt<const P: u64>(BigRational);

rational_newtype_ops!(LocalInt);

impl<const P: u64> LocalInt<P> {
    pub fn new(q: BigRational) -> Result<Self> {
        if (q.denom() % BigInt::from(P)).is_zero() {
            return Err(Error::InvalidLocalization(format!("{q} has denominator divisible by {P}")));
        }
        Ok(LocalInt(q))
    }

    pub fn from_fraction(n: i64, d: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidLocalization("zero denominator".into()));
        }
        Self::new(BigRational::new(n.into(), d.into()))
    }

    /// P-adic valuation; `None` for zero.
    pub fn valuation(&self) -> Option<u32> {
        (!self.0.is_zero()).then(|| valuation(self.0.numer(), P))
    }
}

impl<const P: u64> Ring for LocalInt<P> {
    fn descriptor() -> RingDescriptor {
        RingDescriptor::new(RingKind::LocalizedAt { prime: P }, 0)
    }

    fn from_bigint(n: &BigInt) -> Self {
        LocalInt(BigRational::from_integer(n.clone()))
    }

    fn inverse(&self) -> Option<Self> {
        if self.0.is_zero() || (self.0.numer() % BigInt::from(P)).is_zero() {
            return None;
        }
        Some(LocalInt(self.0.recip()))
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        if d.0.is_zero() {
            return self.0.is_zero().then(Self::zero);
        }
        LocalInt::new(&self.0 / &d.0).ok()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        LocalInt(&self.0 * &other.0)
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.0.clone())
    }

    fn from_rational(q: &BigRational) -> Option<Self> {
        LocalInt::new(q.clone()).ok()
    }
}

impl<const P: u64> EuclideanRing for LocalInt<P> {
    fn norm(&self) -> Option<BigUint> {
        self.valuation().map(BigUint::from)
    }

    fn div_rem_euclid(&self, d: &Self) -> (Self, Self) {
        match self.try_div(d) {
            Some(q) => (q, Self::zero()),
            None => (Self::zero(), self.clone()),
        }
    }
}

/// Z with the prime `P` inverted: fractions whose denominator is a power of `P`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InvertedPrime<const P: u64>(BigRational);

rational_newtype_ops!(InvertedPrime);

impl<const P: u64> InvertedPrime<P> {
    pub fn new(q: BigRational) -> Result<Self> {
        if !strip_prime(q.denom(), P).is_one() {
            return Err(Error::InvalidLocalization(format!("{q} has a denominator that is not a power of {P}")));
        }
        Ok(InvertedPrime(q))
    }

    pub fn from_fraction(n: i64, d: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidLocalization("zero denominator".into()));
        }
        Self::new(BigRational::new(n.into(), d.into()))
    }
}

impl<const P: u64> Ring for InvertedPrime<P> {
    fn descriptor() -> RingDescriptor {
        RingDescriptor::new(RingKind::InvertedPrimes { primes: vec![P] }, 0)
    }

    fn from_bigint(n: &BigInt) -> Self {
        InvertedPrime(BigRational::from_integer(n.clone()))
    }

    fn inverse(&self) -> Option<Self> {
        if self.0.is_zero() || !strip_prime(self.0.numer(), P).abs().is_one() {
            return None;
        }
        Some(InvertedPrime(self.0.recip()))
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        if d.0.is_zero() {
            return self.0.is_zero().then(Self::zero);
        }
        InvertedPrime::new(&self.0 / &d.0).ok()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        InvertedPrime(&self.0 * &other.0)
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.0.clone())
    }

    fn from_rational(q: &BigRational) -> Option<Self> {
        InvertedPrime::new(q.clone()).ok()
    }
}

impl<const P: u64> EuclideanRing for InvertedPrime<P> {
    fn norm(&self) -> Option<BigUint> {
        (!self.0.is_zero()).then(|| strip_prime(self.0.numer(), P).magnitude().clone())
    }

    fn div_rem_euclid(&self, d: &Self) -> (Self, Self) {
        if d.0.is_zero() {
            return (Self::zero(), self.clone());
        }
        // self = n/P^a, d = m/P^b; divide the P-free parts of the numerators.
        let n = strip_prime(self.0.numer(), P);
        let m = strip_prime(d.0.numer(), P);
        let (q, r) = n.div_rem(&m);
        let unit_s = &self.0 / BigRational::from_integer(n);
        let unit_d = &d.0 / BigRational::from_integer(m);
        let q = InvertedPrime(BigRational::from_integer(q) * &unit_s / unit_d);
        let r = InvertedPrime(BigRational::from_integer(r) * unit_s);
        (q, r)
    }
}

// ---------------------------------------------------------------- Z/m

/// Integers modulo `M`. For prime `M` this is the prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Zmod<const M: u64>(u64);

impl<const M: u64> Zmod<M> {
    pub fn new(v: i64) -> Self {
        Zmod((v.rem_euclid(M as i64)) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// Representative in `(-M/2, M/2]`.
    pub fn symmetric(self) -> i64 {
        let v = self.0 as i64;
        if v > (M as i64) / 2 {
            v - M as i64
        } else {
            v
        }
    }
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

impl<const M: u64> Add for Zmod<M> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Zmod(((self.0 as u128 + o.0 as u128) % M as u128) as u64)
    }
}

impl<const M: u64> Sub for Zmod<M> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Zmod(((self.0 as u128 + M as u128 - o.0 as u128) % M as u128) as u64)
    }
}

impl<const M: u64> Mul for Zmod<M> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Zmod(((self.0 as u128 * o.0 as u128) % M as u128) as u64)
    }
}

impl<const M: u64> Neg for Zmod<M> {
    type Output = Self;
    fn neg(self) -> Self {
        Zmod((M - self.0) % M)
    }
}

impl<const M: u64> Zero for Zmod<M> {
    fn zero() -> Self {
        Zmod(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const M: u64> One for Zmod<M> {
    fn one() -> Self {
        Zmod(1 % M)
    }
}

impl<const M: u64> fmt::Display for Zmod<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const M: u64> Ring for Zmod<M> {
    fn descriptor() -> RingDescriptor {
        let kind = if is_prime(M) { RingKind::PrimeField { p: M } } else { RingKind::ModularIntegers { modulus: M } };
        RingDescriptor::new(kind, M)
    }

    fn from_bigint(n: &BigInt) -> Self {
        let m = BigInt::from(M);
        let r = n.mod_floor(&m);
        Zmod(r.to_u64().expect("reduced residue fits in u64"))
    }

    fn inverse(&self) -> Option<Self> {
        let (g, x, _) = ext_gcd(self.0 as i128, M as i128);
        (g == 1).then(|| Zmod(x.rem_euclid(M as i128) as u64))
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        if let Some(inv) = d.inverse() {
            return Some(*self * inv);
        }
        let (g, x, _) = ext_gcd(d.0 as i128, M as i128);
        let g = g.abs();
        if (self.0 as i128) % g != 0 {
            return None;
        }
        // d*x = g (mod M), so d * (x * a/g) = a.
        let q = (x.rem_euclid(M as i128) * (self.0 as i128 / g)).rem_euclid(M as i128);
        Some(Zmod(q as u64))
    }

    fn to_rational(&self) -> Option<BigRational> {
        None
    }
}

impl<const M: u64> FiniteRing for Zmod<M> {
    fn elements() -> Vec<Self> {
        (0..M).map(Zmod).collect()
    }
}

impl<const M: u64> EuclideanRing for Zmod<M> {
    /// Valuation at the prime of `M`; `M` must be a prime power.
    fn norm(&self) -> Option<BigUint> {
        let (p, _) = prime_power(M).expect("Euclidean structure on Z/m needs m = p^k");
        if self.0 == 0 {
            return None;
        }
        Some(BigUint::from(valuation(&BigInt::from(self.0), p)))
    }

    fn div_rem_euclid(&self, d: &Self) -> (Self, Self) {
        match (self.norm(), d.norm()) {
            (_, None) => (Self::zero(), *self),
            (None, _) => (Self::zero(), Self::zero()),
            (Some(a), Some(b)) if a >= b => (self.try_div(d).expect("valuation permits"), Self::zero()),
            _ => (Self::zero(), *self),
        }
    }
}

/// Lift of a residue to its least nonnegative integer representative.
pub fn lift_zmod<const M: u64>(a: Zmod<M>) -> BigInt {
    BigInt::from(a.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    type Z2 = LocalInt<2>;
    type Z13 = InvertedPrime<3>;

    #[test]
    fn localized_rejects_even_denominators() {
        assert!(Z2::from_fraction(1, 2).is_err());
        assert!(Z2::from_fraction(3, 4).is_err());
        for d in [1, 3, 5, 7, 9, 15, 21] {
            assert!(Z2::from_fraction(1, d).is_ok());
        }
    }

    #[test]
    fn localized_units() {
        assert!(Z2::from_int(3).is_unit());
        assert!(!Z2::from_int(6).is_unit());
        assert_eq!(Z2::from_int(12).valuation(), Some(2));
        let third = Z2::from_int(3).inverse().unwrap();
        assert_eq!(third * Z2::from_int(3), Z2::one());
    }

    #[test]
    fn inverted_three() {
        assert!(Z13::from_fraction(1, 9).is_ok());
        assert!(Z13::from_fraction(1, 2).is_err());
        assert!(Z13::from_int(-27).is_unit());
        assert!(!Z13::from_int(2).is_unit());
        assert_eq!(Z13::from_int(4).div_int(2), Some(Z13::from_int(2)));
        assert_eq!(Z13::from_int(1).div_int(2), None);
    }

    #[test]
    fn zmod_arithmetic() {
        type Z8 = Zmod<8>;
        assert_eq!(Z8::new(5).inverse(), Some(Z8::new(5)));
        assert_eq!(Z8::new(2).inverse(), None);
        assert_eq!(Z8::new(6).try_div(&Z8::new(2)).map(|q| q * Z8::new(2)), Some(Z8::new(6)));
        assert_eq!(Z8::new(3).try_div(&Z8::new(2)), None);
        assert_eq!(Z8::new(-1), Z8::new(7));
        assert_eq!(Zmod::<2>::descriptor().kind, RingKind::PrimeField { p: 2 });
    }

    #[test]
    fn euclid_on_inverted_prime() {
        let a = Z13::from_fraction(14, 9).unwrap();
        let b = Z13::from_int(5);
        let (q, r) = a.div_rem_euclid(&b);
        assert_eq!(q * b.clone() + r.clone(), a);
        assert!(r.norm().unwrap() < b.norm().unwrap());
    }
}
