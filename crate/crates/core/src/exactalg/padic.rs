//! p-adic integers known to a carried precision.
//!
//! An element is either exact (a fraction with denominator prime to `P`) or
//! known modulo `P^k`. Binary operations keep the smaller precision, so the
//! 2-adic cutoff can be chosen at run time.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use super::ring::{Ring, RingDescriptor, RingKind};
use super::scalars::valuation;

#[derive(Debug, Clone)]
enum Repr {
    Exact(BigRational),
    /// `value` lies in `[0, P^prec)`.
    Approx {
        value: BigInt,
        prec: u32,
    },
}

#[derive(Debug, Clone)]
pub struct Padic<const P: u64>(Repr);

fn pk<const P: u64>(k: u32) -> BigInt {
    Pow::pow(BigInt::from(P), k)
}

fn modinv(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

impl<const P: u64> Padic<P> {
    /// The class of `n` modulo `P^k`.
    pub fn with_prec(n: &BigInt, k: u32) -> Self {
        Padic(Repr::Approx { value: n.mod_floor(&pk::<P>(k)), prec: k })
    }

    pub fn from_i64_prec(n: i64, k: u32) -> Self {
        Self::with_prec(&BigInt::from(n), k)
    }

    /// Exact element from a fraction; `None` if `P` divides the denominator.
    pub fn exact(q: BigRational) -> Option<Self> {
        (!(q.denom() % BigInt::from(P)).is_zero()).then_some(Padic(Repr::Exact(q)))
    }

    /// `None` for exact elements.
    pub fn prec(&self) -> Option<u32> {
        match &self.0 {
            Repr::Exact(_) => None,
            Repr::Approx { prec, .. } => Some(*prec),
        }
    }

    /// Reduction modulo `P^k`, never raising the precision.
    pub fn truncate(&self, k: u32) -> Self {
        let k = self.prec().map_or(k, |p| p.min(k));
        Padic(Repr::Approx { value: self.residue_mod(k), prec: k })
    }

    /// Least nonnegative representative modulo `P^k`.
    pub fn residue_mod(&self, k: u32) -> BigInt {
        let m = pk::<P>(k);
        match &self.0 {
            Repr::Exact(q) => {
                let d = modinv(&q.denom().mod_floor(&m), &m).expect("denominator prime to P");
                (q.numer() * d).mod_floor(&m)
            }
            Repr::Approx { value, prec } => {
                debug_assert!(k <= *prec);
                value.mod_floor(&m)
            }
        }
    }

    /// Representative as an integer: the stored residue, or the numerator of
    /// an exact integer. `None` for exact non-integers.
    pub fn lift(&self) -> Option<BigInt> {
        match &self.0 {
            Repr::Exact(q) => q.is_integer().then(|| q.to_integer()),
            Repr::Approx { value, .. } => Some(value.clone()),
        }
    }

    /// P-adic valuation; `None` when the element is zero to its precision.
    pub fn valuation(&self) -> Option<u32> {
        match &self.0 {
            Repr::Exact(q) => (!q.is_zero()).then(|| valuation(q.numer(), P)),
            Repr::Approx { value, .. } => (!value.is_zero()).then(|| valuation(value, P)),
        }
    }

    fn binop(
        &self,
        o: &Self,
        exact: impl Fn(&BigRational, &BigRational) -> BigRational,
        approx: impl Fn(&BigInt, &BigInt) -> BigInt,
    ) -> Self {
        if let (Repr::Exact(a), Repr::Exact(b)) = (&self.0, &o.0) {
            return Padic(Repr::Exact(exact(a, b)));
        }
        let k = match (self.prec(), o.prec()) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => unreachable!(),
        };
        let v = approx(&self.residue_mod(k), &o.residue_mod(k));
        Padic(Repr::Approx { value: v.mod_floor(&pk::<P>(k)), prec: k })
    }
}

impl<const P: u64> PartialEq for Padic<P> {
    fn eq(&self, o: &Self) -> bool {
        match (&self.0, &o.0) {
            (Repr::Exact(a), Repr::Exact(b)) => a == b,
            _ => (self.clone() - o.clone()).is_zero(),
        }
    }
}

impl<const P: u64> Add for Padic<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.binop(&o, |a, b| a + b, |a, b| a + b)
    }
}

impl<const P: u64> Sub for Padic<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.binop(&o, |a, b| a - b, |a, b| a - b)
    }
}

impl<const P: u64> Mul for Padic<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.binop(&o, |a, b| a * b, |a, b| a * b)
    }
}

impl<const P: u64> Neg for Padic<P> {
    type Output = Self;
    fn neg(self) -> Self {
        match self.0 {
            Repr::Exact(q) => Padic(Repr::Exact(-q)),
            Repr::Approx { value, prec } => Padic(Repr::Approx { value: (-value).mod_floor(&pk::<P>(prec)), prec }),
        }
    }
}

impl<const P: u64> Zero for Padic<P> {
    fn zero() -> Self {
        Padic(Repr::Exact(BigRational::zero()))
    }
    fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Exact(q) => q.is_zero(),
            Repr::Approx { value, .. } => value.is_zero(),
        }
    }
}

impl<const P: u64> One for Padic<P> {
    fn one() -> Self {
        Padic(Repr::Exact(BigRational::one()))
    }
}

impl<const P: u64> fmt::Display for Padic<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Exact(q) => write!(f, "{q}"),
            Repr::Approx { value, .. } => write!(f, "{value}"),
        }
    }
}

impl<const P: u64> Ring for Padic<P> {
    fn descriptor() -> RingDescriptor {
        RingDescriptor::new(RingKind::PadicTruncated { prime: P }, 0)
    }

    fn from_bigint(n: &BigInt) -> Self {
        Padic(Repr::Exact(BigRational::from_integer(n.clone())))
    }

    fn inverse(&self) -> Option<Self> {
        match &self.0 {
            Repr::Exact(q) => (!q.is_zero() && valuation(q.numer(), P) == 0).then(|| Padic(Repr::Exact(q.recip()))),
            Repr::Approx { value, prec } => {
                let m = pk::<P>(*prec);
                (*prec > 0).then(|| modinv(value, &m)).flatten().map(|v| Padic(Repr::Approx { value: v, prec: *prec }))
            }
        }
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        if let Some(inv) = d.inverse() {
            return Some(self.mul_ref(&inv));
        }
        if let (Repr::Exact(a), Repr::Exact(b)) = (&self.0, &d.0) {
            if b.is_zero() {
                return a.is_zero().then(Self::zero);
            }
            return Self::exact(a / b);
        }
        // Divide by P^v at the cost of v digits of precision.
        let k = match (self.prec(), d.prec()) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => unreachable!(),
        };
        let dv = d.residue_mod(k);
        if dv.is_zero() {
            return None;
        }
        let v = valuation(&dv, P);
        let av = self.residue_mod(k);
        let pv = pk::<P>(v);
        if !(&av % &pv).is_zero() {
            return None;
        }
        let m = pk::<P>(k - v);
        let inv = modinv(&(&dv / &pv).mod_floor(&m), &m)?;
        Some(Padic(Repr::Approx { value: ((av / pv) * inv).mod_floor(&m), prec: k - v }))
    }

    fn to_rational(&self) -> Option<BigRational> {
        match &self.0 {
            Repr::Exact(q) => Some(q.clone()),
            Repr::Approx { .. } => None,
        }
    }

    fn from_rational(q: &BigRational) -> Option<Self> {
        Self::exact(q.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Z2 = Padic<2>;

    #[test]
    fn precision_is_the_minimum() {
        let a = Z2::from_i64_prec(5, 3);
        let b = Z2::from_i64_prec(7, 5);
        let c = a.clone() * b;
        assert_eq!(c.prec(), Some(3));
        assert_eq!(c.lift(), Some(BigInt::from(3)));
        let e = a * Z2::from_int(3);
        assert_eq!(e.prec(), Some(3));
    }

    #[test]
    fn exact_thirds_reduce() {
        let third = Z2::exact(BigRational::new(1.into(), 3.into())).unwrap();
        let x = third * Z2::from_i64_prec(1, 4);
        // 3 * 11 = 33 = 1 mod 16
        assert_eq!(x.lift(), Some(BigInt::from(11)));
        assert!(Z2::exact(BigRational::new(1.into(), 2.into())).is_none());
    }

    #[test]
    fn division_by_two_loses_a_digit() {
        let a = Z2::from_i64_prec(6, 4);
        let q = a.div_int(2).unwrap();
        assert_eq!(q.prec(), Some(3));
        assert_eq!(q.lift(), Some(BigInt::from(3)));
        assert!(Z2::from_i64_prec(3, 4).div_int(2).is_none());
    }

    #[test]
    fn equality_modulo_precision() {
        assert_eq!(Z2::from_i64_prec(1, 2), Z2::from_int(5));
        assert_ne!(Z2::from_i64_prec(1, 3), Z2::from_int(5));
    }
}
