//! The scalar abstraction shared by every module.
//!
//! All algebra in this crate is exact. A [`Ring`] is a commutative ring with
//! unit whose elements are plain values: `zero()` and `one()` need no runtime
//! context, so moduli and extension polynomials live in the type (const
//! generics or marker types) rather than in the value.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Structural description of a coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingKind {
    Integers,
    Rationals,
    /// Integers with every prime except `prime` inverted.
    LocalizedAt {
        prime: u64,
    },
    /// Integers with the listed primes inverted.
    InvertedPrimes {
        primes: Vec<u64>,
    },
    ModularIntegers {
        modulus: u64,
    },
    PrimeField {
        p: u64,
    },
    /// p-adic integers known to a carried precision.
    PadicTruncated {
        prime: u64,
    },
    /// `base[x]/(modulus)`; the modulus is monic, coefficients listed from
    /// the constant term up (leading 1 included).
    QuotientExtension {
        base: Box<RingDescriptor>,
        modulus: Vec<i64>,
    },
    Polynomial {
        base: Box<RingDescriptor>,
    },
    Laurent {
        base: Box<RingDescriptor>,
    },
    PowerSeries {
        base: Box<RingDescriptor>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingDescriptor {
    pub kind: RingKind,
    pub characteristic: u64,
}

impl RingDescriptor {
    pub fn new(kind: RingKind, characteristic: u64) -> Self {
        RingDescriptor { kind, characteristic }
    }

    /// `true` when the ring embeds in a Q-algebra, i.e. has no additive torsion.
    pub fn is_torsion_free(&self) -> bool {
        match &self.kind {
            RingKind::Integers
            | RingKind::Rationals
            | RingKind::LocalizedAt { .. }
            | RingKind::InvertedPrimes { .. } => true,
            RingKind::ModularIntegers { .. } | RingKind::PrimeField { .. } | RingKind::PadicTruncated { .. } => false,
            RingKind::QuotientExtension { base, .. }
            | RingKind::Polynomial { base }
            | RingKind::Laurent { base }
            | RingKind::PowerSeries { base } => base.is_torsion_free(),
        }
    }
}

impl Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            RingKind::Integers => write!(f, "Z"),
            RingKind::Rationals => write!(f, "Q"),
            RingKind::LocalizedAt { prime } => write!(f, "Z_({prime})"),
            RingKind::InvertedPrimes { primes } => {
                let ps: Vec<String> = primes.iter().map(|p| format!("1/{p}")).collect();
                write!(f, "Z[{}]", ps.join(","))
            }
            RingKind::ModularIntegers { modulus } => write!(f, "Z/{modulus}"),
            RingKind::PrimeField { p } => write!(f, "F_{p}"),
            RingKind::PadicTruncated { prime } => write!(f, "Z_{prime}/{prime}^k"),
            RingKind::QuotientExtension { base, modulus } => {
                write!(f, "{base}[x]/({})", format_int_poly(modulus))
            }
            RingKind::Polynomial { base } => write!(f, "{base}[..]"),
            RingKind::Laurent { base } => write!(f, "{base}[..^±1]"),
            RingKind::PowerSeries { base } => write!(f, "{base}[[..]]"),
        }
    }
}

fn format_int_poly(c: &[i64]) -> String {
    let mut parts = Vec::new();
    for (i, &a) in c.iter().enumerate().rev() {
        if a == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        };
        let s = match (a, mono.is_empty()) {
            (1, false) => mono,
            (-1, false) => format!("-{mono}"),
            (_, true) => a.to_string(),
            _ => format!("{a}{mono}"),
        };
        parts.push(s);
    }
    parts.join("+").replace("+-", "-")
}

/// A commutative ring with unit and exact arithmetic.
pub trait Ring:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn descriptor() -> RingDescriptor;

    /// Image of an integer under the unique ring map from Z.
    fn from_bigint(n: &BigInt) -> Self;

    /// Multiplicative inverse, when the element is a unit.
    fn inverse(&self) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    fn characteristic() -> u64 {
        Self::descriptor().characteristic
    }

    fn is_unit(&self) -> bool {
        self.inverse().is_some()
    }

    /// Exact division: `Some(q)` with `q * d == self` when such a `q` exists
    /// and can be found. The default only divides by units.
    fn try_div(&self, d: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        d.inverse().map(|inv| self.mul_ref(&inv))
    }

    /// Division by a nonzero integer, when exact in this ring.
    fn div_int(&self, n: i64) -> Option<Self> {
        self.try_div(&Self::from_int(n))
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    /// Rational value, for rings that embed in Q.
    fn to_rational(&self) -> Option<BigRational> {
        None
    }

    /// Inverse of [`Ring::to_rational`], failing when the fraction is not in the ring.
    fn from_rational(_q: &BigRational) -> Option<Self> {
        None
    }
}

/// A finite ring whose elements can be listed.
pub trait FiniteRing: Ring {
    fn elements() -> Vec<Self>;
}

/// A ring with a division-with-remainder whose norm decreases; enough for
/// Smith-form elimination (Z, fields, discrete valuation rings, Z/p^k).
pub trait EuclideanRing: Ring {
    /// `None` for zero; smaller is "more divisible into".
    fn norm(&self) -> Option<BigUint>;

    /// `(q, r)` with `self = q*d + r` and `r == 0` or `norm(r) < norm(d)`.
    fn div_rem_euclid(&self, d: &Self) -> (Self, Self);
}

/// Sum of a sequence of ring elements.
pub fn sum<R: Ring>(items: impl IntoIterator<Item = R>) -> R {
    items.into_iter().fold(R::zero(), |a, b| a + b)
}
