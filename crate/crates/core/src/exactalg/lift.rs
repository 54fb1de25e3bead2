//! Embeddings of torsion-free rings into Q-algebras.

use std::cell::Cell;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ext::{Ext, ExtModulus};
use super::poly::MPoly;
use super::ring::Ring;
use super::scalars::{InvertedPrime, LocalInt};

/// A torsion-free ring together with a Q-algebra containing it.
pub trait QLift: Ring {
    type Lift: Ring;

    fn lift(&self) -> Self::Lift;

    /// Inverse of [`QLift::lift`] on its image; `None` when the element of
    /// the Q-algebra does not lie in this ring.
    fn lower(l: &Self::Lift) -> Option<Self>;
}

impl QLift for BigInt {
    type Lift = BigRational;
    fn lift(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
    fn lower(l: &BigRational) -> Option<Self> {
        l.is_integer().then(|| l.to_integer())
    }
}

impl QLift for BigRational {
    type Lift = BigRational;
    fn lift(&self) -> BigRational {
        self.clone()
    }
    fn lower(l: &BigRational) -> Option<Self> {
        Some(l.clone())
    }
}

impl<const P: u64> QLift for LocalInt<P> {
    type Lift = BigRational;
    fn lift(&self) -> BigRational {
        self.value().clone()
    }
    fn lower(l: &BigRational) -> Option<Self> {
        LocalInt::new(l.clone()).ok()
    }
}

impl<const P: u64> QLift for InvertedPrime<P> {
    type Lift = BigRational;
    fn lift(&self) -> BigRational {
        self.value().clone()
    }
    fn lower(l: &BigRational) -> Option<Self> {
        InvertedPrime::new(l.clone()).ok()
    }
}

impl<R: QLift> QLift for MPoly<R> {
    type Lift = MPoly<R::Lift>;
    fn lift(&self) -> MPoly<R::Lift> {
        self.map_coeffs(QLift::lift)
    }
    fn lower(l: &MPoly<R::Lift>) -> Option<Self> {
        let bad = Cell::new(false);
        let out = l.map_coeffs(|c| {
            R::lower(c).unwrap_or_else(|| {
                bad.set(true);
                R::zero()
            })
        });
        (!bad.get()).then_some(out)
    }
}

impl<R: QLift, M: ExtModulus> QLift for Ext<R, M> {
    type Lift = Ext<R::Lift, M>;
    fn lift(&self) -> Ext<R::Lift, M> {
        Ext::new(self.coeffs().iter().map(QLift::lift).collect())
    }
    fn lower(l: &Ext<R::Lift, M>) -> Option<Self> {
        let c: Option<Vec<R>> = l.coeffs().iter().map(R::lower).collect();
        c.map(Ext::new)
    }
}
