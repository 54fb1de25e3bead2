//! Involutions on free modules and `C_2` cohomology.

use num_traits::One;

use crate::bptheory::{columns, preimage, subquotient, ModuleShape};
use crate::error::{Error, Result};
use crate::exactalg::{smith, EuclideanRing, Ext, InvertedPrime, Matrix, Omega, Ring};

pub type Z13 = InvertedPrime<3>;
pub type Z13Omega = Ext<Z13, Omega>;

/// A free module `T` over the fixed ring with an involution `sigma`.
#[derive(Clone, Debug)]
pub struct GaloisModule<R: EuclideanRing> {
    pub basis: Vec<String>,
    /// Column `j` is `sigma(e_j)`.
    pub sigma: Matrix<R>,
}

impl<R: EuclideanRing> GaloisModule<R> {
    pub fn new(basis: &[&str], sigma: Matrix<R>) -> Result<Self> {
        let n = basis.len();
        if sigma.rows != n || sigma.cols != n {
            return Err(Error::InvalidArgument(format!("sigma is {}x{}, basis has {n}", sigma.rows, sigma.cols)));
        }
        if sigma.mul(&sigma) != Matrix::identity(n) {
            return Err(Error::InvalidArgument("sigma is not an involution".into()));
        }
        Ok(GaloisModule { basis: basis.iter().map(|s| s.to_string()).collect(), sigma })
    }

    /// Rank one with trivial action.
    pub fn trivial() -> Self {
        GaloisModule { basis: vec!["1".into()], sigma: Matrix::identity(1) }
    }

    fn rank(&self) -> usize {
        self.basis.len()
    }

    fn shifted(&self, c: R) -> Matrix<R> {
        let mut m = self.sigma.clone();
        for i in 0..self.rank() {
            m.set(i, i, m.get(i, i).add_ref(&c));
        }
        m
    }

    /// `sigma - 1`.
    pub fn sigma_minus_one(&self) -> Matrix<R> {
        self.shifted(-R::one())
    }

    /// The norm `1 + sigma`.
    pub fn norm(&self) -> Matrix<R> {
        self.shifted(R::one())
    }

    /// Basis of `{x : sigma(x) = sign * x}`.
    pub fn eigenspace(&self, sign: i64) -> Vec<Vec<R>> {
        smith(&self.shifted(-R::from_int(sign))).kernel()
    }

    pub fn c2_cohomology(&self) -> C2Cohomology<R> {
        let n = self.rank();
        let s1 = self.sigma_minus_one();
        let nm = self.norm();
        let zero = Matrix::zeros(n, 0);
        let h = |a: &Matrix<R>, b: &Matrix<R>| {
            let z = columns(n, &preimage(n, a, &zero));
            let im = columns(n, &(0..b.cols).map(|j| b.column(j)).collect::<Vec<_>>());
            subquotient(&z, &im).expect("subquotient of submodules")
        };
        C2Cohomology { h0: h(&s1, &Matrix::zeros(n, 0)), h1: h(&nm, &s1), h2: h(&s1, &nm) }
    }
}

/// `H^0`, and `H^1`, `H^2` of the 2-periodic resolution.
#[derive(Clone, Debug)]
pub struct C2Cohomology<R: Ring> {
    pub h0: ModuleShape<R>,
    pub h1: ModuleShape<R>,
    pub h2: ModuleShape<R>,
}

/// `sigma(a + b w) = a + b w^2 = (a - b) - b w`.
pub fn conjugate(x: &Z13Omega) -> Z13Omega {
    let (a, b) = (x.coeff(0).clone(), x.coeff(1).clone());
    Z13Omega::new(vec![a - b.clone(), -b])
}

/// `Z[1/3][w]` over `Z[1/3]` with basis `1, w`.
pub fn omega_module() -> GaloisModule<Z13> {
    let mut s = Matrix::zeros(2, 2);
    let w2 = conjugate(&Z13Omega::generator());
    s.set(0, 0, Z13::one());
    s.set(0, 1, w2.coeff(0).clone());
    s.set(1, 1, w2.coeff(1).clone());
    GaloisModule { basis: vec!["1".into(), "w".into()], sigma: s }
}

/// `sqrt(-3) = 1 + 2w`.
pub fn sqrt_minus_three() -> Z13Omega {
    Z13Omega::one() + Z13Omega::from_int(2) * Z13Omega::generator()
}

/// Coordinates in the basis `1, w`.
pub fn coords(x: &Z13Omega) -> Vec<Z13> {
    vec![x.coeff(0).clone(), x.coeff(1).clone()]
}

pub fn from_coords(v: &[Z13]) -> Z13Omega {
    Z13Omega::new(v.to_vec())
}

/// Whether `sigma` is a ring map on the given elements.
pub fn conjugation_is_ring_map(xs: &[Z13Omega]) -> bool {
    xs.iter().all(|a| {
        xs.iter().all(|b| {
            conjugate(&a.mul_ref(b)) == conjugate(a).mul_ref(&conjugate(b))
                && conjugate(&(a.clone() + b.clone())) == conjugate(a) + conjugate(b)
        }) && conjugate(&conjugate(a)) == *a
    })
}

/// Whether `b^2 - 4c` is a unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormClass {
    FormOfGm,
    Degenerate,
}

pub fn discriminant_classification<R: Ring>(b: &R, c: &R) -> FormClass {
    let d = b.mul_ref(b) - R::from_int(4).mul_ref(c);
    if d.is_unit() {
        FormClass::FormOfGm
    } else {
        FormClass::Degenerate
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Zmod;
    use num_bigint::BigInt;
    use num_traits::Zero;

    #[test]
    fn eigenspaces_of_omega() {
        let t = omega_module();
        let plus = t.eigenspace(1);
        assert_eq!(plus.len(), 1);
        assert!(plus[0][1].is_zero() && plus[0][0].is_unit());
        let minus = t.eigenspace(-1);
        assert_eq!(minus.len(), 1);
        let v = from_coords(&minus[0]);
        let ratio = v.try_div(&sqrt_minus_three()).unwrap();
        assert!(ratio.as_base().is_some_and(|r| r.is_unit()));
    }

    #[test]
    fn galois_cohomology_vanishes() {
        let c = omega_module().c2_cohomology();
        assert!(c.h1.is_zero() && c.h2.is_zero());
        assert_eq!(c.h0.free_rank, 1);
    }

    #[test]
    fn contrast_cases() {
        let z = GaloisModule::<BigInt>::trivial().c2_cohomology();
        assert!(z.h1.is_zero());
        assert_eq!(z.h2.torsion, vec![BigInt::from(2)]);
        let f2 = GaloisModule::<Zmod<2>>::trivial().c2_cohomology();
        assert_eq!(f2.h1.generators(), 1);
    }

    #[test]
    fn conjugation_respects_ring_structure() {
        let w = Z13Omega::generator();
        let xs = vec![w.clone(), sqrt_minus_three(), Z13Omega::from_int(5) + w.clone() * w, Z13Omega::one()];
        assert!(conjugation_is_ring_map(&xs));
    }

    #[test]
    fn discriminants() {
        assert_eq!(discriminant_classification(&Z13::from_int(3), &Z13::from_int(3)), FormClass::FormOfGm);
        assert_eq!(discriminant_classification(&BigInt::from(3), &BigInt::from(3)), FormClass::Degenerate);
        assert_eq!(discriminant_classification(&BigInt::from(1), &BigInt::from(0)), FormClass::FormOfGm);
    }
}
