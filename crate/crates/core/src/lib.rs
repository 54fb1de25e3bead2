//! Exact algebra for elliptic curves with level-3 structure, their formal
//! groups, the mod-2 Steenrod algebra and related Tor computations.

pub mod bptheory;
pub mod elliptic;
pub mod error;
pub mod exactalg;
pub mod fgl;
pub mod kforms;
pub mod moduli;
pub mod steenrod;

pub use error::{Error, Result};

use num_bigint::BigInt;
use num_rational::BigRational;

/// The integers.
pub type Z = BigInt;
/// The rationals.
pub type Q = BigRational;
/// Integers localized at 2.
pub type Z2Local = exactalg::LocalInt<2>;
/// Integers with 3 inverted.
pub type Z13 = exactalg::InvertedPrime<3>;
/// The field with two elements.
pub type F2 = exactalg::Zmod<2>;
/// The field with four elements, F_2[w]/(w^2+w+1).
pub type F4 = exactalg::Ext<F2, exactalg::Omega>;
/// The field with eight elements.
pub type F8 = exactalg::Ext<F2, exactalg::Cubic8>;
/// Z[1/3][w] with w a primitive cube root of unity.
pub type Z13Omega = exactalg::Ext<Z13, exactalg::Omega>;
/// 2-adic integers to a carried precision.
pub type Z2Adic = exactalg::Padic<2>;
/// Power series in b over the 2-adic integers, both truncated.
pub type Z2AdicSeries = exactalg::PowerSeries<Z2Adic>;
