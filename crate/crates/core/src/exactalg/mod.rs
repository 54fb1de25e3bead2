//! Exact coefficient rings and truncated power-series arithmetic.

pub mod ext;
pub mod lift;
pub mod linalg;
pub mod padic;
pub mod poly;
pub mod powerseries;
pub mod ring;
pub mod scalars;
pub mod series;
pub mod weierstrass;

pub use ext::{Cubic8, Cyclotomic, Ext, ExtModulus, Omega};
pub use lift::QLift;
pub use linalg::{smith, F2Matrix, Matrix, Smith};
pub use padic::Padic;
pub use poly::{LaurentPoly, MPoly, Var, WeightedPoly};
pub use powerseries::PowerSeries;
pub use ring::{sum, EuclideanRing, FiniteRing, Ring, RingDescriptor, RingKind};
pub use scalars::{lift_zmod, InvertedPrime, LocalInt, Zmod};
pub use series::{series_compose, series_reverse, TruncSeries};
pub use weierstrass::{weierstrass_divide, weierstrass_prepare, Prepared};
