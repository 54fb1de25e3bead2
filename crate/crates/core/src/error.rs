use thiserror::Error;

/// Errors raised by the algebraic routines of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition error: {0}")]
    Composition(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("Weierstrass preparation failed: {0}")]
    PreparationFailed(String),
    #[error("variable sets differ: {0}")]
    VariableMismatch(String),
    #[error("invalid localization: {0}")]
    InvalidLocalization(String),
    #[error("j-invariant undefined: discriminant is not a unit")]
    JUndefined,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("curve is not nodal: {0}")]
    NotNodal(String),
    #[error("p-series vanishes to the working precision {0}")]
    HeightExceedsPrecision(usize),
    #[error("base ring has torsion; logarithm needs a torsion-free Q-algebra")]
    NeedsTorsionFree,
    #[error("integrality failure: {0}")]
    IntegralityFailure(String),
    #[error("formal group is not ordinary (height {0:?})")]
    NotOrdinary(Option<usize>),
    #[error("invalid kernel polynomial: {0}")]
    InvalidKernel(String),
    #[error("quotient precision error: {0}")]
    QuotientPrecision(String),
    #[error("not a Frobenius lift: {0}")]
    NotAFrobeniusLift(String),
    #[error("recognition failed: {0}")]
    RecognitionFailed(String),
    #[error("degree bound too small: {0}")]
    Truncation(String),
    #[error("freeness violated in degree {0}")]
    FreenessViolation(usize),
    #[error("no transformation found: {0}")]
    Mismatch(String),
    #[error("invalid formal group law: {0}")]
    InvalidFgl(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
