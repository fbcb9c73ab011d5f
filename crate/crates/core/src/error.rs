//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("supplied modulus of degree {degree} is reducible")]
    ReducibleModulus { degree: usize },

    #[error("field order {order} exceeds the configured cap {cap}")]
    FieldTooLarge { order: u64, cap: u64 },

    #[error("degree must be at least 1")]
    ZeroDegree,

    #[error("elements belong to different field towers")]
    MixedTowers,

    #[error("division by zero in the field")]
    DivisionByZero,

    #[error("set of elements is linearly dependent over the subfield")]
    DependentSet,

    #[error("subfield degree {d} does not divide extension degree {t}")]
    SubfieldDegree { d: usize, t: usize },

    #[error("evaluation points are not distinct")]
    DuplicatePoints,

    #[error("code dimension k={k} out of range for length n={n}")]
    BadDimension { k: usize, n: usize },

    #[error("code length n={n} exceeds field order {order}")]
    LengthExceedsField { n: usize, order: u64 },

    #[error("message has {got} coefficients, expected {expected}")]
    WrongMessageLength { expected: usize, got: usize },

    #[error("check polynomial degree {deg} exceeds maximum r-1 = {max}")]
    CheckDegreeTooHigh { deg: usize, max: usize },

    #[error("construction requires r = n - k >= {required}, got r = {actual}")]
    RedundancyTooSmall { required: u64, actual: usize },

    #[error("construction requires q = 2, field has q = {q}")]
    BinaryBaseRequired { q: u64 },

    #[error("subspace dimension s={s} must satisfy 1 <= s < t = {t}")]
    BadSubspaceDim { s: usize, t: usize },

    #[error("erased point is not one of the code's evaluation points")]
    PointNotInCode,

    #[error("element must be nonzero")]
    ZeroElement,

    #[error("scheme is invalid: check evaluations at the erased point have rank {rank}, need {need}")]
    InvalidScheme { rank: usize, need: usize },

    #[error("repair produced a wrong symbol (scheme or codeword inconsistent)")]
    RepairMismatch,

    #[error("parameter out of range: {0}")]
    ParamRange(String),

    #[error("problem size exceeds the search cap ({detail})")]
    ScaleCap { detail: String },

    #[error("invalid serialized data: {0}")]
    BadData(String),
}

pub type Result<T> = std::result::Result<T, Error>;
