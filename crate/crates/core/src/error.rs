use thiserror::Error;

/// Errors raised by the exact-arithmetic, series, triangle and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("series not invertible")]
    SeriesNotInvertible,
    #[error("inner series must have zero constant term")]
    NonzeroConstantTerm,
    #[error("invalid lower parameter")]
    InvalidLowerParameter,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("insufficient values: need {needed}, got {got}")]
    InsufficientValues { needed: usize, got: usize },
    #[error("insufficient series order")]
    InsufficientSeriesOrder,
    #[error("unknown identity: {0}")]
    UnknownIdentity(String),
    #[error("empty parameter range for {0}")]
    EmptyRange(String),
    #[error("no failure to explain")]
    NoFailure,
}

pub type Result<T> = std::result::Result<T, Error>;
