use thiserror::Error;

/// Errors raised by the exact-arithmetic layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("division by a series with zero constant term")]
    ZeroConstantTerm,

    #[error("{op}: constant term must be {expected}, got {actual}")]
    ConstantTerm {
        op: &'static str,
        expected: &'static str,
        actual: String,
    },

    #[error("series is not invertible under composition: linear coefficient is zero")]
    ZeroSlope,

    #[error("not normalized: {0}")]
    Normalization(String),

    #[error("matrix dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("matrix is not invertible: zero on the diagonal at row {0}")]
    Singular(usize),

    #[error("matrix does not fit a lower-Hessenberg band: nonzero at ({0}, {1})")]
    BandViolation(usize, usize),

    #[error("insufficient data: need {needed}, have {available}")]
    InsufficientData { needed: usize, available: usize },

    #[error("vanishing Hankel determinant at level {0}; continued fraction terminates early")]
    VanishingHankel(usize),

    #[error("unknown id `{0}`")]
    UnknownId(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
