use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    #[error("alpha must exceed -1, got {0}")]
    AlphaOutOfRange(String),
    #[error("index precondition violated: {0}")]
    Index(String),
    #[error("beta must be at least 1, got {0}")]
    InvalidBeta(u32),
    #[error("unknown operator kind {0:?}")]
    UnknownOperator(String),
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("zero polynomial has no roots to count")]
    ZeroPolynomial,
    #[error("empty interval ({lo}, {hi}]")]
    EmptyInterval { lo: String, hi: String },
    #[error("antidifference does not vanish at infinity")]
    NotVanishing,
    #[error("summand is not s(k) - s(k+1)")]
    NotTelescoping,
    #[error("rational function has a pole at {0}")]
    Pole(String),
    #[error(
        "determinant numerator for S_{n} differs from the stored reference at coefficient {index}"
    )]
    CoefficientMismatch { n: usize, index: usize },
    #[error("determinant denominator for S_{n} differs from the stored reference")]
    DenominatorMismatch { n: usize },
}
