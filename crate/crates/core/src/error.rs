use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed token {token:?} in braid word")]
    MalformedToken { token: String },
    #[error("zero letter in braid word")]
    ZeroLetter,
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: i64, strands: usize },
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("matrix is not invertible modulo {0}")]
    NotInvertible(u64),
    #[error("degenerate alternating form")]
    DegenerateForm,
    #[error("enumeration limit of {0} elements exceeded")]
    LimitExceeded(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
