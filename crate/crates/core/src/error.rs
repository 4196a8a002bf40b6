use thiserror::Error;

use crate::groebner::Interrupted;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("invalid input: {0}")]
    Format(String),
    #[error("{0} is not a prime below 2^32")]
    InvalidPrime(u64),
    #[error("field conversion: {0}")]
    FieldConversion(String),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("zero tensor or zero polynomial has no rank")]
    ZeroInput,
    #[error("degree {0} is below 2")]
    DegreeTooLow(u32),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("line lies inside the hypersurface")]
    LineContained,
    #[error(transparent)]
    Interrupted(#[from] Interrupted),
}
