//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("order must be at least 2, got {0}")]
    OrderTooSmall(usize),
    #[error("residue {residue} is outside 1..={max} for order {n}")]
    ResidueOutOfRange { residue: usize, max: usize, n: usize },
    #[error("order {0} must be even for this operation")]
    OddOrder(usize),
    #[error("generator {0} equals n/2, which this operation excludes")]
    SelfInverseGenerator(usize),
    #[error("orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("{0}")]
    ParamOutOfRange(String),
    #[error("{0} is not an odd prime")]
    NotOddPrime(usize),
    #[error("first row of a squared adjacency matrix must satisfy row[j] = row[n-j]")]
    AsymmetricSquareRow,
    #[error("row of a squared adjacency matrix decodes to an invalid connection set")]
    InvalidSquareRow,
    #[error("sign could not be certified within the precision cap of {cap} bits")]
    PrecisionExhausted { cap: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
