use thiserror::Error;

use crate::ring::RingId;

/// Errors produced by the arithmetic and ideal-theoretic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("{op} is not supported over {ring}")]
    UnsupportedRing { op: &'static str, ring: RingId },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid basis index {0} (must be >= 1)")]
    InvalidIndex(usize),
    #[error("index out of range: k = {k}, n = {n}")]
    IndexOutOfRange { n: usize, k: usize },
    #[error("bad modulus {modulus}: {reason}")]
    BadModulus { modulus: String, reason: String },
    #[error("nilpotency budget of {0} iterations exceeded")]
    NilpotencyBudgetExceeded(usize),
    #[error("the divided-factorial transform needs characteristic 0, got {0}")]
    CharPUnsupported(RingId),
    #[error("{value} is not an element of {ring}")]
    NotInRing { value: String, ring: RingId },
    #[error("coefficient at index {index} is not in {ring}")]
    NotInTargetRing { index: usize, ring: RingId },
    #[error("division by zero")]
    DivisionByZero,
    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
    #[error("constant polynomial")]
    ConstantPolynomial,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not in Gamma (Hurwitz degree must be >= 1)")]
    NotInGamma,
    #[error("input is a unit")]
    UnitInput,
    #[error("ideal is not prime")]
    NotPrimeIdeal,
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
