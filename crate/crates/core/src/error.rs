use thiserror::Error;

/// Syntax or semantic failure while reading a polynomial or degree string.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(pos: usize, msg: impl Into<String>) -> Self {
        ParseError {
            pos,
            msg: msg.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("denominator exponent must be non-negative, got {0}")]
    NegativeDenominatorExponent(i64),
    #[error("mixed primes {0} and {1}")]
    PrimeMismatch(u64, u64),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("grade too small for degree {degree} at grade {grade}")]
    GradeTooSmall { degree: String, grade: u32 },
    #[error("degree {0} is out of range: {1}")]
    DegreeOutOfRange(String, &'static str),
    #[error("indeterminate: infinity minus infinity")]
    IndeterminateInfinity,
    #[error("indeterminate: infinity times zero")]
    IndeterminateProduct,
    #[error("horizon mismatch: {0} vs {1}")]
    HorizonMismatch(u32, u32),
    #[error("grade {0} lies beyond the materialized horizon")]
    BeyondHorizon(u32),
    #[error("cohomological index {index} is not strictly between 0 and {n}")]
    NotMiddleIndex { index: usize, n: usize },
    #[error("dimension {0} exceeds the cap of {1}")]
    DimensionCap(usize, usize),
    #[error("expected {expected} entries, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("replacement is not a monomial with coefficient 1 or -1")]
    NonMonomial,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("negative exponent where a polynomial was required")]
    NegativeExponent,
    #[error("exponent overflow")]
    Overflow,
    #[error("origin is not on the curve")]
    OriginNotOnCurve,
    #[error("fuel exhausted after {0} reduction steps")]
    FuelExhausted(usize),
    #[error("degree {d} too small, need at least {min}")]
    BezoutDegreeTooSmall { d: String, min: u64 },
    #[error("cech complex is not a complex: {0}")]
    NotAComplex(String),
    #[error("quotient dimension not stable below cap {0}")]
    CapExceeded(usize),
}

impl Error {
    /// Errors caused by malformed input rather than by the computation itself.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::NotPrime(_)
                | Error::NegativeDenominatorExponent(_)
                | Error::Parse(_)
                | Error::Arity { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
