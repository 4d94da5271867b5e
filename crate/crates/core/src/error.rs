use thiserror::Error;

/// Errors raised by the exact algebra and the constructions built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("not divisible")]
    NotDivisible,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("sequence {0:?} is not strictly decreasing")]
    NotStrictlyDecreasing(Vec<u32>),
    #[error("invalid index sequence {0:?}")]
    InvalidIndices(Vec<usize>),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid interval [{lo}, {hi}]: need lo < hi")]
    InvalidInterval { lo: String, hi: String },
    #[error("basis is linearly dependent")]
    LinearlyDependent,
    #[error("polynomial is not in the span of the basis")]
    NotInSpan,
    #[error("block partition {0:?} does not sum to the matrix size")]
    BadPartition(Vec<usize>),
    #[error("Hankel LMI needs an even number of coordinates, got {0}")]
    OddDimension(usize),
    #[error("supporting face is not defined over the rationals")]
    IrrationalFace,
    #[error("could not certify the rank of the zero conditions")]
    Undetermined,
    #[error("certificate does not reconstruct the polynomial")]
    CertificateMismatch,
    #[error("cannot parse '{token}': {reason}")]
    Parse { token: String, reason: String },
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
