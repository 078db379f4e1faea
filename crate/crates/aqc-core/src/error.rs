use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Precondition,
    Budget,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unsupported size: {0}")]
    Unsupported(String),
    #[error("gcd({n}, {q}) != 1")]
    NotCoprime { n: u64, q: u64 },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("containment precondition failed: {0}")]
    NotSubcode(String),
    #[error("operation undefined on the zero code")]
    ZeroCode,
    #[error("invalid weight distribution: {0}")]
    InvalidDistribution(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Budget(_) => ErrorKind::Budget,
            _ => ErrorKind::Precondition,
        }
    }
}
