use thiserror::Error;

use crate::interval::Interval;
use crate::snake::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("interval {iv} is not well formed at rank {n}")]
    MalformedInterval { iv: Interval, n: u32 },
    #[error("rank must be positive")]
    ZeroRank,
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(u32, u32),
    #[error("{iv} is a boundary interval at rank {n} and has no root")]
    BoundaryRoot { iv: Interval, n: u32 },
    #[error("pair ({a}, {b}) is not connected with increasing lower endpoints")]
    NotConnected { a: Interval, b: Interval },
    #[error("negative exponent {exp} at {iv}")]
    NegativeExponent { iv: Interval, exp: i64 },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid snake: {}", fmt_violations(.0))]
    InvalidSnake(Vec<Violation>),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("inequality chain violated at index {index}: {what}")]
    Chain { index: usize, what: String },
    #[error("snake is not stable")]
    NotStable,
    #[error("rank {n} is too small, need at least {need}")]
    RankTooSmall { n: u32, need: u32 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("coefficient overflow")]
    Overflow,
    #[error("json: {0}")]
    Json(String),
}

fn fmt_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

impl Error {
    /// True when the input was well formed but lies outside the range
    /// where the requested computation is defined.
    pub fn is_refusal(&self) -> bool {
        matches!(
            self,
            Error::NotStable | Error::RankTooSmall { .. } | Error::Unsupported(_) | Error::Precondition(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
