use thiserror::Error;

use crate::words::Rank;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {gen} out of range for {ambient}")]
    IndexOutOfRange { gen: u32, ambient: Rank },

    #[error("ambient mismatch: expected {expected}, found {found}")]
    AmbientMismatch { expected: Rank, found: Rank },

    #[error("invalid rank {0}: ranks start at 1")]
    InvalidRank(u64),

    #[error("rank {0} is not supported here (finite rank required)")]
    InfiniteRank(Rank),

    #[error("index {name}={value} outside 1..={bound}")]
    ParameterOutOfRange {
        name: &'static str,
        value: u32,
        bound: u32,
    },

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
