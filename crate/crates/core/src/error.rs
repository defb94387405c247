use thiserror::Error;

pub type Result<T> = std::result::Result<T, ZcpError>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZcpError {
    #[error("invalid character {ch:?} at position {position}; only '+' and '-' are allowed")]
    InvalidCharacter { ch: char, position: usize },

    #[error("sequences must have at least one element")]
    EmptySequence,

    #[error("unequal lengths; profile undefined ({first} vs {second})")]
    LengthMismatch { first: usize, second: usize },

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("result would be empty")]
    WouldBeEmpty,

    #[error("seed lengths must be (N, N+1); got ({a}, {b})")]
    SeedLengths { a: usize, b: usize },

    #[error("tree depth must be at least {min}; got {depth}")]
    InvalidDepth { depth: u32, min: u32 },

    #[error("tree index {index} out of range for depth {depth} (must be < 2^{depth})")]
    InvalidTreeIndex { depth: u32, index: u64 },

    #[error("{0} is not of the form 2^a 10^b 26^c")]
    NotGolayNumber(u64),

    #[error("{0}")]
    InvalidParameter(String),

    #[error("product element {value} at position {position} is not +1 or -1")]
    NonBinaryOutput { position: usize, value: i32 },

    #[error("oversampling factor must be at least 2; got {0}")]
    Oversampling(usize),

    #[error("checkpoint: {0}")]
    Checkpoint(String),
}
