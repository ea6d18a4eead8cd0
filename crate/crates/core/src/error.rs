use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("kind mismatch: cannot combine {left} with {right}")]
    KindMismatch { left: &'static str, right: &'static str },

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("coordinate index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("expected pure degree {expected}, found {found}")]
    Degree { expected: usize, found: String },

    #[error("expected a sum of single letters, found a word of length {0}")]
    WordLength(usize),

    #[error("empty word: the coalgebra has no unit")]
    EmptyWord,

    #[error("input is not closed: d({form}) = {differential}")]
    NotClosed { form: String, differential: String },

    #[error("operator does not strictly lower word length")]
    NotLengthLowering,

    #[error("operator has no declared bidegree")]
    MissingBidegree,

    #[error("invalid Poisson structure: {0}")]
    InvalidStructure(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
