use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("empty block label at position {pos}")]
    EmptyLabel { pos: usize },

    #[error("arity mismatch: {lower} lower points cannot be glued to {upper} upper points")]
    ArityMismatch { lower: usize, upper: usize },

    #[error("cannot rotate: the {0} row is empty")]
    EmptyRow(&'static str),

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("expected a partition without upper points, found {0} upper points")]
    UpperPointsPresent(usize),

    #[error("position {position} out of range for a word of length {len}")]
    OutOfRange { position: usize, len: usize },

    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("unknown tag `{0}`")]
    UnknownTag(String),

    #[error("bound {bound} is too small for a generator with {size} points")]
    BoundTooSmall { bound: usize, size: usize },

    #[error("word length {len} exceeds the cap of {cap} points")]
    LengthCap { len: usize, cap: usize },

    #[error("size budget exceeded: {rows} rows requested, budget is {budget}")]
    SizeBudget { rows: usize, budget: usize },

    #[error("document error: {0}")]
    Document(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
