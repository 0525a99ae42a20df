use thiserror::Error;

/// Errors surfaced by parsing, validation, and the operations whose
/// preconditions can fail.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("operation requires exactly two copies of each value, found k={0}")]
    NeedsTwoCopies(usize),

    #[error("word is not nonnesting: the copy subsequences differ")]
    NotNonnesting,

    #[error("size mismatch: permutation has length {sigma}, path has semilength {path}")]
    SizeMismatch { sigma: usize, path: usize },

    #[error("values {0} and {1} are adjacent in the underlying permutation")]
    AdjacentValues(u32, u32),

    #[error("word is not in the expected class: wanted underlying permutation {expected}, found {found}")]
    ClassMismatch { expected: String, found: String },

    #[error("descent set is empty")]
    EmptyDescentSet,

    #[error("descent position {0} out of range 1..={1}")]
    DescentOutOfRange(usize, usize),

    #[error("enumerating {needed} objects exceeds the cap of {cap}")]
    CapExceeded { needed: String, cap: u64 },

    #[error("reversal degree {degree} smaller than actual degree {actual}")]
    DegreeTooSmall { degree: u32, actual: u32 },

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
