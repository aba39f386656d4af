use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("semantic error: {0}")]
    Semantic(String),

    #[error("degree mixing: {0}")]
    DegreeMixing(String),

    #[error("vector does not lie in the subspace")]
    NotInSubspace,

    /// Two independent routes disagreed. Always a bug or a broken invariant.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
