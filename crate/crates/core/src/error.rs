use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("C({i},{j}) is too large: {size} elements exceeds the guard of {limit}")]
    TooLarge {
        i: usize,
        j: usize,
        size: u128,
        limit: usize,
    },

    #[error("object {object} is outside the truncation 0..={max}")]
    ObjectOutOfRange { object: usize, max: usize },

    #[error("cannot compose: source of outer morphism is {outer_source}, target of inner is {inner_target}")]
    ObjectMismatch {
        outer_source: usize,
        inner_target: usize,
    },

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("invalid group table: {0}")]
    GroupTable(String),

    /// A computed identity that is a theorem failed. Always a bug in the encodings.
    #[error("{check} violated: {detail}")]
    Violation { check: &'static str, detail: String },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn violation(check: &'static str, detail: impl Into<String>) -> Self {
        Error::Violation {
            check,
            detail: detail.into(),
        }
    }
}
