use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("closed form only available for k = 1 or k = 2, got k = {k}")]
    UnsupportedClosedForm { k: usize },

    #[error("index {k} out of range for row n = {n}")]
    Index { n: usize, k: usize },

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("oracle refused n = {n}: above bound {bound} ({reason})")]
    Resource {
        n: usize,
        bound: usize,
        reason: &'static str,
    },

    #[error("sequences have mismatched lengths {0:?}")]
    Shape(Vec<usize>),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("cache line {line}: {msg}")]
    Cache { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
