use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("invalid vector set: {0}")]
    InvalidVectorSet(String),

    #[error("invalid context {context:?}: {reason}")]
    InvalidContext { context: Vec<usize>, reason: String },

    #[error("the KS property is undefined for an empty context list")]
    EmptyContexts,

    #[error("vertex {vertex} is not a member of context {context}")]
    NotInContext { vertex: usize, context: usize },

    #[error("vectors {0} and {1} are not orthogonal")]
    NotOrthogonal(usize, usize),

    #[error("the canonical basis is not a context of the supplied set")]
    CanonicalBasisMissing,

    #[error("matrix is not unitary within tolerance (deviation {deviation:e} > {tolerance:e})")]
    NonUnitary { deviation: f64, tolerance: f64 },

    #[error("search budget exceeded: {what} ({requested} > {limit}); {advice}")]
    BudgetExceeded {
        what: &'static str,
        requested: u64,
        limit: u64,
        advice: &'static str,
    },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("{0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
