use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what}: size {size} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("graph contains a directed cycle")]
    NotAcyclic,

    #[error("graph is not bipartite: {0}")]
    NotBipartite(String),

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("not a cycle of the graph: {0}")]
    NotACycle(String),

    #[error("invalid set composition: {0}")]
    InvalidSetComposition(String),

    #[error("invalid descent-starred permutation: {0}")]
    InvalidDStar(String),

    #[error("graph is not a forest")]
    NotAForest,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("basis mismatch: {0}")]
    BasisMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
