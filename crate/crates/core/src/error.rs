use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error("inadmissible Cartan factor {0}")]
    InadmissibleType(String),
    #[error("weight has {got} coordinates, expected {expected}")]
    WeightLength { got: usize, expected: usize },
    #[error("weight {0} is not dominant integral")]
    NotDominant(String),
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("{0} is not a root")]
    NotARoot(String),
    #[error("resource guard exceeded: {0}")]
    Guard(String),
    #[error("unknown symmetric pair {query}; catalog entries for {g}: {nearest}")]
    UnknownPair {
        query: String,
        g: String,
        nearest: String,
    },
    #[error("catalog error: {0}")]
    Catalog(String),
    #[error("involution error: {0}")]
    Involution(String),
    #[error("subalgebra error: {0}")]
    Subalgebra(String),
    #[error("no generic element found after {0} attempts")]
    Genericity(usize),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("invalid query: {0}")]
    Query(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
