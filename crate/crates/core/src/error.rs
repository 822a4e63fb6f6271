use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at column {col}: {msg}")]
    Parse { col: usize, msg: String },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("interval endpoint {0} is a root")]
    EndpointRoot(String),
    #[error("infinite critical set: {0}")]
    InfiniteCriticalSet(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("radius not certified: {0}")]
    RadiusNotCertified(String),
    #[error("unstable result: {0}")]
    Unstable(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}

pub type Result<T> = std::result::Result<T, Error>;
