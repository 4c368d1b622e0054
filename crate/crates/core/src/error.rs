/// Errors shared by all toolkit modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid config: {0}")]
    InvalidConfig(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("degenerate covariance: {0}")]
    DegenerateCovariance(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("degenerate labels: {0}")]
    DegenerateLabels(String),
    #[error("numeric error: {0}")]
    Numeric(String),
    #[error("solver failed: {0}")]
    Solver(String),
    #[error("ill-conditioned weight matrix: {0}")]
    IllConditionedWeight(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
