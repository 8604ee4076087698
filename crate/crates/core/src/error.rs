use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("configuration has rank {rank}, expected {expected}")]
    Rank { rank: usize, expected: usize },

    #[error("orientation undefined: {0}")]
    Orientation(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("simplex pivot limit of {0} reached")]
    PivotLimit(usize),

    /// A cross-check between two routes that must agree did not. This is a
    /// bug (or a counterexample to a theorem), never a property of the data.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
