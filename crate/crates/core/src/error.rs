use thiserror::Error;

pub type Result<T> = std::result::Result<T, HybridError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HybridError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// An exhaustive search would exceed its configured budget. Nothing was
    /// approximated; the caller must coarsen or shrink the problem.
    #[error("budget exceeded: {what} needs {required} evaluations, budget is {budget}")]
    Budget {
        what: &'static str,
        required: u128,
        budget: u128,
    },

    #[error("infeasible: {0}")]
    Infeasible(String),

    /// The input falls outside the regime an operation assumes.
    #[error("regime precondition not met: {0}")]
    Regime(String),

    #[error("no candidate solution was generated")]
    NoCandidates,
}

impl HybridError {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        HybridError::InvalidInput(msg.into())
    }
}
