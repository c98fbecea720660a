use hybridk::HybridError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Solver(#[from] HybridError),
}

impl CliError {
    /// Process exit status: 2 for malformed input, 3 for infeasible
    /// requests, 4 for exhausted budgets.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } | CliError::Io { .. } => 2,
            CliError::Solver(e) => match e {
                HybridError::InvalidInput(_) | HybridError::DimensionMismatch { .. } => 2,
                HybridError::Infeasible(_) | HybridError::Regime(_) | HybridError::NoCandidates => 3,
                HybridError::Budget { .. } => 4,
            },
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
