use thiserror::Error;

use logmap_core::Error as CoreError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 0 success, 1 verification or output failure, 2 usage, 3 numerical.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(e) => match e {
                CoreError::Domain { .. } | CoreError::Parameter { .. } | CoreError::Parse { .. } => 2,
                CoreError::NonConvergence { .. }
                | CoreError::Resource { .. }
                | CoreError::Integrity(_)
                | CoreError::EmptySample
                | CoreError::DegenerateOrbit(_) => 3,
            },
            CliError::VerificationFailed(_) | CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => 1,
        }
    }
}
