//! CLI error type mapping onto the documented exit codes.

/// Everything that can go wrong, split by exit code: configuration problems
/// (bad flags, bad config file, unwritable output) exit with 2, while
/// numerical-domain errors surfaced by the library exit with 3.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Invalid configuration or I/O problem with the requested output.
    #[error("config error: {0}")]
    Config(String),
    /// The requested parameters are outside the computable domain.
    #[error("numerical-domain error: {0}")]
    Domain(String),
}

impl CliError {
    /// Process exit code for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}

impl From<bathtag::Error> for CliError {
    fn from(err: bathtag::Error) -> Self {
        CliError::Domain(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
