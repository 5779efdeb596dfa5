use thiserror::Error;

pub type Result<T, E = CliError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] csp_core::Error),

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// Malformed JSON input, with the offending field path and position.
    #[error("schema error: {0}")]
    Schema(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("{0}")]
    Usage(String),
}
