//! CLI error taxonomy, mapped onto exit codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad or missing configuration, including referenced paths that do not
    /// exist. Exit code 1.
    #[error("config error: {0}")]
    Config(String),
    /// Problems with the data itself: unreadable documents, single-class
    /// matrices, malformed manifests. Exit code 2.
    #[error("data error: {0}")]
    Data(String),
    /// Unexpected failures (I/O on outputs, internal invariants). Exit
    /// code 3.
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 1,
            CliError::Data(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl From<gibnet::learn::LearnError> for CliError {
    fn from(e: gibnet::learn::LearnError) -> Self {
        CliError::Data(e.to_string())
    }
}

impl From<gibnet::corpus::CorpusError> for CliError {
    fn from(e: gibnet::corpus::CorpusError) -> Self {
        CliError::Data(e.to_string())
    }
}

impl From<gibnet::corpus::GrammarError> for CliError {
    fn from(e: gibnet::corpus::GrammarError) -> Self {
        CliError::Data(e.to_string())
    }
}

impl From<gibnet::metrics::FeatureCsvError> for CliError {
    fn from(e: gibnet::metrics::FeatureCsvError) -> Self {
        CliError::Data(e.to_string())
    }
}
