//! Library side of the `fts` binary: suite runner, report format and the
//! P/Q input reader.

pub mod commands;
pub mod pq;
pub mod suites;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Degenerate(_) | CliError::Other(_) => 1,
        }
    }
}
