//! Command implementations behind the `hhwalk` binary.
//!
//! Everything is a pure function of the configuration and its seed: the
//! same config file produces byte-identical outputs on rerun. The binary
//! is a thin argument-parsing layer over [`commands`].

pub mod commands;
pub mod config;
pub mod svg;

use thiserror::Error;

/// Command failures, split by exit code: 1 for validation problems
/// (config, inputs, graph construction), 2 for tolerance violations
/// (routes that should agree but do not).
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),

    #[error("tolerance exceeded: {0}")]
    Tolerance(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Tolerance(_) => 2,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Validation(format!("io error: {e}"))
    }
}

impl From<hhwalk::GraphError> for CliError {
    fn from(e: hhwalk::GraphError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<hhwalk::WalkError> for CliError {
    fn from(e: hhwalk::WalkError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<hhwalk::AnalyticsError> for CliError {
    fn from(e: hhwalk::AnalyticsError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<hhwalk::OracleError> for CliError {
    fn from(e: hhwalk::OracleError) -> Self {
        CliError::Validation(e.to_string())
    }
}
