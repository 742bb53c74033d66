//! Command-line front end: data loading, formatting, and export around the
//! planning library.

use thiserror::Error;

pub mod commands;
pub mod export;
pub mod fdr;
pub mod profile;
pub mod runways;
pub mod scenario;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
    #[error(transparent)]
    Model(#[from] glidepath_core::performance::ModelError),
    #[error("{0}")]
    Schema(String),
    #[error("{path}: row {row}, column {column}: {message}")]
    Value { path: String, row: usize, column: String, message: String },
    #[error("{0}")]
    Scenario(String),
    #[error("refusing to export an empty trajectory")]
    EmptyTrajectory,
}

impl CliError {
    pub(crate) fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        CliError::Io { path: path.display().to_string(), source }
    }

    pub(crate) fn parse(path: &std::path::Path, message: impl Into<String>) -> Self {
        CliError::Parse { path: path.display().to_string(), message: message.into() }
    }
}
