//! Sweep harness, reports and result cache behind the `schubert` binary.

pub mod cache;
pub mod commands;
pub mod report;
pub mod sweep;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Perm(#[from] schubert_core::PermError),
    #[error(transparent)]
    Poly(#[from] schubert_core::PolyError),
    #[error("internal error: {0}")]
    TopDream(#[from] schubert_core::pipedream::TopDreamError),
    #[error("invalid range: {0}")]
    Range(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for bad user input, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Perm(_) | CliError::Range(_) => 2,
            _ => 1,
        }
    }
}
