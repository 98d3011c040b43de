//! IO, file formats, parallel drivers and verification suites on top of
//! `typecount-core`.

pub mod commands;
pub mod config;
pub mod parallel;
pub mod parse;
pub mod report;
pub mod suites;

pub use typecount_core as core;

/// Process exit status when an enumeration budget is exceeded.
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] typecount_core::Error),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid arguments: {0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn is_budget(&self) -> bool {
        matches!(self, CliError::Core(typecount_core::Error::BudgetExceeded { .. }))
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
