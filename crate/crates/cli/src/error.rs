use b3lift_core::AlgebraError;
use thiserror::Error;

use crate::expr::ParseError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Algebra(#[from] AlgebraError),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("bad datum file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Algebra(AlgebraError::BudgetExceeded(_) | AlgebraError::DegreeBudget { .. }) => EXIT_BUDGET,
            _ => EXIT_USAGE,
        }
    }
}
