use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("step budget of {0} rewrites exceeded")]
    BudgetExceeded(u64),
    #[error("invalid datum: {0}")]
    InvalidDatum(String),
    #[error("q-multinomial parts sum to {got}, expected {expected}")]
    PartsMismatch { expected: u32, got: u32 },
    #[error("unknown root `{0}`")]
    UnknownRoot(String),
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("extended indices out of order")]
    IndexOrder,
    #[error("mu family violates the datum mask at {0}")]
    MaskViolation(&'static str),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("degree {got} exceeds the oracle budget {budget}")]
    DegreeBudget { got: u32, budget: u32 },
}

pub type Result<T> = core::result::Result<T, AlgebraError>;
