use thiserror::Error;

use crate::matrices::MatrixError;
use crate::rings::{RingDescriptor, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("elements do not generate the unit ideal")]
    NotComaximal,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("operation not supported over {0}")]
    Unsupported(RingDescriptor),
    #[error("exhaustive search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("search exhausted without a witness: {0}")]
    SearchExhausted(String),
    #[error("result failed verification: {0}")]
    Verification(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

pub type Result<T> = std::result::Result<T, Error>;
