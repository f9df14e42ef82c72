use bezout_core::rings::RingError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// A false verdict; carries the JSON to print.
    #[error("verdict false")]
    Verdict(String),
    #[error("{0}")]
    Input(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Verdict(_) => 1,
            CliError::Input(_) => 2,
            CliError::Unsupported(_) => 3,
            CliError::Verification(_) => 4,
        }
    }
}

impl From<RingError> for CliError {
    fn from(e: RingError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<bezout_core::Error> for CliError {
    fn from(e: bezout_core::Error) -> Self {
        use bezout_core::Error::*;
        match e {
            Unsupported(_) => CliError::Unsupported(e.to_string()),
            Precondition(_) | NotComaximal | BudgetExceeded(_) | Ring(_) => {
                CliError::Input(e.to_string())
            }
            _ => CliError::Verification(e.to_string()),
        }
    }
}
