use std::fmt;
use std::process::ExitCode;

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// Bad user input; exit code 2.
    InvalidArgs(String),
    /// Solver or oracle failure; exit code 3.
    Internal(String),
    /// One or more verification checks failed; exit code 1.
    VerificationFailed(Vec<String>),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::VerificationFailed(_) => 1,
            CliError::InvalidArgs(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<CliError> for ExitCode {
    fn from(e: CliError) -> Self {
        ExitCode::from(e.exit_code())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::InvalidArgs(msg) => write!(f, "invalid arguments: {msg}"),
            CliError::Internal(msg) => write!(f, "internal error: {msg}"),
            CliError::VerificationFailed(names) => {
                write!(f, "verification failed: {}", names.join(", "))
            }
        }
    }
}

impl std::error::Error for CliError {}

/// Input-validation errors from the library map to exit code 2, everything
/// else to 3.
impl From<pagefold::Error> for CliError {
    fn from(e: pagefold::Error) -> Self {
        match e {
            pagefold::Error::InvalidArgument(_) | pagefold::Error::FoldCapturesFixedEdge => {
                CliError::InvalidArgs(e.to_string())
            }
            _ => CliError::Internal(e.to_string()),
        }
    }
}
