use std::fmt;
use std::process::ExitCode;

/// Failure of a command, mapped to the exit status.
#[derive(Debug)]
pub enum CliError {
    Core(wsa_core::Error),
    Io(String),
    Usage(String),
}

impl CliError {
    pub fn status(&self) -> u8 {
        match self {
            CliError::Core(e) => core_status(e),
            CliError::Io(_) => 3,
            CliError::Usage(_) => 5,
        }
    }
}

pub fn core_status(e: &wsa_core::Error) -> u8 {
    use wsa_core::Error::*;
    match e {
        Parse(_) => 4,
        DimensionMismatch { .. } | Consistency(_) => 2,
        InvalidQuiver(_)
        | AssumptionViolated(_)
        | SingularSocle { .. }
        | InvalidInput(_)
        | CapExceeded { .. }
        | NoProfile(_) => 1,
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(m) => write!(f, "io error: {m}"),
            CliError::Usage(m) => write!(f, "usage: {m}"),
        }
    }
}

impl From<wsa_core::Error> for CliError {
    fn from(e: wsa_core::Error) -> Self {
        CliError::Core(e)
    }
}

pub const OK: u8 = 0;
/// An identity that should hold for valid input failed.
pub const CHECK_FAILED: u8 = 2;

pub fn exit(status: u8) -> ExitCode {
    ExitCode::from(status)
}
