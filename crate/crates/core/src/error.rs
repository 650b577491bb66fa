use thiserror::Error;

use crate::quiver::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid triangulation quiver:\n{0}")]
    InvalidQuiver(ValidationReport),
    #[error("assumption violated:\n{0}")]
    AssumptionViolated(ValidationReport),
    #[error(
        "singular socle at vertex {vertex}: {witness} is a socle element outside the span of B"
    )]
    SingularSocle { vertex: String, witness: String },
    #[error("dimension mismatch: expected {expected}, found {found} ({detail})")]
    DimensionMismatch {
        expected: usize,
        found: usize,
        detail: String,
    },
    #[error("consistency check failed: {0}")]
    Consistency(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("size cap exceeded: {what} needs {needed}, cap is {cap}")]
    CapExceeded {
        what: String,
        needed: usize,
        cap: usize,
    },
    #[error("no degeneration profile: {0}")]
    NoProfile(String),
}

impl Error {
    /// True for failures of the input against the validity rules, as opposed
    /// to failures of an internal identity.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidQuiver(_)
                | Error::AssumptionViolated(_)
                | Error::SingularSocle { .. }
                | Error::InvalidInput(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
