use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A linear system had no unique solution.
    #[error("singular system")]
    SingularSystem,
    /// A denominator vanished for the supplied parameter.
    #[error("non-generic parameter: {0}")]
    NonGenericParameter(String),
    /// No reverse tableaux exist for the requested shape and rank.
    #[error("empty tableau set: {0}")]
    EmptyTableauSet(String),
    /// A structural property that should hold was found to fail.
    #[error("property violation: {0}")]
    PropertyViolation(String),
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
