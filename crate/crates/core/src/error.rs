use thiserror::Error;

/// Failures raised by the library.
///
/// `Contract` marks a caller bug (wrong shapes, indices out of range).
/// `Domain` marks inputs that are well-formed but physically unusable,
/// such as an off-shell momentum handed to a solver.
/// `Usage` marks a bad name or value coming from a user-facing entry point.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn contract(msg: impl Into<String>) -> Error {
    Error::Contract(msg.into())
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}
