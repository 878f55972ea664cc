use alloc::string::String;

/// Errors raised by the core algorithms.
///
/// `TheoremViolation` is not a crash: it marks a computed fact that
/// contradicts a basis or degeneration statement, and callers are expected
/// to surface it as data.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("leading term of the zero polynomial is undefined")]
    UndefinedLeadingTerm,
    #[error("target is not in the span of the basis")]
    NotInSpan,
    #[error("sample rank unstable: {0}")]
    UnstableSample(String),
    #[error("empty fiber: {0}")]
    EmptyFiber(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
