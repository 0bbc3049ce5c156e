use thiserror::Error;

/// Errors raised by the computation engine.
///
/// The variants line up with the command-line exit codes: input and domain
/// problems are user errors, resource errors come from enumeration caps, and
/// invariant/lemma violations are failures of a checked mathematical claim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("outside the domain of this operation: {0}")]
    Domain(String),
    #[error("resource cap exceeded: {what} (limit {limit})")]
    Resource { what: String, limit: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("lemma check failed: {0}")]
    LemmaViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
