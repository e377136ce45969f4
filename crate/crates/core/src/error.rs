use thiserror::Error;

/// Errors raised by the library.
///
/// Mathematical disagreement between pipelines is never an error; it is
/// reported through [`crate::pipeline::CoefficientReport`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A brute-force computation was refused because it exceeds a configured cap.
    #[error("{what} = {requested} exceeds the configured cap {cap} (raise it with {flag})")]
    ResourceCap {
        what: &'static str,
        requested: u128,
        cap: u128,
        flag: &'static str,
    },

    /// An internal consistency check failed. This indicates a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
