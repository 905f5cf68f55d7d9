use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A state violated the mass-shell (or same-shell) constraint.
    #[error("off shell: {0}")]
    OffShell(String),
    /// A stated precondition does not hold for the supplied input.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// An iterative solver or integrator failed to reach its target.
    #[error("no convergence: {0}")]
    NoConvergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn off_shell(msg: impl Into<String>) -> Self {
        Error::OffShell(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
