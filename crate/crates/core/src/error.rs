use thiserror::Error;

/// Errors raised by the numerical routines and the command-line front end.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    #[error("domain error in {func}: {detail}")]
    Domain { func: &'static str, detail: String },

    /// A query point lies outside the range covered by a precomputed object.
    #[error("range error: {0}")]
    Range(String),

    /// A precondition on sample sizes or table lengths was violated.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A numerical procedure failed to converge or hit a singular system.
    #[error("numerical failure: {0}")]
    Numeric(String),

    /// The ODE integrator's step size collapsed before reaching the target.
    #[error("step size collapsed at x = {x} (h = {h:e}); left boundary of solvability reached")]
    StepCollapse { x: f64, h: f64 },

    /// Invalid command-line or request input.
    #[error("invalid request: {0}")]
    Request(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn domain(func: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            func,
            detail: detail.into(),
        }
    }

    /// Process exit code: 1 for invalid input, 2 for numerical failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain { .. }
            | Error::Range(_)
            | Error::Precondition(_)
            | Error::Request(_)
            | Error::Io(_) => 1,
            Error::Numeric(_) | Error::StepCollapse { .. } => 2,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
