use num_complex::Complex64;
use thiserror::Error;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("logarithm or negative power of zero")]
    ZeroArgument,

    #[error("argument {0} is a pole of the gamma function")]
    PoleArgument(Complex64),

    #[error("lattice pole: a + {n} = 0")]
    LatticePole { n: u64 },

    #[error("domain error: {0}")]
    Domain(String),

    /// A series whose terms grow without bound at the requested point.
    #[error("divergent series: {0}")]
    Divergent(String),

    #[error("no convergence after {terms} terms (error estimate {err_estimate:e})")]
    NoConvergence { terms: usize, err_estimate: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("malformed assignment: {0}")]
    MalformedAssignment(String),

    #[error("malformed grid: {0}")]
    MalformedGrid(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
