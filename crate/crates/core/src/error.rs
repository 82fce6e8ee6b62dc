use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// An internal algebraic invariant was violated. Indicates a bug, not bad input.
    #[error("logic error: {0}")]
    Logic(String),

    /// A parameter map hit a vanishing denominator.
    #[error("singular step: {0}")]
    SingularStep(String),

    /// An iteration exhausted its step budget before reaching tolerance.
    #[error("no convergence after {iterations} iterations (last error {last_error:e})")]
    Divergence {
        iterations: usize,
        last_error: f64,
        trace: Vec<f64>,
    },

    /// Adaptive quadrature could not reach the requested tolerance.
    #[error("quadrature tolerance not reached: value {value}, error estimate {error_estimate:e} after {subintervals} subintervals")]
    Accuracy {
        value: f64,
        error_estimate: f64,
        subintervals: usize,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn logic(msg: impl Into<String>) -> Self {
        Error::Logic(msg.into())
    }
}
