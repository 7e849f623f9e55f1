use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumError {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole at {0}")]
    Pole(String),

    /// The evaluation budget ran out; `best` is the last estimate reached.
    #[error("budget exceeded after {evals} evaluations (best estimate {best:e}, error {err:e})")]
    BudgetExceeded { best: f64, err: f64, evals: usize },

    #[error("divergence detected: {0}")]
    Divergence(String),

    #[error("series acceleration failed: {0}")]
    AccelerationFailure(String),

    #[error("extrapolation failed: {0}")]
    ExtrapolationFailure(String),

    #[error("symmetry violation: {0}")]
    SymmetryViolation(String),

    #[error("unknown identity `{0}`")]
    NotFound(String),
}

pub type Result<T> = std::result::Result<T, NumError>;

pub(crate) fn domain(msg: impl Into<String>) -> NumError {
    NumError::Domain(msg.into())
}
