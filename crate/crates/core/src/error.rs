use alloc::string::String;

/// Errors raised by the string model, the exponent solver, the Rogers-function
/// evaluators and the simulator.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid string: {0}")]
    InvalidString(String),
    #[error("interval [{lo}, {hi}] is not contained in [0, {horizon})")]
    OutOfDomain { lo: f64, hi: f64, horizon: f64 },
    #[error("truncation did not stabilize: last cut {cut}, last relative change {change:e}")]
    NonConvergent { cut: f64, change: f64 },
    #[error("backward solution vanishes at the boundary after {refinements} refinements")]
    DegenerateNormalization { refinements: usize },
    #[error("the Krein equation requires b = 0")]
    NotSymmetric,
    #[error("quadrature did not reach tolerance (error estimate {error:e})")]
    QuadratureFailure { error: f64 },
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),
    #[error("need at least {needed} samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },
    #[error("index 1 has no (C+, C-) form")]
    IndexOne,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("total local time {have} is below the required floor {need}")]
    InsufficientLocalTime { have: f64, need: f64 },
}

pub type Result<T> = core::result::Result<T, Error>;
