use thiserror::Error;

use crate::quadrature::EvalResult;

/// Errors raised by evaluators, quadrature kernels and the registries.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The budget was exhausted before the error estimate dropped below
    /// tolerance. The best available result is attached.
    #[error("not converged: value {} with error estimate {:e}", .partial.value, .partial.err_est)]
    NonConverged { partial: EvalResult },

    #[error("invalid integration bounds [{a}, {b}]")]
    InvalidBounds { a: f64, b: f64 },

    #[error("oscillation frequency must be positive, got {0}")]
    OmegaNotPositive(f64),

    #[error("principal value sequence does not converge")]
    NoPvLimit,

    #[error("finite-difference extrapolation is unstable")]
    Unstable,

    #[error("integrand or panel contributions grow without bound")]
    Divergent,

    #[error("integrand returned a non-finite value at t = {0}")]
    NonFinite(f64),

    #[error("pole at {0}")]
    Pole(f64),

    #[error("function is singular at x = {0}")]
    Singular(f64),

    #[error("unsupported order {order} for {what}")]
    UnsupportedOrder { what: &'static str, order: f64 },

    #[error("argument outside the supported domain: {0}")]
    Domain(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("unknown id `{0}`")]
    UnknownId(String),
}

impl Error {
    /// The partial result carried by a [`Error::NonConverged`] error.
    pub fn partial(&self) -> Option<&EvalResult> {
        match self {
            Error::NonConverged { partial } => Some(partial),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
