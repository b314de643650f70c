//! Numerical integration and differentiation kernels.
//!
//! Everything here is deterministic and free of global state: the same
//! integrand and [`QuadConfig`] always produce bit-identical results.
//!
//! * [`integrate_finite`]: adaptive 15-point Gauss–Kronrod (embedded 7-point
//!   Gauss) on a finite interval.
//! * [`integrate_semiinf_oscillatory`] and [`integrate_oscillatory_tail`]:
//!   `[a, ∞)` integrals of slowly decaying oscillatory integrands, summed
//!   panel by panel and accelerated with the Euler transformation.
//! * [`integrate_semiinf_decay`]: `[0, ∞)` integrals of eventually decaying
//!   integrands on geometrically growing panels.
//! * [`integrate_pv`]: Cauchy principal values across a simple pole.
//! * [`derivative_richardson`]: Richardson-extrapolated central differences.

mod decay;
mod finite;
mod oscillatory;
mod pv;
mod richardson;

pub use decay::integrate_semiinf_decay;
pub use finite::integrate_finite;
pub use oscillatory::{euler_accelerate, integrate_oscillatory_tail, integrate_semiinf_oscillatory};
pub use pv::integrate_pv;
pub use richardson::{default_step, derivative_richardson};

use serde::{Deserialize, Serialize};
use std::fmt;

/// Tolerances and budgets shared by all quadrature kernels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    pub max_oscillation_periods: usize,
    pub acceleration_depth: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_subdivisions: 2000,
            max_oscillation_periods: 10_000,
            acceleration_depth: 40,
        }
    }
}

impl QuadConfig {
    /// Default budgets with both tolerances set to `tol`.
    pub fn with_tol(tol: f64) -> Self {
        Self {
            abs_tol: tol,
            rel_tol: tol,
            ..Self::default()
        }
    }

    /// Checks the invariants of the configuration.
    pub fn validate(&self) -> crate::Result<()> {
        let ok =
            self.abs_tol > 0.0 && self.rel_tol >= 0.0 && self.max_subdivisions >= 1 && self.acceleration_depth >= 2;
        if ok {
            Ok(())
        } else {
            Err(crate::Error::Domain(format!("invalid quadrature config {self:?}")))
        }
    }

    pub(crate) fn tolerance_for(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Method {
    Closed,
    QuadFinite,
    QuadOsc,
    QuadDecay,
    Series,
    SeriesLimit,
    Pv,
    Richardson,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Closed => "CLOSED",
            Method::QuadFinite => "QUAD_FINITE",
            Method::QuadOsc => "QUAD_OSC",
            Method::QuadDecay => "QUAD_DECAY",
            Method::Series => "SERIES",
            Method::SeriesLimit => "SERIES_LIMIT",
            Method::Pv => "PV",
            Method::Richardson => "RICHARDSON",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A computed value with an absolute error estimate.
///
/// `err_est` is an estimate, not a rigorous bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    pub err_est: f64,
    pub method: Method,
    /// Number of integrand (or inner function) evaluations.
    pub evals: usize,
}

impl EvalResult {
    pub fn new(value: f64, err_est: f64, method: Method, evals: usize) -> Self {
        Self {
            value,
            err_est,
            method,
            evals,
        }
    }

    /// A closed-form value; the error estimate is a few ulps.
    pub fn closed(value: f64) -> Self {
        Self::new(value, 4.0 * f64::EPSILON * value.abs(), Method::Closed, 0)
    }

    pub fn series(value: f64, err_est: f64, terms: usize) -> Self {
        Self::new(value, err_est, Method::Series, terms)
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    /// `scale * self`, with the error estimate scaled accordingly.
    pub fn scaled(mut self, scale: f64) -> Self {
        self.value *= scale;
        self.err_est *= scale.abs();
        self
    }

    pub fn negated(self) -> Self {
        self.scaled(-1.0)
    }
}

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = CompensatedSum::default();
        for x in iter {
            s.add(x);
        }
        s
    }
}
