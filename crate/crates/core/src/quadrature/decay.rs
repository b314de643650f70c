use super::{integrate_finite, CompensatedSum, EvalResult, Method, QuadConfig};
use crate::{Error, Result};

const MAX_DOUBLINGS: usize = 60;

/// Integrates `f` over `[0, ∞)` for integrands whose magnitude eventually
/// decays monotonically (exponentially in every use within this crate).
///
/// Panels are `[0, 1]` followed by `[2^j, 2^{j+1}]`. Summation stops once two
/// consecutive panels contribute less than `abs_tol / 4` and the last panel
/// starts beyond `t = 4`.
pub fn integrate_semiinf_decay<F: Fn(f64) -> f64>(f: F, cfg: &QuadConfig) -> Result<EvalResult> {
    let panel_cfg = QuadConfig {
        abs_tol: cfg.abs_tol / 8.0,
        rel_tol: cfg.rel_tol / 8.0,
        ..*cfg
    };
    let mut sum = CompensatedSum::default();
    let mut err = 0.0;
    let mut evals = 0;
    let mut small_run = 0;
    let mut prev_abs = f64::INFINITY;
    let mut growing = 0;

    for j in 0..=MAX_DOUBLINGS {
        let (lo, hi) = if j == 0 {
            (0.0, 1.0)
        } else {
            (2f64.powi(j as i32 - 1), 2f64.powi(j as i32))
        };
        let r = match integrate_finite(&f, lo, hi, &panel_cfg) {
            Ok(r) => r,
            Err(Error::NonConverged { partial }) => partial,
            Err(e) => return Err(e),
        };
        sum.add(r.value);
        err += r.err_est;
        evals += r.evals;

        let mag = r.value.abs().max(r.err_est);
        if lo >= 64.0 && mag > 2.0 * prev_abs && mag > cfg.abs_tol {
            growing += 1;
            if growing >= 3 {
                return Err(Error::Divergent);
            }
        } else {
            growing = 0;
        }
        prev_abs = mag;

        if mag < cfg.abs_tol / 4.0 {
            small_run += 1;
        } else {
            small_run = 0;
        }
        if small_run >= 2 && lo >= 4.0 {
            let value = sum.value();
            let result = EvalResult::new(value, err + mag, Method::QuadDecay, evals);
            return if result.err_est <= cfg.tolerance_for(value).max(cfg.abs_tol) {
                Ok(result)
            } else {
                Err(Error::NonConverged { partial: result })
            };
        }
    }
    Err(Error::NonConverged {
        partial: EvalResult::new(sum.value(), err + prev_abs, Method::QuadDecay, evals),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential() {
        let r = integrate_semiinf_decay(|t: f64| (-t).exp(), &QuadConfig::default()).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
        assert!(r.err_est < 1e-10);
    }

    #[test]
    fn squared_k2() {
        let r = integrate_semiinf_decay(|t: f64| 4.0 * t * t * (-2.0 * t).exp(), &QuadConfig::default()).unwrap();
        assert!((r.value - 1.0).abs() < 1e-11);
    }

    #[test]
    fn gamma_two() {
        let r = integrate_semiinf_decay(|t: f64| t * (-2.0 * t).exp(), &QuadConfig::default()).unwrap();
        assert!((r.value - 0.25).abs() < 1e-12);
    }

    #[test]
    fn growth_is_rejected() {
        let r = integrate_semiinf_decay(|t: f64| (0.1 * t).exp(), &QuadConfig::default());
        assert!(matches!(r, Err(Error::Divergent) | Err(Error::NonFinite(_))), "{r:?}");
    }
}
