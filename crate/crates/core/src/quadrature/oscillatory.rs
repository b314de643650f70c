use std::f64::consts::PI;

use super::{integrate_finite, EvalResult, Method, QuadConfig};
use crate::{Error, Result};

/// Euler transformation of a sequence of partial sums by repeated averaging.
///
/// Returns the fully averaged value of `sums` together with the difference
/// between the two last estimates (one level shallower, or one term shorter),
/// which serves as an error estimate. `sums` must hold at least two entries.
pub fn euler_accelerate(sums: &[f64]) -> (f64, f64) {
    assert!(sums.len() >= 2, "euler_accelerate needs at least two partial sums");
    let mut row = sums.to_vec();
    let mut prev_last = row[row.len() - 1];
    let mut prev_second = row[row.len() - 2];
    while row.len() > 1 {
        prev_last = row[row.len() - 1];
        prev_second = row[row.len() - 2];
        for i in 0..row.len() - 1 {
            row[i] = 0.5 * (row[i] + row[i + 1]);
        }
        row.pop();
    }
    let value = row[0];
    // prev_last and prev_second are the shallower level's two entries; each
    // of them is a valid estimate of depth d-1.
    let err = (value - prev_last).abs().max((value - prev_second).abs());
    (value, err)
}

/// Integrates `f` over `[a, ∞)` where `f` oscillates with (asymptotic)
/// half-period `half_period`.
///
/// Each half-period panel is integrated in two halves by [`integrate_finite`].
/// The partial sums at the panel boundaries are accelerated with
/// [`euler_accelerate`] over a window of `acceleration_depth + 1` sums that
/// slides outwards until the estimate settles.
pub fn integrate_oscillatory_tail<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    half_period: f64,
    cfg: &QuadConfig,
) -> Result<EvalResult> {
    if !(half_period > 0.0 && half_period.is_finite()) {
        return Err(Error::OmegaNotPositive(PI / half_period));
    }
    if !a.is_finite() {
        return Err(Error::InvalidBounds { a, b: f64::INFINITY });
    }
    let panel_cfg = QuadConfig {
        abs_tol: cfg.abs_tol * 1e-2,
        rel_tol: cfg.rel_tol * 1e-2,
        ..*cfg
    };
    let depth = cfg.acceleration_depth.max(2);
    let max_panels = 2 * cfg.max_oscillation_periods.max(1);

    let mut sums = vec![0.0];
    let mut panel_errs = vec![0.0];
    let mut evals = 0;
    let mut acc = 0.0;
    let mut acc_err = 0.0;
    let mut best = EvalResult::new(f64::NAN, f64::INFINITY, Method::QuadOsc, 0);
    let mut prev_estimate: Option<f64> = None;

    for k in 0..max_panels {
        let lo = a + k as f64 * half_period;
        let mid = lo + 0.5 * half_period;
        let hi = lo + half_period;
        for (x0, x1) in [(lo, mid), (mid, hi)] {
            let r = match integrate_finite(&f, x0, x1, &panel_cfg) {
                Ok(r) => r,
                Err(Error::NonConverged { partial }) => partial,
                Err(e) => return Err(e),
            };
            acc += r.value;
            acc_err += r.err_est;
            evals += r.evals;
        }
        sums.push(acc);
        panel_errs.push(acc_err);

        if sums.len() < depth + 2 {
            continue;
        }
        let window = &sums[sums.len() - depth - 1..];
        let (value, accel_err) = euler_accelerate(window);
        let slide_err = prev_estimate.map_or(f64::INFINITY, |p| (value - p).abs());
        prev_estimate = Some(value);
        let quad_err = panel_errs[panel_errs.len() - 1];
        let err = accel_err.max(slide_err) + quad_err;
        if err < best.err_est {
            best = EvalResult::new(value, err, Method::QuadOsc, evals);
        }
        if !value.is_finite() {
            return Err(Error::Divergent);
        }
        if err <= cfg.tolerance_for(value) {
            return Ok(EvalResult::new(value, err, Method::QuadOsc, evals));
        }
    }
    best.evals = evals;
    Err(Error::NonConverged { partial: best })
}

/// Integrates `g_c(t)·cos(ωt) + g_s(t)·sin(ωt)` over `[0, ∞)`, where
/// `envelope_pair(t) = (g_c(t), g_s(t))` decays (possibly only algebraically)
/// or stays bounded.
///
/// Panels are the half-periods `π/ω` of the carrier; see
/// [`integrate_oscillatory_tail`].
pub fn integrate_semiinf_oscillatory<G: Fn(f64) -> (f64, f64)>(
    envelope_pair: G,
    omega: f64,
    cfg: &QuadConfig,
) -> Result<EvalResult> {
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(Error::OmegaNotPositive(omega));
    }
    let f = |t: f64| {
        let (gc, gs) = envelope_pair(t);
        let (s, c) = (omega * t).sin_cos();
        // Skip the multiplication when one envelope vanishes identically, so
        // that an infinite-but-unused component cannot poison the sum.
        let mut v = 0.0;
        if gc != 0.0 {
            v += gc * c;
        }
        if gs != 0.0 {
            v += gs * s;
        }
        v
    };
    integrate_oscillatory_tail(f, 0.0, PI / omega, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn lorentzian_cosine_transform() {
        let cfg = QuadConfig::default();
        for omega in [1.0f64, 2.0, 0.1, 7.5] {
            let r = integrate_semiinf_oscillatory(|t| (1.0 / (1.0 + t * t), 0.0), omega, &cfg).unwrap();
            let exact = FRAC_PI_2 * (-omega).exp();
            assert!((r.value - exact).abs() < 1e-10, "omega={omega}: {} vs {exact}", r.value);
            assert!((r.value - exact).abs() <= 10.0 * r.err_est.max(1e-13));
            assert_eq!(r.method, Method::QuadOsc);
        }
    }

    #[test]
    fn dirichlet_integral() {
        let r = integrate_semiinf_oscillatory(|t| (0.0, 1.0 / t), 1.0, &QuadConfig::default()).unwrap();
        assert!((r.value - FRAC_PI_2).abs() < 1e-10, "{}", r.value);
    }

    #[test]
    fn bounded_envelope_gives_abel_limit() {
        // ∫ sin t dt summed in the Abel sense is 1.
        let r = integrate_semiinf_oscillatory(|_| (0.0, 1.0), 1.0, &QuadConfig::default()).unwrap();
        assert!((r.value - 1.0).abs() < 1e-10, "{}", r.value);
    }

    #[test]
    fn omega_must_be_positive() {
        let cfg = QuadConfig::default();
        assert!(matches!(
            integrate_semiinf_oscillatory(|_| (1.0, 0.0), 0.0, &cfg),
            Err(Error::OmegaNotPositive(_))
        ));
        assert!(matches!(
            integrate_semiinf_oscillatory(|_| (1.0, 0.0), -1.0, &cfg),
            Err(Error::OmegaNotPositive(_))
        ));
    }

    #[test]
    fn euler_on_alternating_harmonic() {
        let mut s = 0.0;
        let sums: Vec<f64> = (1..=30)
            .map(|k| {
                s += if k % 2 == 1 { 1.0 } else { -1.0 } / k as f64;
                s
            })
            .collect();
        let (v, err) = euler_accelerate(&sums);
        assert!((v - 2f64.ln()).abs() < 1e-9);
        assert!(err < 1e-7);
    }
}
