use super::gamma::gamma;
use crate::quadrature::{integrate_semiinf_decay, QuadConfig};
use crate::{Error, Result};

/// Whittaker function W_{κ,μ}(x) from its Laplace-type integral
/// `x^{μ+1/2} e^{−x/2}/Γ(μ−κ+1/2) ∫_0^∞ t^{μ−κ−1/2} e^{−xt} (1+t)^{μ+κ−1/2} dt`.
///
/// Requires `x > 0` and `μ − κ + 1/2 > 0`.
pub fn whittaker_w(kappa: f64, mu: f64, x: f64) -> Result<f64> {
    whittaker_w_with(kappa, mu, x, &QuadConfig::with_tol(1e-13))
}

/// [`whittaker_w`] with an explicit quadrature configuration.
pub fn whittaker_w_with(kappa: f64, mu: f64, x: f64, cfg: &QuadConfig) -> Result<f64> {
    let p = mu - kappa + 0.5;
    if !(x > 0.0) || !(p > 0.0) {
        return Err(Error::Domain(format!(
            "W_{{{kappa},{mu}}}({x}) needs x > 0 and mu - kappa + 1/2 > 0"
        )));
    }
    let q = mu + kappa - 0.5;
    let r = if p < 1.0 {
        // Substituting t = u^{1/p} removes the algebraic endpoint
        // singularity: t^{p-1} dt = du/p.
        integrate_semiinf_decay(
            |u: f64| {
                let t = u.powf(1.0 / p);
                (-x * t).exp() * (1.0 + t).powf(q) / p
            },
            cfg,
        )
    } else {
        integrate_semiinf_decay(|t: f64| t.powf(p - 1.0) * (-x * t).exp() * (1.0 + t).powf(q), cfg)
    };
    let r = r.or_else(|e| e.partial().copied().ok_or(e))?;
    Ok(x.powf(mu + 0.5) * (-0.5 * x).exp() / gamma(p)? * r.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collapses_to_exponential() {
        let w = whittaker_w(0.0, 0.5, 2.0).unwrap();
        assert!((w - (-1f64).exp()).abs() < 1e-12);
    }

    #[test]
    fn reference_value() {
        // W_{1/4,1/2}(1)
        let w = whittaker_w(0.25, 0.5, 1.0).unwrap();
        assert!((w - 0.685_705_172_795_125).abs() < 1e-9, "{w}");
        let coarse = whittaker_w_with(0.25, 0.5, 1.0, &QuadConfig::with_tol(1e-10)).unwrap();
        assert!((w - coarse).abs() < 1e-8 * w);
    }

    #[test]
    fn outside_strip() {
        assert!(matches!(whittaker_w(1.0, 0.5, 2.0), Err(Error::Domain(_))));
        assert!(matches!(whittaker_w(0.0, 0.5, 0.0), Err(Error::Domain(_))));
    }
}
