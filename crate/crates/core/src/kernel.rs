//! The common integral behind every Bateman/Havelock-type evaluation:
//!
//! `(2/π) ∫_0^{π/2} cos^α θ sin^β θ · tan^{dx} θ · θ^{dν} · T(x tanθ − νθ + φ) dθ`
//!
//! with `T = cos` or `sin` and the phase `φ = (dx − dν)·π/2` that turns the
//! integrand into its `dx`-th derivative in `x` and `dν`-th derivative in
//! `ν`. For `x ≠ 0` it is evaluated in the `t = tan θ` form as an
//! oscillatory integral over `[0, ∞)`; at `x = 0` the θ form has no
//! oscillation and is integrated directly.

use std::f64::consts::{FRAC_2_PI, FRAC_PI_2};

use crate::quadrature::{integrate_finite, integrate_semiinf_oscillatory, EvalResult, QuadConfig};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Trig {
    Cos,
    Sin,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Kernel {
    pub trig: Trig,
    pub nu: f64,
    pub alpha: f64,
    pub beta: f64,
    pub dx: u32,
    pub dnu: u32,
}

impl Kernel {
    pub(crate) fn plain(trig: Trig, nu: f64) -> Self {
        Self {
            trig,
            nu,
            alpha: 0.0,
            beta: 0.0,
            dx: 0,
            dnu: 0,
        }
    }

    fn phase_offset(&self) -> f64 {
        (self.dnu as f64 - self.dx as f64) * FRAC_PI_2
    }

    pub(crate) fn eval(&self, x: f64, cfg: &QuadConfig) -> Result<EvalResult> {
        if !x.is_finite() {
            return Err(Error::Domain(format!("argument must be finite, got {x}")));
        }
        if x == 0.0 {
            return self.eval_at_zero(cfg);
        }
        let omega = x.abs();
        let s = x.signum();
        let p_t = self.beta + self.dx as f64;
        let p_1 = 0.5 * (self.alpha + self.beta) + 1.0;
        let offset = self.phase_offset();
        let (nu, dnu, trig) = (self.nu, self.dnu as i32, self.trig);
        let envelope = move |t: f64| {
            let phi = t.atan();
            let mut w = if p_t == 0.0 {
                (-p_1 * (t * t).ln_1p()).exp()
            } else {
                (p_t * t.ln() - p_1 * (t * t).ln_1p()).exp()
            };
            if dnu > 0 {
                w *= phi.powi(dnu);
            }
            let psi = s * (nu * phi + offset);
            let (sp, cp) = psi.sin_cos();
            match trig {
                Trig::Cos => (w * cp, w * sp),
                Trig::Sin => (-s * w * sp, s * w * cp),
            }
        };
        let r = integrate_semiinf_oscillatory(envelope, omega, &inner_cfg(cfg))?;
        Ok(r.scaled(FRAC_2_PI))
    }

    fn eval_at_zero(&self, cfg: &QuadConfig) -> Result<EvalResult> {
        if self.dx > 0 {
            return Err(Error::Singular(0.0));
        }
        let k = *self;
        let offset = self.phase_offset();
        let f = move |th: f64| {
            let mut w = 1.0;
            if k.alpha != 0.0 {
                w *= th.cos().powf(k.alpha);
            }
            if k.beta != 0.0 {
                w *= th.sin().powf(k.beta);
            }
            if k.dnu > 0 {
                w *= th.powi(k.dnu as i32);
            }
            let arg = -(k.nu * th + offset);
            w * match k.trig {
                Trig::Cos => arg.cos(),
                Trig::Sin => arg.sin(),
            }
        };
        let r = integrate_finite(f, 0.0, FRAC_PI_2, &inner_cfg(cfg))?;
        Ok(r.scaled(FRAC_2_PI))
    }
}

// The scaling by 2/π afterwards would loosen the caller's absolute
// tolerance otherwise; this keeps the final error estimate within it.
fn inner_cfg(cfg: &QuadConfig) -> QuadConfig {
    QuadConfig {
        abs_tol: cfg.abs_tol * 0.5,
        ..*cfg
    }
}
