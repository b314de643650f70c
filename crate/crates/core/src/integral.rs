//! The Bateman-integral functions `ki_{2n}(x) = −∫_x^∞ k_{2n}(t)/t dt` and
//! the Bessel-integral functions `Ji_n(x) = −∫_x^∞ J_n(t)/t dt`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::functions::bateman_k;
use crate::quadrature::{
    integrate_finite, integrate_oscillatory_tail, integrate_semiinf_decay, EvalResult, Method, QuadConfig,
};
use crate::special::{bessel, binomial, exp_integral_e1, laguerre, BesselKind};
use crate::{Error, Result};

/// Below this argument `ki_{2n}` returns its limiting value at `0⁺`.
pub const KI_ZERO_CUTOFF: f64 = 1e-8;

/// Index `n` of `ki_{2n}`; the underlying Bateman function has order `2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KiOrder(pub u32);

impl KiOrder {
    pub fn new(n: u32) -> Self {
        Self(n)
    }

    /// Builds the index from the Bateman order `2n`.
    pub fn from_bateman_order(order: f64) -> Result<Self> {
        if !(order >= 0.0 && order.is_finite() && (order / 2.0).fract() == 0.0) {
            return Err(Error::UnsupportedOrder {
                what: "Bateman-integral function (needs an even order 2n >= 0)",
                order,
            });
        }
        Ok(Self((order / 2.0) as u32))
    }

    pub fn n(self) -> u32 {
        self.0
    }
}

impl From<u32> for KiOrder {
    fn from(n: u32) -> Self {
        Self(n)
    }
}

/// `ki_{2n}(0⁺)`: zero for even `n`, `−2/n` for odd `n`.
pub fn ki_special_zero(n: u32) -> Result<f64> {
    match n {
        0 => Err(Error::Singular(0.0)),
        n if n % 2 == 0 => Ok(0.0),
        n => Ok(-2.0 / n as f64),
    }
}

// Largest index evaluated by the Laguerre sum; beyond it the alternating
// binomial terms cancel too much and the recurrence takes over.
const KI_SUM_MAX: u32 = 8;

/// `ki_{2n}(x)` for `x > 0`.
///
/// `n = 0` is `−E_1(x)`. For `1 ≤ n ≤ 8` the finite Laguerre sum
/// `(e^{−x}/n) Σ_{k=1}^n (−2)^k C(n,k) L_{k−1}(x)` is used; larger `n` run
/// the recurrence of [`ki_sequence`].
pub fn ki(n: impl Into<KiOrder>, x: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    let n = n.into().0;
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!("ki needs x > 0, got {x}")));
    }
    if n == 0 {
        return Ok(EvalResult::closed(-exp_integral_e1(x)?));
    }
    if x < KI_ZERO_CUTOFF {
        return Ok(EvalResult::closed(ki_special_zero(n)?));
    }
    if n > KI_SUM_MAX {
        let seq = ki_sequence(n, x, cfg)?;
        return Ok(EvalResult::closed(seq[n as usize]));
    }
    let mut sum = 0.0;
    let mut pow = 1.0;
    for k in 1..=n {
        pow *= -2.0;
        sum += pow * binomial(n, k) * laguerre(k - 1, 0.0, x);
    }
    Ok(EvalResult::closed((-x).exp() * sum / n as f64))
}

/// `[ki_0(x), ki_2(x), …, ki_{2n}(x)]` for `x > 0`.
///
/// Runs `(m+2) ki_{2m+4} = m ki_{2m} − 2 k_{2m+2}` upward from
/// `ki_2 = −2k_0` and `ki_4 = −k_2`. The homogeneous solutions decay like
/// `1/m²`, so rounding errors do not grow.
pub fn ki_sequence(n: u32, x: f64, cfg: &QuadConfig) -> Result<Vec<f64>> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!("ki needs x > 0, got {x}")));
    }
    let n = n as usize;
    let mut out = vec![-exp_integral_e1(x)?];
    if x < KI_ZERO_CUTOFF {
        out.extend((1..=n).map(|m| ki_special_zero(m as u32).unwrap_or(0.0)));
        return Ok(out);
    }
    let k = |order: usize| bateman_k(order as f64, x, cfg).map(|r| r.value);
    for m in 1..=n {
        let v = match m {
            1 => -2.0 * k(0)?,
            2 => -k(2)?,
            _ => {
                let j = (m - 2) as f64;
                (j * out[m - 2] - 2.0 * k(2 * m - 2)?) / (j + 2.0)
            }
        };
        out.push(v);
    }
    Ok(out)
}

/// `ki_{2n}(x)` straight from its defining tail integral.
pub fn ki_quadrature(n: impl Into<KiOrder>, x: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    let n = n.into().0;
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!("ki needs x > 0, got {x}")));
    }
    let order = 2.0 * n as f64;
    let f = |u: f64| {
        let t = x + u;
        bateman_k(order, t, cfg).map(|r| r.value / t).unwrap_or(f64::NAN)
    };
    Ok(integrate_semiinf_decay(f, cfg)?.negated())
}

// Beyond this point the tail integral is summed period by period.
const JI_SPLIT: f64 = 10.0;

/// `Ji_n(x) = −∫_x^∞ J_n(t)/t dt` for `x > 0`.
///
/// The oscillating tail uses half-period panels of length π. For `n ≥ 1`
/// and tiny `x` the limit `Ji_n(0⁺) = −1/n` is returned.
pub fn bessel_integral_ji(n: u32, x: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!("Ji needs x > 0, got {x}")));
    }
    let nu = n as f64;
    if n >= 1 && x < KI_ZERO_CUTOFF {
        return Ok(EvalResult::closed(-1.0 / nu));
    }
    let f = |t: f64| bessel(BesselKind::J, nu, t).unwrap_or(f64::NAN) / t;
    let start = x.max(JI_SPLIT);
    let tail = integrate_oscillatory_tail(f, start, PI, cfg)?;
    let (mut value, mut err, mut evals) = (tail.value, tail.err_est, tail.evals);
    if x < start {
        let head = integrate_finite(f, x, start, cfg)?;
        value += head.value;
        err += head.err_est;
        evals += head.evals;
    }
    Ok(EvalResult::new(-value, err, Method::QuadOsc, evals))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ki_closed_values() {
        let cfg = QuadConfig::default();
        let e1 = (-1f64).exp();
        assert!((ki(1, 1.0, &cfg).unwrap().value + 2.0 * e1).abs() < 1e-15);
        assert!((ki(0, 1.0, &cfg).unwrap().value + 0.219_383_934_395_520_3).abs() < 1e-14);
        assert_eq!(ki(1, 1e-9, &cfg).unwrap().value, -2.0);
        assert_eq!(ki(2, 1e-9, &cfg).unwrap().value, 0.0);
        assert!(matches!(ki(1, 0.0, &cfg), Err(Error::Domain(_))));
    }

    #[test]
    fn ki_limits_at_zero() {
        assert_eq!(ki_special_zero(1).unwrap(), -2.0);
        assert_eq!(ki_special_zero(2).unwrap(), 0.0);
        assert!((ki_special_zero(3).unwrap() + 2.0 / 3.0).abs() < 1e-16);
        let cfg = QuadConfig::default();
        for n in 1..=6 {
            let near = ki(n, 2e-8, &cfg).unwrap().value;
            assert!((near - ki_special_zero(n).unwrap()).abs() < 1e-6, "n = {n}: {near}");
        }
    }

    #[test]
    fn ki_sum_matches_definition() {
        let cfg = QuadConfig::default();
        for n in 1..=5 {
            for &x in &[0.5, 1.0, 2.0, 4.0, 8.0] {
                let a = ki(n, x, &cfg).unwrap().value;
                let b = ki_quadrature(n, x, &cfg).unwrap().value;
                assert!((a - b).abs() < 1e-9, "n = {n}, x = {x}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn ki_recurrence_matches_definition_at_large_index() {
        let cfg = QuadConfig::default();
        for n in [9, 20, 40, 80] {
            for &x in &[0.01, 0.5, 2.0, 10.0] {
                let a = ki(n, x, &cfg).unwrap().value;
                let b = ki_quadrature(n, x, &cfg).unwrap().value;
                assert!((a - b).abs() < 1e-12, "n = {n}, x = {x}: {a} vs {b}");
            }
        }
        let seq = ki_sequence(8, 1.5, &cfg).unwrap();
        for (n, v) in seq.iter().enumerate() {
            assert!((v - ki(n as u32, 1.5, &cfg).unwrap().value).abs() < 1e-14);
        }
    }

    #[test]
    fn ji_values() {
        let cfg = QuadConfig::default();
        let small = bessel_integral_ji(1, 1e-3, &cfg).unwrap().value;
        assert!((small - (-1.0 + 5e-4 - 1e-9 / 48.0)).abs() < 1e-9, "{small}");
        let large = bessel_integral_ji(1, 200.0, &cfg).unwrap().value;
        assert!((large - 7.853_872_096_405_811e-5).abs() < 1e-9, "{large}");
        let a = bessel_integral_ji(0, 1.0, &cfg).unwrap().value;
        assert!((a + 0.237_096_762_653_481_15).abs() < 1e-9, "{a}");
    }
}
