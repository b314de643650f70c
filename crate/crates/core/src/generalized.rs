//! Generalized Bateman and Havelock functions
//! `k_{ν,α,β}(x) = (2/π) ∫_0^{π/2} cos^α θ sin^β θ cos(x tan θ − νθ) dθ`
//! and `h_{ν,α,β}`, the same integral with `sin`.

use std::f64::consts::PI;

use crate::functions::{bateman_k, havelock_h, Order};
use crate::kernel::{Kernel, Trig};
use crate::quadrature::{EvalResult, Method, QuadConfig};
use crate::special::{
    bessel, bessel_i_series, exp_integral_ei, gamma, rgamma, struve_series, BesselKind, StruveKind, SQRT_PI,
};
use crate::{Error, Result};

/// Upper bound on `α + β`.
pub const MAX_WEIGHT_POWER: f64 = 60.0;

/// The parameter triple `(ν, α, β)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenParams {
    pub nu: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl GenParams {
    pub fn new(nu: f64, alpha: f64, beta: f64) -> Result<Self> {
        let p = Self { nu, alpha, beta };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let ok =
            self.nu.is_finite() && self.alpha >= 0.0 && self.beta >= 0.0 && self.alpha + self.beta < MAX_WEIGHT_POWER;
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "generalized parameters need alpha, beta >= 0 and alpha + beta < {MAX_WEIGHT_POWER}, got {self:?}"
            )))
        }
    }

    fn kernel(&self, trig: Trig) -> Kernel {
        Kernel {
            alpha: self.alpha,
            beta: self.beta,
            ..Kernel::plain(trig, self.nu)
        }
    }

    /// `α / 2` if `ν = 0`, `β = 0` and `α / 2` is a non-negative integer.
    fn even_cosine_power(&self) -> Option<u32> {
        let k = 0.5 * self.alpha;
        (self.nu == 0.0 && self.beta == 0.0 && k == k.trunc() && k < 30.0).then_some(k as u32)
    }
}

/// `k_{0,2k}(x) = 2/(√π Γ(k+1)) (x/2)^{k+1/2} K_{k+1/2}(x)` for x > 0.
fn k_even_cosine_closed(k: u32, x: f64) -> Result<f64> {
    let kf = k as f64;
    let scale = 2.0 / (SQRT_PI * gamma(kf + 1.0)?);
    Ok(scale * (0.5 * x).powf(kf + 0.5) * bessel(BesselKind::K, kf + 0.5, x)?)
}

/// `(Γ(−k)/√π) (x/2)^{k+1/2} [I_{k+1/2}(x) − L_{−k−1/2}(x)]`, for real
/// non-integer k.
fn h_cosine_power_series(k: f64, x: f64) -> f64 {
    let g = 1.0 / rgamma(-k);
    g / SQRT_PI * (0.5 * x).powf(k + 0.5) * (bessel_i_series(k + 0.5, x) - struve_series(StruveKind::L, -k - 0.5, x))
}

const LIMIT_EPS: f64 = 0.02;
const LIMIT_LEVELS: usize = 4;

/// `h_{0,2k}(x)` through the modified Bessel/Struve form; integer k is
/// reached as the limit of the symmetric average over `k ± ε`, with
/// `ε = 0.02·2^{−j}` Richardson-extrapolated in `ε²`. Small steps would
/// amplify the rounding error of the cancelling bracket.
fn h_cosine_power_closed(k: f64, x: f64) -> EvalResult {
    if k != k.trunc() {
        return EvalResult::closed(h_cosine_power_series(k, x));
    }
    let sym = |e: f64| 0.5 * (h_cosine_power_series(k + e, x) + h_cosine_power_series(k - e, x));
    let mut table = [[0.0f64; LIMIT_LEVELS]; LIMIT_LEVELS];
    let mut eps = LIMIT_EPS;
    for j in 0..LIMIT_LEVELS {
        table[j][0] = sym(eps);
        let mut factor = 1.0;
        for m in 1..=j {
            factor *= 4.0;
            table[j][m] = (factor * table[j][m - 1] - table[j - 1][m - 1]) / (factor - 1.0);
        }
        eps *= 0.5;
    }
    let n = LIMIT_LEVELS - 1;
    let value = table[n][n];
    let err = (value - table[n][n - 1]).abs() + 1e-13 * value.abs();
    EvalResult::new(value, err, Method::SeriesLimit, 2 * LIMIT_LEVELS)
}

/// Beyond this argument the Bessel/Struve difference loses too many digits.
const H_CLOSED_XMAX: f64 = 8.0;

/// `k_{ν,α,β}(x)`.
///
/// Fast paths: `α = β = 0` delegates to [`bateman_k`]; `ν = 0, β = 0` with
/// even integer `α = 2k` uses the half-integer `K` form (which contains
/// `(1+x)e^{−x}/2` at `α = 2`); `ν = 0, α = 0, β = 2` is `(1−x)e^{−x}/2`.
/// `k_{0,α,β}` is even in x. Everything else is quadrature.
pub fn bateman_k_gen(p: GenParams, x: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    p.validate()?;
    if p.alpha == 0.0 && p.beta == 0.0 {
        return bateman_k(Order::new(p.nu), x, cfg);
    }
    if x != 0.0 {
        let a = x.abs();
        if let Some(k) = p.even_cosine_power() {
            return Ok(EvalResult::closed(k_even_cosine_closed(k, a)?));
        }
        if p.nu == 0.0 && p.alpha == 0.0 && p.beta == 2.0 {
            return Ok(EvalResult::closed(0.5 * (1.0 - a) * (-a).exp()));
        }
    }
    p.kernel(Trig::Cos).eval(x, cfg)
}

/// `h_{ν,α,β}(x)`.
///
/// Fast paths: `α = β = 0` delegates to [`havelock_h`]; `ν = 0, α = β = 1`
/// is `x e^{−x}/2`; `ν = 0, β = 0, α = 2k` uses the modified Bessel/Struve
/// form for `0 < x ≤ 8` (integer k as a limit, tagged `SERIES_LIMIT`).
/// `h_{0,α,β}` is odd in x. Everything else is quadrature.
pub fn havelock_h_gen(p: GenParams, x: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    p.validate()?;
    if p.alpha == 0.0 && p.beta == 0.0 {
        return havelock_h(Order::new(p.nu), x, cfg);
    }
    if p.nu == 0.0 && x != 0.0 {
        let (a, s) = (x.abs(), x.signum());
        if p.alpha == 1.0 && p.beta == 1.0 {
            return Ok(EvalResult::closed(s * 0.5 * a * (-a).exp()));
        }
        if p.beta == 0.0 && p.alpha > 0.0 && a <= H_CLOSED_XMAX {
            return Ok(h_cosine_power_closed(0.5 * p.alpha, a).scaled(s));
        }
    }
    p.kernel(Trig::Sin).eval(x, cfg)
}

/// Quadrature-only evaluation of the generalized functions.
pub(crate) fn gen_quadrature(fun: Trig, p: GenParams, x: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    p.validate()?;
    p.kernel(fun).eval(x, cfg)
}

/// `k_{ν,α,β}` by quadrature, bypassing closed forms.
pub fn bateman_k_gen_quadrature(p: GenParams, x: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    gen_quadrature(Trig::Cos, p, x, cfg)
}

/// `h_{ν,α,β}` by quadrature, bypassing closed forms.
pub fn havelock_h_gen_quadrature(p: GenParams, x: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    gen_quadrature(Trig::Sin, p, x, cfg)
}

/// A tabulated polynomial `S_{n,k}(x)` with rational coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SPolynomial {
    pub n: u32,
    pub k: u32,
    /// Numerators in increasing powers of x.
    pub coeffs: &'static [i64],
    pub denominator: i64,
}

impl SPolynomial {
    pub fn eval(&self, x: f64) -> f64 {
        let num = self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64);
        num / self.denominator as f64
    }
}

/// The tabulated S-polynomials. The source prints the `(5, 1)` row twice;
/// it appears twice here as well.
pub const S_POLYNOMIALS: [SPolynomial; 9] = [
    SPolynomial {
        n: 2,
        k: 1,
        coeffs: &[2, 1, 1],
        denominator: 6,
    },
    SPolynomial {
        n: 3,
        k: 1,
        coeffs: &[2, 0, -1, 1],
        denominator: 12,
    },
    SPolynomial {
        n: 4,
        k: 1,
        coeffs: &[4, 1, 2, -4, 1],
        denominator: 30,
    },
    SPolynomial {
        n: 5,
        k: 1,
        coeffs: &[18, 0, -9, 31, -16, 2],
        denominator: 180,
    },
    SPolynomial {
        n: 5,
        k: 1,
        coeffs: &[18, 0, -9, 31, -16, 2],
        denominator: 180,
    },
    SPolynomial {
        n: 3,
        k: 2,
        coeffs: &[16, 7, 3, 1],
        denominator: 48,
    },
    SPolynomial {
        n: 4,
        k: 2,
        coeffs: &[24, 6, 2, 1, 1],
        denominator: 120,
    },
    SPolynomial {
        n: 5,
        k: 2,
        coeffs: &[48, 6, 0, -1, -2, 1],
        denominator: 360,
    },
    SPolynomial {
        n: 6,
        k: 2,
        coeffs: &[268, 30, 6, 5, 11, -44, 2],
        denominator: 2520,
    },
];

/// `S_{n,k}(x)` for one of the tabulated pairs.
pub fn s_polynomial(n: u32, k: u32, x: f64) -> Result<f64> {
    S_POLYNOMIALS
        .iter()
        .find(|s| s.n == n && s.k == k)
        .map(|s| s.eval(x))
        .ok_or_else(|| Error::Unsupported(format!("no tabulated S polynomial for (n, k) = ({n}, {k})")))
}

/// `(1/π)[k_{2n}(x) Ei(x) − 2 S_{n−k−1,k}(x)]`, the tabulated closed form
/// for `h_{2n,2k}(x)`, evaluated as printed. Its indexing does not line up
/// with the tabulated pairs for the smallest orders, so it is never used as
/// an evaluation path.
pub fn h_gen_s_form(n: u32, k: u32, x: f64, cfg: &QuadConfig) -> Result<f64> {
    if n < k + 1 {
        return Err(Error::Domain(format!("needs n >= k + 1, got n = {n}, k = {k}")));
    }
    let s = s_polynomial(n - k - 1, k, x)?;
    let kn = bateman_k(Order::new(2.0 * n as f64), x, cfg)?.value;
    Ok((kn * exp_integral_ei(x)? - 2.0 * s) / PI)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    #[test]
    fn closed_examples() {
        let c = cfg();
        let e1 = (-1f64).exp();
        let v = bateman_k_gen(GenParams::new(0.0, 2.0, 0.0).unwrap(), 1.0, &c).unwrap();
        assert!((v.value - e1).abs() < 1e-15);
        let v = bateman_k_gen(GenParams::new(0.0, 0.0, 2.0).unwrap(), 1.0, &c).unwrap();
        assert!(v.value.abs() < 1e-16);
        let v = bateman_k_gen(GenParams::new(0.0, 0.0, 0.0).unwrap(), 1.0, &c).unwrap();
        assert!((v.value - e1).abs() < 1e-16);
        let v = havelock_h_gen(GenParams::new(0.0, 1.0, 1.0).unwrap(), 1.0, &c).unwrap();
        assert!((v.value - 0.5 * e1).abs() < 1e-16);
    }

    #[test]
    fn closed_forms_match_quadrature() {
        let c = cfg();
        for k in 0..4 {
            for x in [0.5, 1.0, 2.0, 4.0, -1.5] {
                let p = GenParams::new(0.0, 2.0 * k as f64, 0.0).unwrap();
                let a = bateman_k_gen(p, x, &c).unwrap().value;
                let q = bateman_k_gen_quadrature(p, x, &c).unwrap().value;
                assert!((a - q).abs() < 1e-9, "k_0,{}({x}): {a} vs {q}", 2 * k);
                if k > 0 {
                    let h = havelock_h_gen(p, x, &c).unwrap();
                    let q = havelock_h_gen_quadrature(p, x, &c).unwrap().value;
                    assert!((h.value - q).abs() < 1e-7, "h_0,{}({x}): {} vs {q}", 2 * k, h.value);
                    assert_eq!(h.method, Method::SeriesLimit);
                }
            }
        }
        for x in [0.5, 3.0, -2.0] {
            let p = GenParams::new(0.0, 0.0, 2.0).unwrap();
            let q = bateman_k_gen_quadrature(p, x, &c).unwrap().value;
            assert!((bateman_k_gen(p, x, &c).unwrap().value - q).abs() < 1e-9);
            let p = GenParams::new(0.0, 1.0, 1.0).unwrap();
            let q = havelock_h_gen_quadrature(p, x, &c).unwrap().value;
            assert!((havelock_h_gen(p, x, &c).unwrap().value - q).abs() < 1e-9);
        }
    }

    #[test]
    fn non_integer_cosine_power() {
        let c = cfg();
        let p = GenParams::new(0.0, 1.3, 0.0).unwrap();
        let h = havelock_h_gen(p, 1.0, &c).unwrap();
        let q = havelock_h_gen_quadrature(p, 1.0, &c).unwrap();
        assert!((h.value - q.value).abs() < 1e-9);
    }

    #[test]
    fn s_polynomials() {
        assert!((s_polynomial(2, 1, 1.0).unwrap() - 2.0 / 3.0).abs() < 1e-16);
        assert!((s_polynomial(3, 2, 0.0).unwrap() - 1.0 / 3.0).abs() < 1e-16);
        assert!((s_polynomial(4, 2, 0.0).unwrap() - 0.2).abs() < 1e-16);
        assert!(matches!(s_polynomial(7, 1, 0.0), Err(Error::Unsupported(_))));
    }

    #[test]
    fn parameter_validation() {
        assert!(GenParams::new(0.0, -1.0, 0.0).is_err());
        assert!(GenParams::new(0.0, 30.0, 30.0).is_err());
        assert!(GenParams::new(0.0, 29.0, 30.0).is_ok());
    }
}
