//! The Bateman function `k_ν(x) = (2/π) ∫_0^{π/2} cos(x tan θ − νθ) dθ` and
//! the Havelock function `h_ν(x)`, the same integral with `sin`.

use std::f64::consts::{FRAC_2_PI, FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::kernel::{Kernel, Trig};
use crate::quadrature::{EvalResult, QuadConfig};
use crate::special::{bessel, laguerre, scaled_e1, scaled_ei, BesselKind};
use crate::{Error, Result};

/// Values within this distance of an integer or half-integer snap to it.
pub const ORDER_SNAP: f64 = 1e-12;

/// Largest even order with a tabulated Havelock closed form.
pub const HAVELOCK_CLOSED_MAX: i64 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum OrderClass {
    EvenInt,
    OddInt,
    HalfInt,
    General,
}

/// The order ν of a Bateman or Havelock function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Order {
    value: f64,
    class: OrderClass,
}

impl Order {
    pub fn new(nu: f64) -> Self {
        let r = nu.round();
        if (nu - r).abs() <= ORDER_SNAP && r.abs() < 1e15 {
            let class = if r.rem_euclid(2.0) == 0.0 {
                OrderClass::EvenInt
            } else {
                OrderClass::OddInt
            };
            return Self { value: r, class };
        }
        let h = (nu - 0.5).round() + 0.5;
        if (nu - h).abs() <= ORDER_SNAP {
            return Self {
                value: h,
                class: OrderClass::HalfInt,
            };
        }
        Self {
            value: nu,
            class: OrderClass::General,
        }
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn class(&self) -> OrderClass {
        self.class
    }

    /// The order as an integer, if it is one.
    pub fn as_int(&self) -> Option<i64> {
        matches!(self.class, OrderClass::EvenInt | OrderClass::OddInt).then_some(self.value as i64)
    }

    pub fn negated(&self) -> Self {
        Self::new(-self.value)
    }
}

impl From<f64> for Order {
    fn from(nu: f64) -> Self {
        Order::new(nu)
    }
}

impl From<i32> for Order {
    fn from(n: i32) -> Self {
        Order::new(n as f64)
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Which family of functions an evaluation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FunctionId {
    BatemanK,
    HavelockH,
    GenK,
    GenH,
    Ki,
}

impl FunctionId {
    pub fn as_str(self) -> &'static str {
        match self {
            FunctionId::BatemanK => "k",
            FunctionId::HavelockH => "h",
            FunctionId::GenK => "kgen",
            FunctionId::GenH => "hgen",
            FunctionId::Ki => "ki",
        }
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FunctionId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "k" | "bateman_k" => Ok(FunctionId::BatemanK),
            "h" | "havelock_h" => Ok(FunctionId::HavelockH),
            "kgen" | "gen_k" => Ok(FunctionId::GenK),
            "hgen" | "gen_h" => Ok(FunctionId::GenH),
            "ki" => Ok(FunctionId::Ki),
            _ => Err(Error::UnknownId(s.to_string())),
        }
    }
}

/// `k_ν(0)` or `h_ν(0)` in closed form, valid for every real ν.
///
/// `k_ν(0) = (2/(πν)) sin(πν/2)` and `h_ν(0) = (2/(πν)) (cos(πν/2) − 1)`,
/// with the limits 1 and 0 at ν = 0.
pub fn special_value_at_zero(fun: FunctionId, nu: f64) -> Result<f64> {
    let nu = Order::new(nu).value();
    let half = FRAC_PI_2 * nu;
    match fun {
        FunctionId::BatemanK => {
            if nu == 0.0 {
                return Ok(1.0);
            }
            if let Some(n) = Order::new(nu).as_int() {
                // Exact zeros at even orders instead of sin(kπ) rounding.
                return Ok(match n.rem_euclid(4) {
                    0 | 2 => 0.0,
                    1 => FRAC_2_PI / nu,
                    _ => -FRAC_2_PI / nu,
                });
            }
            Ok(FRAC_2_PI / nu * half.sin())
        }
        FunctionId::HavelockH => {
            if nu == 0.0 {
                return Ok(0.0);
            }
            if let Some(n) = Order::new(nu).as_int() {
                return Ok(match n.rem_euclid(4) {
                    0 => 0.0,
                    2 => -2.0 * FRAC_2_PI / nu,
                    _ => -FRAC_2_PI / nu,
                });
            }
            // cos(a) − 1 = −2 sin²(a/2) avoids cancellation for small ν.
            let s = (0.5 * half).sin();
            Ok(-2.0 * FRAC_2_PI / nu * s * s)
        }
        other => Err(Error::Unsupported(format!("no special value at zero for {other}"))),
    }
}

/// `k_{2n}(x) = (−1)^n e^{−x} [L_n(2x) − L_{n−1}(2x)]` for x > 0.
fn k_even_closed(n: u32, x: f64) -> f64 {
    if n == 0 {
        return (-x).exp();
    }
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    sign * (-x).exp() * (laguerre(n, 0.0, 2.0 * x) - laguerre(n - 1, 0.0, 2.0 * x))
}

/// `k_1(x) = (2|x|/π)[K_1(|x|) ± K_0(|x|)]`, `+` for x > 0, `−` for x < 0.
fn k_one_closed(x: f64) -> Result<f64> {
    let a = x.abs();
    let k0 = bessel(BesselKind::K, 0.0, a)?;
    let k1 = bessel(BesselKind::K, 1.0, a)?;
    Ok(FRAC_2_PI * a * if x > 0.0 { k1 + k0 } else { k1 - k0 })
}

/// Odd orders by the three-term recurrence
/// `(ν+2) k_{ν+2} = 2(2x − ν) k_ν − (ν − 2) k_{ν−2}`, started from
/// `k_{±1}(x)`; upwards for positive ν, downwards for negative ν.
fn k_odd_recurrence(n: i64, x: f64) -> Result<f64> {
    let k1 = k_one_closed(x)?;
    let km1 = k_one_closed(-x)?;
    match n {
        1 => return Ok(k1),
        -1 => return Ok(km1),
        _ => {}
    }
    if n > 0 {
        let (mut prev, mut cur) = (km1, k1);
        let mut nu = 1.0;
        while (nu as i64) < n {
            let next = (2.0 * (2.0 * x - nu) * cur - (nu - 2.0) * prev) / (nu + 2.0);
            prev = cur;
            cur = next;
            nu += 2.0;
        }
        Ok(cur)
    } else {
        let (mut next, mut cur) = (k1, km1);
        let mut nu = -1.0;
        while (nu as i64) > n {
            let prev = (2.0 * (2.0 * x - nu) * cur - (nu + 2.0) * next) / (nu - 2.0);
            next = cur;
            cur = prev;
            nu -= 2.0;
        }
        Ok(cur)
    }
}

/// Largest |ν| for which the odd-order recurrence is used.
const ODD_RECURRENCE_MAX: i64 = 15;

/// The Bateman function `k_ν(x)`.
///
/// Dispatch: `x = 0` uses [`special_value_at_zero`]; non-negative even
/// orders at `x > 0` the Laguerre closed form; `ν = ±1` the modified Bessel
/// form; other odd orders up to 15 the three-term recurrence from `k_{±1}`.
/// Nonzero even orders vanish where `νx < 0`. Negative arguments are
/// reflected with `k_ν(−x) = k_{−ν}(x)`. Everything
/// else is the oscillatory quadrature of the `t = tan θ` integral.
pub fn bateman_k(nu: impl Into<Order>, x: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    let nu = nu.into();
    if !x.is_finite() || !nu.value().is_finite() {
        return Err(Error::Domain(format!("k_{nu}({x}) needs finite arguments")));
    }
    if x == 0.0 {
        return Ok(EvalResult::closed(special_value_at_zero(
            FunctionId::BatemanK,
            nu.value(),
        )?));
    }
    match (nu.class(), nu.as_int()) {
        (OrderClass::OddInt, Some(n)) if n.abs() <= ODD_RECURRENCE_MAX => {
            return Ok(EvalResult::closed(k_odd_recurrence(n, x)?));
        }
        (OrderClass::EvenInt, Some(n)) => {
            if x > 0.0 && n >= 0 {
                return Ok(EvalResult::closed(k_even_closed((n / 2) as u32, x)));
            }
            if x < 0.0 && n <= 0 {
                return Ok(EvalResult::closed(k_even_closed((-n / 2) as u32, -x)));
            }
            // k_{2n}(x) vanishes identically on the opposite half-line for n ≠ 0.
            if n != 0 {
                return Ok(EvalResult::closed(0.0));
            }
        }
        _ => {}
    }
    if x < 0.0 {
        return bateman_k(nu.negated(), -x, cfg);
    }
    Kernel::plain(Trig::Cos, nu.value()).eval(x, cfg)
}

/// The tabulated polynomial pairs of the Havelock closed forms:
/// `h_{2m}(x) = (1/π) k_{2m}(x) Ei(x) − (2/π) Q_m(x)` for `m ≥ 1`.
fn havelock_q(m: u32, x: f64) -> f64 {
    match m {
        1 => 1.0,
        2 => x,
        3 => (2.0 * x * x - 4.0 * x + 1.0) / 3.0,
        4 => x * (x * x - 5.0 * x + 5.0) / 3.0,
        5 => (((2.0 * x - 18.0) * x + 44.0) * x - 28.0) * x / 15.0 + 0.2,
        6 => x * ((((2.0 * x - 28.0) * x + 124.0) * x - 198.0) * x + 93.0) / 45.0,
        _ => unreachable!("no tabulated Havelock polynomial for m = {m}"),
    }
}

/// Closed form of `h_{2m}(x)` for x > 0 and `m ≤ 6`.
fn h_even_closed(m: u32, x: f64) -> Result<f64> {
    // e^{−x} Ei(x), computed without overflow.
    let se = scaled_ei(x)?;
    if m == 0 {
        // h_0(x) = (1/π)[e^{−x} Ei(x) + e^{x} E_1(x)]
        return Ok((se + scaled_e1(x)?) / PI);
    }
    // k_{2m}(x) e^{x}: the polynomial part of the Laguerre closed form.
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let poly = sign * (laguerre(m, 0.0, 2.0 * x) - laguerre(m - 1, 0.0, 2.0 * x));
    Ok((poly * se - 2.0 * havelock_q(m, x)) / PI)
}

/// Beyond this argument the closed forms of order 6 and up lose accuracy
/// to cancellation between the two terms.
const HAVELOCK_CLOSED_XMAX: f64 = 25.0;

/// The Havelock function `h_ν(x)`.
///
/// Dispatch: `x = 0` uses [`special_value_at_zero`]; even orders
/// `0 ≤ ν ≤ 12` at `x > 0` the exponential-integral closed forms (orders
/// above 4 only while `x ≤ 25`); negative arguments reflect with
/// `h_ν(−x) = −h_{−ν}(x)`; everything else is oscillatory quadrature.
pub fn havelock_h(nu: impl Into<Order>, x: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    let nu = nu.into();
    if !x.is_finite() || !nu.value().is_finite() {
        return Err(Error::Domain(format!("h_{nu}({x}) needs finite arguments")));
    }
    if x == 0.0 {
        return Ok(EvalResult::closed(special_value_at_zero(
            FunctionId::HavelockH,
            nu.value(),
        )?));
    }
    if x < 0.0 {
        return havelock_h(nu.negated(), -x, cfg).map(EvalResult::negated);
    }
    if let (OrderClass::EvenInt, Some(n)) = (nu.class(), nu.as_int()) {
        if (0..=HAVELOCK_CLOSED_MAX).contains(&n) && (n <= 4 || x <= HAVELOCK_CLOSED_XMAX) {
            return Ok(EvalResult::closed(h_even_closed((n / 2) as u32, x)?));
        }
    }
    Kernel::plain(Trig::Sin, nu.value()).eval(x, cfg)
}

fn plain_kernel(fun: FunctionId) -> Result<Trig> {
    match fun {
        FunctionId::BatemanK => Ok(Trig::Cos),
        FunctionId::HavelockH => Ok(Trig::Sin),
        other => Err(Error::Unsupported(format!("derivatives of {other}"))),
    }
}

/// `∂^m/∂x^m` of `k_ν` or `h_ν` for `m ∈ {1, 2}`, by the weighted
/// oscillatory integral `(2/π) ∫ t^m T(xt − ν atan t + mπ/2) dt/(1+t²)`.
///
/// For `m = 2` the weight does not decay and the integral is understood as
/// the Abel limit of the panel sums, which the Euler transformation
/// delivers. Orders above 2 are rejected.
pub fn derivative_x(fun: FunctionId, nu: impl Into<Order>, x: f64, order: u32, cfg: &QuadConfig) -> Result<EvalResult> {
    let trig = plain_kernel(fun)?;
    if order == 0 {
        return match fun {
            FunctionId::BatemanK => bateman_k(nu, x, cfg),
            _ => havelock_h(nu, x, cfg),
        };
    }
    if order > 2 {
        return Err(Error::UnsupportedOrder {
            what: "x-derivative",
            order: order as f64,
        });
    }
    let kernel = Kernel {
        dx: order,
        ..Kernel::plain(trig, nu.into().value())
    };
    kernel.eval(x, cfg)
}

/// `∂^m/∂ν^m` of `k_ν` or `h_ν`, by the integral with the extra weight
/// `θ^m` and phase `−mπ/2`.
pub fn derivative_nu(
    fun: FunctionId,
    nu: impl Into<Order>,
    x: f64,
    order: u32,
    cfg: &QuadConfig,
) -> Result<EvalResult> {
    let trig = plain_kernel(fun)?;
    if order == 0 {
        return match fun {
            FunctionId::BatemanK => bateman_k(nu, x, cfg),
            _ => havelock_h(nu, x, cfg),
        };
    }
    let kernel = Kernel {
        dnu: order,
        ..Kernel::plain(trig, nu.into().value())
    };
    kernel.eval(x, cfg)
}

/// `k_ν(x)` by direct quadrature, bypassing every closed form.
pub fn bateman_k_quadrature(nu: f64, x: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    Kernel::plain(Trig::Cos, nu).eval(x, cfg)
}

/// `h_ν(x)` by direct quadrature, bypassing every closed form.
pub fn havelock_h_quadrature(nu: f64, x: f64, cfg: &QuadConfig) -> Result<EvalResult> {
    Kernel::plain(Trig::Sin, nu).eval(x, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::Method;

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    #[test]
    fn order_classification() {
        assert_eq!(Order::new(2.0).class(), OrderClass::EvenInt);
        assert_eq!(Order::new(2.0 + 5e-13).class(), OrderClass::EvenInt);
        assert_eq!(Order::new(2.0 + 5e-13).value(), 2.0);
        assert_eq!(Order::new(-3.0).class(), OrderClass::OddInt);
        assert_eq!(Order::new(-2.5).class(), OrderClass::HalfInt);
        assert_eq!(Order::new(0.3).class(), OrderClass::General);
        assert_eq!(Order::new(2.0 + 1e-9).class(), OrderClass::General);
    }

    #[test]
    fn special_values() {
        assert_eq!(special_value_at_zero(FunctionId::BatemanK, 2.0).unwrap(), 0.0);
        assert!((special_value_at_zero(FunctionId::BatemanK, 3.0).unwrap() + 2.0 / (3.0 * PI)).abs() < 1e-16);
        assert!((special_value_at_zero(FunctionId::HavelockH, 6.0).unwrap() + 2.0 / (3.0 * PI)).abs() < 1e-16);
        assert!((special_value_at_zero(FunctionId::HavelockH, 2.0).unwrap() + 2.0 / PI).abs() < 1e-16);
        assert_eq!(special_value_at_zero(FunctionId::HavelockH, 4.0).unwrap(), 0.0);
        for nu in [0.3f64, -1.7, 2.5, 7.25] {
            let k = special_value_at_zero(FunctionId::BatemanK, nu).unwrap();
            let h = special_value_at_zero(FunctionId::HavelockH, nu).unwrap();
            assert!((k - 2.0 / (PI * nu) * (PI * nu / 2.0).sin()).abs() < 1e-15);
            assert!((h - 2.0 / (PI * nu) * ((PI * nu / 2.0).cos() - 1.0)).abs() < 1e-15);
        }
    }

    #[test]
    fn closed_form_examples() {
        let c = cfg();
        assert!((bateman_k(0, 1.0, &c).unwrap().value - (-1f64).exp()).abs() < 1e-16);
        assert!((bateman_k(1, 0.0, &c).unwrap().value - FRAC_2_PI).abs() < 1e-16);
        assert!(bateman_k(4, 1.0, &c).unwrap().value.abs() < 1e-16);
        let k1 = bateman_k(1, 1.0, &c).unwrap();
        assert_eq!(k1.method, Method::Closed);
        assert!((k1.value - 0.651_218_525_908_553).abs() < 1e-14);
        assert!((bateman_k(1, -1.0, &c).unwrap().value - 0.115_153_561_840_576).abs() < 1e-14);
        assert!((havelock_h(2, 0.0, &c).unwrap().value + FRAC_2_PI).abs() < 1e-16);
        assert_eq!(havelock_h(4, 0.0, &c).unwrap().value, 0.0);
        assert!((havelock_h(2, 1.0, &c).unwrap().value + 0.192_784_456_902).abs() < 1e-11);
        assert!((havelock_h(0, 1.0, &c).unwrap().value - 0.411_740_918_76).abs() < 1e-10);
        assert!((havelock_h(4, 1.0, &c).unwrap().value + std::f64::consts::FRAC_2_PI).abs() < 1e-11);
    }

    #[test]
    fn quadrature_matches_closed_forms() {
        let c = cfg();
        for n in [0, 1, 2, 3, 5, 6, 7] {
            for x in [0.05, 0.5, 2.0, 7.0] {
                let q = bateman_k_quadrature(n as f64, x, &c).unwrap().value;
                let k = bateman_k(n, x, &c).unwrap().value;
                assert!((q - k).abs() < 1e-9, "k_{n}({x}): {q} vs {k}");
                let q = bateman_k_quadrature(-(n as f64), x, &c).unwrap().value;
                let k = bateman_k(-n, x, &c).unwrap().value;
                assert!((q - k).abs() < 1e-9, "k_-{n}({x}): {q} vs {k}");
            }
        }
        for n in [0, 2, 4, 6, 8, 10, 12] {
            for x in [0.25, 1.0, 4.0, 8.0] {
                let q = havelock_h_quadrature(n as f64, x, &c).unwrap().value;
                let h = havelock_h(n, x, &c).unwrap().value;
                assert!((q - h).abs() < 1e-8, "h_{n}({x}): {q} vs {h}");
            }
        }
    }

    #[test]
    fn derivatives() {
        let c = cfg();
        let d = derivative_x(FunctionId::BatemanK, 0, 1.0, 1, &c).unwrap();
        assert!((d.value + (-1f64).exp()).abs() < 1e-9, "{}", d.value);
        let d = derivative_x(FunctionId::BatemanK, 2, 2.0, 1, &c).unwrap();
        assert!((d.value + 2.0 * (-2f64).exp()).abs() < 1e-9);
        let d = derivative_x(FunctionId::BatemanK, 2, 2.0, 2, &c).unwrap();
        assert!((d.value - 0.0).abs() < 1e-8, "{}", d.value);
        assert!(matches!(
            derivative_x(FunctionId::BatemanK, 2, 2.0, 3, &c),
            Err(Error::UnsupportedOrder { .. })
        ));
        let d = derivative_nu(FunctionId::HavelockH, 0, 0.0, 1, &c).unwrap();
        assert!((d.value + PI / 4.0).abs() < 1e-12);
        let d = derivative_nu(FunctionId::BatemanK, 0, 0.0, 1, &c).unwrap();
        assert!(d.value.abs() < 1e-14);
    }
}
