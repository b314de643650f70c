//! Series of even-order Bateman functions and the orthogonality integrals.
//!
//! Power series inside the unit disk are summed directly. Sums on the unit
//! circle (`t = ±i`, `t = −e^{2iθ}`, `t = −1`) converge only like
//! `n^{−3/4}`; they are evaluated with the Euler transformation of the
//! power series `Σ F_n t^n`, `F_n = (−1)^n k_{2n}`, which maps the circle
//! into the disk `|u| < 1` through `t = u/(u−1)`.

use std::f64::consts::{FRAC_2_PI, PI};

use num_complex::Complex64;

use super::eval::{k, quad_decay, sign};
use super::{product, Def, Identity};
use crate::special::{bessel, binomial, factorial, kelvin_ber_bei_prime, laguerre, BesselKind};
use crate::{Error, EvalResult, QuadConfig, Result};

const XS: &[f64] = &[0.5, 1.0, 2.0];
const TS_DISK: &[f64] = &[-0.6, -0.3, 0.3, 0.6];

fn k2(n: u32, x: f64, c: &QuadConfig) -> Result<f64> {
    k(2.0 * n as f64, x, c)
}

/// `Σ_{n≥0} a_n t^n` for `|t| < 1` with algebraically bounded `a_n`.
fn power_sum(a: impl Fn(u32) -> Result<f64>, t: f64) -> Result<f64> {
    let terms = if t == 0.0 {
        1
    } else {
        ((-40.0) / t.abs().ln()).ceil() as u32 + 10
    };
    let mut sum = 0.0;
    let mut pow = 1.0;
    for n in 0..terms {
        sum += a(n)? * pow;
        pow *= t;
    }
    Ok(sum)
}

/// `Σ_{n≥0} a_n` for rapidly (factorially) decaying terms.
fn fast_sum(a: impl Fn(u32) -> Result<f64>) -> Result<f64> {
    let mut sum = 0.0;
    let mut small = 0;
    for n in 0..200 {
        let term = a(n)?;
        sum += term;
        small = if term.abs() <= 1e-18 * sum.abs().max(1.0) {
            small + 1
        } else {
            0
        };
        if small == 3 {
            return Ok(sum);
        }
    }
    Err(Error::NonConverged {
        partial: EvalResult::series(sum, f64::NAN, 200),
    })
}

const EULER_MAX_TERMS: usize = 60;

/// `Σ_n F_n t0^n`, `F_n = (−1)^n k_{2n}(x)`, on or near the unit circle.
///
/// With `u = t/(t−1)` the series becomes `Σ_k b_k u^k` where `b_0 = F_0`
/// and `b_k = Σ_{n=1}^k (−1)^n C(k−1, n−1) F_n`.
fn euler_genfn(x: f64, t0: Complex64, c: &QuadConfig) -> Result<Complex64> {
    let u0 = t0 / (t0 - 1.0);
    let mut f = Vec::with_capacity(EULER_MAX_TERMS);
    for n in 0..EULER_MAX_TERMS as u32 {
        f.push(sign(n as i64) * k2(n, x, c)?);
    }
    let mut sum = Complex64::new(f[0], 0.0);
    let mut pow = Complex64::new(1.0, 0.0);
    let mut small = 0;
    for kk in 1..EULER_MAX_TERMS {
        let mut b = 0.0;
        for n in 1..=kk {
            b += sign(n as i64) * binomial(kk as u32 - 1, n as u32 - 1) * f[n];
        }
        pow *= u0;
        let term = b * pow;
        sum += term;
        small = if term.norm() < 1e-12 { small + 1 } else { 0 };
        if small == 2 && kk >= 4 {
            return Ok(sum);
        }
    }
    Err(Error::NonConverged {
        partial: EvalResult::series(sum.re, f64::NAN, EULER_MAX_TERMS),
    })
}

// Σ_n (−1)^n τ^n/n! k_{2n+2}(x) = √(2x/τ) e^{−x+τ} J_1(2^{3/2} √(xτ)).
fn kelvin_args(x: f64, t: f64) -> Result<(f64, f64, f64)> {
    let z = 2f64.powf(1.5) * (x * t).sqrt();
    let (berp, beip) = kelvin_ber_bei_prime(z)?;
    Ok(((2.0 * x / t).sqrt(), berp, beip))
}

fn full_line_printed(k: f64, m: f64) -> f64 {
    let d = k - m;
    match d.abs() {
        a if a == 0.0 => 1.0,
        a if a == 1.0 => 0.5,
        _ => (PI * (m - k)).sin() / (PI * (d + 1.0) * d * (d - 1.0)),
    }
}

pub(crate) fn identities() -> Vec<Identity> {
    const I: Complex64 = Complex64::new(0.0, 1.0);
    vec![
        Def::assert(
            "eq30_l1",
            "(30) line 1: sum (-1)^n t^n k_{2n}(x) = (1-t)^{a+1} e^{-x} sum t^n L_n^{(a)}(2x)",
            1e-8,
            |p, c| power_sum(|n| Ok(sign(n as i64) * k2(n, p[2], c)?), p[1]),
            |p, _| {
                let (a, t, x) = (p[0], p[1], p[2]);
                let s = power_sum(|n| Ok(laguerre(n, a, 2.0 * x)), t)?;
                Ok((1.0 - t).powf(a + 1.0) * (-x).exp() * s)
            },
        )
        .grid(&["a", "t", "x"], product(&[&[0.0, 1.0], &[-0.5, 0.3, 0.6], XS]))
        .build(),
        Def::assert(
            "eq30_l2",
            "(30) line 2: sum t^n/(2^n n!) k_{2n+2}(x) = 2 e^{-(x+t/2)} sqrt(x/t) I_1(2 sqrt(xt))",
            1e-8,
            |p, c| {
                let (t, x) = (p[0], p[1]);
                fast_sum(|n| Ok((0.5 * t).powi(n as i32) / factorial(n) * k2(n + 1, x, c)?))
            },
            |p, _| {
                let (t, x) = (p[0], p[1]);
                Ok(2.0 * (-(x + 0.5 * t)).exp() * (x / t).sqrt() * bessel(BesselKind::I, 1.0, 2.0 * (x * t).sqrt())?)
            },
        )
        .grid(&["t", "x"], product(&[&[0.5, 1.0, 2.0], XS]))
        .build(),
        Def::assert(
            "eq30_l3",
            "(30) line 3: sum (-1)^n k_{4n+2}(x) = sin x",
            1e-8,
            |p, c| Ok(euler_genfn(p[0], -I, c)?.im),
            |p, _| Ok(p[0].sin()),
        )
        .over("x", &[0.5, 1.0, 2.0, 4.0])
        .note("Euler-transformed generating function at t = -i")
        .build(),
        Def::assert(
            "eq30_l4",
            "(30) line 3, second sum: sum (-1)^n k_{4n}(x) = cos x",
            1e-8,
            |p, c| Ok(euler_genfn(p[0], -I, c)?.re),
            |p, _| Ok(p[0].cos()),
        )
        .over("x", &[0.5, 1.0, 2.0, 4.0])
        .note("Euler-transformed generating function at t = -i")
        .build(),
        Def::assert(
            "eq31_l1",
            "(31) line 1: sum (n+1) t^n k_{2n+2}(x) = 2x e^{-x+[2xt/(1+t)]}/(1+t)^2",
            1e-8,
            |p, c| power_sum(|n| Ok((n + 1) as f64 * k2(n + 1, p[1], c)?), p[0]),
            |p, _| {
                let (t, x) = (p[0], p[1]);
                Ok(2.0 * x * (-x + 2.0 * x * t / (1.0 + t)).exp() / ((1.0 + t) * (1.0 + t)))
            },
        )
        .grid(&["t", "x"], product(&[TS_DISK, XS]))
        .build(),
        Def::diagnose(
            "eq31_l2",
            "(31) line 2: sum (-1)^n (2n+1) t^{2n} k_{2n+2}(x) = 2x e^{-x+2xt^2/(1+t^2)}/(1+t^2)^2 [(1-t^2) cos(2xt/(1+t^2)) + 2t sin(2xt/(1+t^2))]",
            |p, c| power_sum(|n| Ok(sign(n as i64) * (2 * n + 1) as f64 * k2(n + 1, p[1], c)?), p[0] * p[0]),
            |p, _| Ok(shabde_rhs(p[0], p[1]).0),
        )
        .grid(&["t", "x"], product(&[TS_DISK, XS]))
        .note("the right side is the real part of the line-1 sum at it, which selects k_{4n+2}; see eq31_l2_corrected")
        .build(),
        Def::assert(
            "eq31_l2_corrected",
            "(31) line 2, corrected: sum (-1)^n (2n+1) t^{2n} k_{4n+2}(x) = 2x e^{-x+2xt^2/(1+t^2)}/(1+t^2)^2 [(1-t^2) cos(2xt/(1+t^2)) + 2t sin(2xt/(1+t^2))]",
            1e-8,
            |p, c| power_sum(|n| Ok(sign(n as i64) * (2 * n + 1) as f64 * k2(2 * n + 1, p[1], c)?), p[0] * p[0]),
            |p, _| Ok(shabde_rhs(p[0], p[1]).0),
        )
        .grid(&["t", "x"], product(&[TS_DISK, XS]))
        .build(),
        Def::assert(
            "eq31_l3",
            "(31) line 3: sum (-1)^n (2n+2) t^{2n+1} k_{4n+4}(x) = 2x e^{-x+2xt^2/(1+t^2)}/(1+t^2)^2 [(1-t^2) sin(2xt/(1+t^2)) - 2t cos(2xt/(1+t^2))]",
            1e-8,
            |p, c| {
                let t = p[0];
                Ok(t * power_sum(|n| Ok(sign(n as i64) * (2 * n + 2) as f64 * k2(2 * n + 2, p[1], c)?), t * t)?)
            },
            |p, _| Ok(shabde_rhs(p[0], p[1]).1),
        )
        .grid(&["t", "x"], product(&[TS_DISK, XS]))
        .build(),
        Def::diagnose(
            "eq32_l1",
            "(32) line 1: sum (-1)^n t^n/n! k_{2n+2}(x) = sqrt(2x/t) e^{-(x+t)} J_1(2^{3/2} sqrt(xt))",
            |p, c| bessel_series(p[0], p[1], c),
            |p, _| {
                let (t, x) = (p[0], p[1]);
                Ok((2.0 * x / t).sqrt() * (-(x + t)).exp() * bessel(BesselKind::J, 1.0, 2f64.powf(1.5) * (x * t).sqrt())?)
            },
        )
        .grid(&["t", "x"], product(&[&[0.25, 0.5], XS]))
        .note("the exponent should read -x+t; see eq32_l1_corrected")
        .build(),
        Def::assert(
            "eq32_l1_corrected",
            "(32) line 1, corrected: sum (-1)^n t^n/n! k_{2n+2}(x) = sqrt(2x/t) e^{-x+t} J_1(2^{3/2} sqrt(xt))",
            1e-8,
            |p, c| bessel_series(p[0], p[1], c),
            |p, _| {
                let (t, x) = (p[0], p[1]);
                Ok((2.0 * x / t).sqrt() * (t - x).exp() * bessel(BesselKind::J, 1.0, 2f64.powf(1.5) * (x * t).sqrt())?)
            },
        )
        .grid(&["t", "x"], product(&[&[0.25, 0.5, 1.0], XS]))
        .build(),
        Def::diagnose(
            "eq32_l2",
            "(32) line 2: sum (-1)^n t^{2n}/(2n)! k_{2n+2}(x) = sqrt(2x/t) [-sin t ber'(2^{3/2} sqrt(xt)) + cos t bei'(2^{3/2} sqrt(xt))]",
            |p, c| {
                let (t, x) = (p[0], p[1]);
                fast_sum(|n| Ok(sign(n as i64) * t.powi(2 * n as i32) / factorial(2 * n) * k2(n + 1, x, c)?))
            },
            |p, _| {
                let (t, x) = (p[0], p[1]);
                let (r, berp, beip) = kelvin_args(x, t)?;
                Ok(r * (-t.sin() * berp + t.cos() * beip))
            },
        )
        .grid(&["t", "x"], product(&[&[0.25, 0.5], XS]))
        .note("the index should be 4n+2 and the right side needs a factor e^{-x}; see eq32_l2_corrected")
        .build(),
        Def::assert(
            "eq32_l2_corrected",
            "(32) line 2, corrected: sum (-1)^n t^{2n}/(2n)! k_{4n+2}(x) = e^{-x} sqrt(2x/t) [-sin t ber'(2^{3/2} sqrt(xt)) + cos t bei'(2^{3/2} sqrt(xt))]",
            1e-8,
            |p, c| {
                let (t, x) = (p[0], p[1]);
                fast_sum(|n| Ok(sign(n as i64) * t.powi(2 * n as i32) / factorial(2 * n) * k2(2 * n + 1, x, c)?))
            },
            |p, _| {
                let (t, x) = (p[0], p[1]);
                let (r, berp, beip) = kelvin_args(x, t)?;
                Ok((-x).exp() * r * (-t.sin() * berp + t.cos() * beip))
            },
        )
        .grid(&["t", "x"], product(&[&[0.25, 0.5, 1.0], XS]))
        .build(),
        Def::diagnose(
            "eq32_l3",
            "(32) line 3: sum (-1)^{n+1} t^{2n+1}/(2n+1)! k_{4n+4}(x) = sqrt(2x/t) [cos t ber'(2^{3/2} sqrt(xt)) + sin t bei'(2^{3/2} sqrt(xt))]",
            |p, c| kelvin_odd_series(p[0], p[1], c),
            |p, _| {
                let (t, x) = (p[0], p[1]);
                let (r, berp, beip) = kelvin_args(x, t)?;
                Ok(r * (t.cos() * berp + t.sin() * beip))
            },
        )
        .grid(&["t", "x"], product(&[&[0.25, 0.5], XS]))
        .note("the right side needs a factor e^{-x}; see eq32_l3_corrected")
        .build(),
        Def::assert(
            "eq32_l3_corrected",
            "(32) line 3, corrected: sum (-1)^{n+1} t^{2n+1}/(2n+1)! k_{4n+4}(x) = e^{-x} sqrt(2x/t) [cos t ber'(2^{3/2} sqrt(xt)) + sin t bei'(2^{3/2} sqrt(xt))]",
            1e-8,
            |p, c| kelvin_odd_series(p[0], p[1], c),
            |p, _| {
                let (t, x) = (p[0], p[1]);
                let (r, berp, beip) = kelvin_args(x, t)?;
                Ok((-x).exp() * r * (t.cos() * berp + t.sin() * beip))
            },
        )
        .grid(&["t", "x"], product(&[&[0.25, 0.5, 1.0], XS]))
        .build(),
        Def::assert(
            "eq33_l1",
            "(33) line 1: sum (-1)^n t^{2n+1} k_{4n+2}(x) = e^{x(t^2-1)/(1+t^2)} sin(2xt/(1+t^2)), |t| < 1",
            1e-8,
            |p, c| {
                let t = p[0];
                Ok(t * power_sum(|n| Ok(sign(n as i64) * k2(2 * n + 1, p[1], c)?), t * t)?)
            },
            |p, _| {
                let (t, x) = (p[0], p[1]);
                Ok((x * (t * t - 1.0) / (1.0 + t * t)).exp() * (2.0 * x * t / (1.0 + t * t)).sin())
            },
        )
        .grid(&["t", "x"], product(&[TS_DISK, XS]))
        .build(),
        Def::assert(
            "eq33_l2",
            "(33) line 2: sum (-1)^n t^{2n} k_{4n}(x) = e^{x(t^2-1)/(1+t^2)} cos(2xt/(1+t^2)), |t| < 1",
            1e-8,
            |p, c| power_sum(|n| Ok(sign(n as i64) * k2(2 * n, p[1], c)?), p[0] * p[0]),
            |p, _| {
                let (t, x) = (p[0], p[1]);
                Ok((x * (t * t - 1.0) / (1.0 + t * t)).exp() * (2.0 * x * t / (1.0 + t * t)).cos())
            },
        )
        .grid(&["t", "x"], product(&[TS_DISK, XS]))
        .build(),
        Def::assert(
            "eq33_l3",
            "(33) line 3: sum (-1)^n k_{4n+2}(x) = sin x",
            1e-8,
            |p, c| Ok(euler_genfn(p[0], -I, c)?.im),
            |p, _| Ok(p[0].sin()),
        )
        .over("x", XS)
        .note("Euler-transformed generating function at t = -i")
        .build(),
        Def::assert(
            "eq33_l4",
            "(33) line 3, second sum: sum (-1)^n k_{4n}(x) = cos x",
            1e-8,
            |p, c| Ok(euler_genfn(p[0], -I, c)?.re),
            |p, _| Ok(p[0].cos()),
        )
        .over("x", XS)
        .note("Euler-transformed generating function at t = -i")
        .build(),
        Def::assert(
            "eq34_l1",
            "(34) line 1: sum k_{2n}(x) sin(2n theta) = sin(x tan theta)",
            1e-8,
            |p, c| Ok(euler_genfn(p[1], -Complex64::from_polar(1.0, 2.0 * p[0]), c)?.im),
            |p, _| Ok((p[1] * p[0].tan()).sin()),
        )
        .grid(&["theta", "x"], product(&[&[0.2, 0.4, 0.6, 0.8], XS]))
        .note("Euler-transformed generating function at t = -e^{2i theta}")
        .build(),
        Def::diagnose(
            "eq34_l2",
            "(34) line 2: sum k_{2n}(x) sin(2n theta) = sin(x tan theta)",
            |p, c| Ok(euler_genfn(p[1], -Complex64::from_polar(1.0, 2.0 * p[0]), c)?.im),
            |p, _| Ok((p[1] * p[0].tan()).sin()),
        )
        .grid(&["theta", "x"], product(&[&[0.2, 0.4, 0.6, 0.8], XS]))
        .note("repeats line 1 verbatim; the intended companion identity is not known and is not guessed")
        .build(),
        Def::assert(
            "eq34_sum_unity",
            "(34) line 3: sum k_{2n}(x) = 1",
            1e-8,
            |p, c| Ok(euler_genfn(p[0], Complex64::new(-1.0, 0.0), c)?.re),
            |_, _| Ok(1.0),
        )
        .over("x", &[0.5, 1.0, 2.0, 4.0])
        .note("Euler-transformed generating function at t = -1")
        .build(),
        Def::assert(
            "eq35_orth_diag",
            "(35) line 1: int_0^inf [k_{2n}(x)]^2 dx = 1 (n > 0), 1/2 (n = 0)",
            1e-8,
            |p, c| quad_decay(|x| Ok(k2(p[0] as u32, x, c)?.powi(2)), c),
            |p, _| Ok(if p[0] == 0.0 { 0.5 } else { 1.0 }),
        )
        .over("n", &[0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0])
        .build(),
        Def::assert(
            "eq35_orth_off",
            "(35) line 2: int_0^inf k_{2n}(x) k_{2n+2k}(x) dx = 0 (k > 0)",
            1e-8,
            |p, c| {
                let (n, kk) = (p[0] as u32, p[1] as u32);
                quad_decay(|x| Ok(k2(n, x, c)? * k2(n + kk, x, c)?), c)
            },
            |_, _| Ok(0.0),
        )
        .grid(&["n", "k"], product(&[&[0.0, 1.0, 2.0, 3.0, 4.0], &[2.0, 3.0, 4.0]]))
        .note(
            "sampled at k >= 2; at k = 1 the integral is 1/2 (as the full-line relation eq36_fullline gives), \
             and the k = 0 case of this line contradicts line 1 for n > 0",
        )
        .build(),
        Def::assert(
            "eq35_weighted",
            "(35) line 3: int_0^inf k_n(x) k_{2k}(x)/x dx = 4 sin[(pi/2)(2k-n)]/(pi n (2k-n)), k > 0",
            1e-8,
            |p, c| {
                let (n, kk) = (p[0], p[1] as u32);
                quad_decay(|x| Ok(k(n, x, c)? * k2(kk, x, c)? / x), c)
            },
            |p, _| {
                let (n, kk) = (p[0], p[1]);
                let d = 2.0 * kk - n;
                if d == 0.0 {
                    // removable point: the limit of sin(πd/2)/d is π/2
                    Ok(2.0 / n)
                } else {
                    Ok(4.0 * (0.5 * PI * d).sin() / (PI * n * d))
                }
            },
        )
        .grid(&["n", "k"], product(&[&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0], &[1.0, 2.0, 3.0]]))
        .note("at n = 2k the printed quotient is 0/0 and its limit 2/n is used")
        .build(),
        Def::assert(
            "eq36_fullline",
            "(36) line 1: int_{-inf}^{inf} k_{2k}(x) k_{2m}(x) dx = sin[pi(m-k)]/(pi (k-m+1)(k-m)(k-m-1))",
            1e-8,
            |p, c| {
                let (a, b) = (2.0 * p[0], 2.0 * p[1]);
                let pos = quad_decay(|x| Ok(k(a, x, c)? * k(b, x, c)?), c)?;
                let neg = quad_decay(|y| Ok(k(a, -y, c)? * k(b, -y, c)?), c)?;
                Ok(pos + neg)
            },
            |p, _| Ok(full_line_printed(p[0], p[1])),
        )
        .grid(
            &["k", "m"],
            vec![
                vec![0.0, 0.0],
                vec![1.0, 1.0],
                vec![2.0, 2.0],
                vec![0.0, 1.0],
                vec![1.0, 2.0],
                vec![0.0, 2.0],
                vec![1.0, 3.0],
            ],
        )
        .note(
            "the integral converges because k_{2n}(x) = 0 for nx < 0, n != 0; \
             the right side is taken at its removable limits, 1 at k = m and 1/2 at |k-m| = 1",
        )
        .build(),
        Def::diagnose(
            "eq36_pv",
            "(36) line 2: PV int_{-inf}^{inf} k_{2k+1}(x) k_{2m+1}(x) dx/x = 0 (k != m), 2/(pi(2k+1)) (k = m)",
            |p, c| odd_pv(2.0 * p[0] + 1.0, 2.0 * p[1] + 1.0, c),
            |p, _| Ok(if p[0] == p[1] { FRAC_2_PI / (2.0 * p[0] + 1.0) } else { 0.0 }),
        )
        .grid(&["k", "m"], PV_PAIRS.iter().map(|r| r.to_vec()).collect())
        .note(
            "the diagonal value is 2/(2k+1): at k = 0, k_1(x)^2 - k_1(-x)^2 = (16x^2/pi^2) K_0 K_1 and \
             int x K_0 K_1 dx = pi^2/8 give 2, not 2/pi; see eq36_pv_corrected",
        )
        .build(),
        Def::assert(
            "eq36_pv_corrected",
            "(36) line 2, corrected: PV int_{-inf}^{inf} k_{2k+1}(x) k_{2m+1}(x) dx/x = 0 (k != m), 2/(2k+1) (k = m)",
            1e-8,
            |p, c| odd_pv(2.0 * p[0] + 1.0, 2.0 * p[1] + 1.0, c),
            |p, _| Ok(if p[0] == p[1] { 2.0 / (2.0 * p[0] + 1.0) } else { 0.0 }),
        )
        .grid(&["k", "m"], PV_PAIRS.iter().map(|r| r.to_vec()).collect())
        .build(),
    ]
}

// Σ (−1)^n t^n/n! k_{2n+2}(x)
fn bessel_series(t: f64, x: f64, c: &QuadConfig) -> Result<f64> {
    fast_sum(|n| Ok(sign(n as i64) * t.powi(n as i32) / factorial(n) * k2(n + 1, x, c)?))
}

// Σ (−1)^{n+1} t^{2n+1}/(2n+1)! k_{4n+4}(x)
fn kelvin_odd_series(t: f64, x: f64, c: &QuadConfig) -> Result<f64> {
    fast_sum(|n| Ok(sign(n as i64 + 1) * t.powi(2 * n as i32 + 1) / factorial(2 * n + 1) * k2(2 * n + 2, x, c)?))
}

// Real and imaginary part of 2x e^{−x+2xit/(1+it)}/(1+it)².
fn shabde_rhs(t: f64, x: f64) -> (f64, f64) {
    let q = 1.0 + t * t;
    let phi = 2.0 * x * t / q;
    let pre = 2.0 * x * (-x + 2.0 * x * t * t / q).exp() / (q * q);
    let (s, co) = phi.sin_cos();
    (
        pre * ((1.0 - t * t) * co + 2.0 * t * s),
        pre * ((1.0 - t * t) * s - 2.0 * t * co),
    )
}

const PV_PAIRS: [[f64; 2]; 6] = [[0.0, 0.0], [1.0, 1.0], [2.0, 2.0], [0.0, 1.0], [1.0, 2.0], [0.0, 2.0]];

// PV ∫_{−∞}^{∞} k_a(x) k_b(x) dx/x as the symmetric limit
// ∫_0^∞ [k_a(x)k_b(x) − k_a(−x)k_b(−x)] dx/x, whose integrand is regular at 0.
fn odd_pv(a: f64, b: f64, c: &QuadConfig) -> Result<f64> {
    quad_decay(|x| Ok((k(a, x, c)? * k(b, x, c)? - k(a, -x, c)? * k(b, -x, c)?) / x), c)
}
