//! Integer-order Bateman functions: generating function, values at zero,
//! bounds, closed forms, the `k_1` Bessel route, recurrences and symmetry.

use std::f64::consts::{FRAC_2_PI, FRAC_PI_2, PI};

use num_complex::Complex64;

use super::eval::{diff, fourier, k, kx, sign};
use super::{product, Def, Identity};
use crate::functions::bateman_k_quadrature;
use crate::special::{bessel, factorial, gamma, BesselKind};
use crate::Result;

const XS: &[f64] = &[0.5, 1.0, 2.0, 4.0];
const XS_CLOSED: &[f64] = &[0.25, 0.5, 1.0, 2.0, 4.0, 8.0];

/// `k_{2n}(x) e^{x}` from the tabulated polynomials, `n ≤ 6`.
pub(crate) fn tabulated_poly(n: u32, x: f64) -> f64 {
    let p = match n {
        0 => return 1.0,
        1 => 2.0,
        2 => 2.0 * (x - 1.0),
        3 => 2.0 / 3.0 * ((2.0 * x - 6.0) * x + 3.0),
        4 => 2.0 / 3.0 * (((x - 6.0) * x + 9.0) * x - 3.0),
        5 => 2.0 / 15.0 * ((((2.0 * x - 20.0) * x + 60.0) * x - 60.0) * x + 15.0),
        6 => 2.0 / 45.0 * (((((2.0 * x - 30.0) * x + 150.0) * x - 300.0) * x + 225.0) * x - 45.0),
        _ => unreachable!("no tabulated polynomial for n = {n}"),
    };
    x * p
}

// Coefficients (ascending powers) of the same polynomials.
fn tabulated_coeffs(n: u32) -> Vec<f64> {
    let inner: (f64, &[f64]) = match n {
        1 => (2.0, &[1.0]),
        2 => (2.0, &[-1.0, 1.0]),
        3 => (2.0 / 3.0, &[3.0, -6.0, 2.0]),
        4 => (2.0 / 3.0, &[-3.0, 9.0, -6.0, 1.0]),
        5 => (2.0 / 15.0, &[15.0, -60.0, 60.0, -20.0, 2.0]),
        6 => (2.0 / 45.0, &[-45.0, 225.0, -300.0, 150.0, -30.0, 2.0]),
        _ => unreachable!(),
    };
    let mut c = vec![0.0];
    c.extend(inner.1.iter().map(|v| inner.0 * v));
    c
}

// `k_{2n} e^{x} = (−1)^n x R(x)/n!` where `d^n/dx^n [x^{n−1} e^{−2x}] = R e^{−2x}`.
fn rodrigues_coeffs(n: u32) -> Vec<f64> {
    let mut r = vec![0.0; n as usize];
    r[n as usize - 1] = 1.0;
    for _ in 0..n {
        let mut next = vec![0.0; r.len()];
        for (j, &c) in r.iter().enumerate() {
            next[j] -= 2.0 * c;
            if j > 0 {
                next[j - 1] += j as f64 * c;
            }
        }
        r = next;
    }
    let scale = sign(n as i64) / factorial(n);
    let mut out = vec![0.0];
    out.extend(r.iter().map(|c| scale * c));
    out
}

/// Taylor coefficient of `e^{−x(1+t)/(1−t)}` at `t = 0` by the trapezoidal
/// rule on the circle `|t| = 1/2`.
fn genfn_coefficient(n: u32, x: f64) -> f64 {
    const M: usize = 64;
    const R: f64 = 0.5;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..M {
        let phi = 2.0 * PI * j as f64 / M as f64;
        let t = Complex64::from_polar(R, phi);
        let f = (-x * (1.0 + t) / (1.0 - t)).exp();
        acc += f * Complex64::from_polar(1.0, -(n as f64) * phi);
    }
    acc.re / (M as f64 * R.powi(n as i32))
}

fn bound_excess(value: f64, bound: f64) -> f64 {
    (value.abs() - bound).max(0.0)
}

// (2/π) ∫_0^∞ cos(xt) (1+t²)^{−3/2} dt and (2/π) ∫_0^∞ t sin(xt) (1+t²)^{−3/2} dt.
fn k1_parts(x: f64, c: &crate::QuadConfig) -> Result<(f64, f64)> {
    let cos_part = fourier(|t| ((1.0 + t * t).powf(-1.5), 0.0), x, c)?;
    let sin_part = fourier(|t| (0.0, t * (1.0 + t * t).powf(-1.5)), x, c)?;
    Ok((FRAC_2_PI * cos_part, FRAC_2_PI * sin_part))
}

fn bk(nu: f64, x: f64) -> Result<f64> {
    bessel(BesselKind::K, nu, x)
}

// The cosine transform ∫_0^∞ cos(xt) (1+t²)^{−α} dt is
// 2^{1/2−α} √π / Γ(α) · x^{α−1/2} K_{α−1/2}(x); its x-derivative is
// −2^{1/2−α} √π / Γ(α) · x^{α−1/2} K_{α−3/2}(x).
fn cos_transform_closed_d1(alpha: f64, x: f64) -> Result<f64> {
    let mu = alpha - 0.5;
    Ok(-(2f64.powf(-mu) * PI.sqrt() / gamma(alpha)?) * x.powf(mu) * bk(mu - 1.0, x)?)
}

// x-derivative of odd order 2n+1 of the closed cosine transform, n ≤ 1.
fn cos_transform_odd_derivative(n: u32, alpha: f64, x: f64) -> Result<f64> {
    match n {
        0 => cos_transform_closed_d1(alpha, x),
        _ => diff(|y| cos_transform_closed_d1(alpha, y), x, 2, 0.1),
    }
}

pub(crate) fn identities() -> Vec<Identity> {
    vec![
        Def::assert(
            "eq9_genfn",
            "(9): e^{-x(1+t)/(1-t)} = sum t^n F_n(x), F_n(x) = (-1)^n k_{2n}(x)",
            1e-6,
            |p, _| Ok(genfn_coefficient(p[0] as u32, p[1])),
            |p, c| Ok(sign(p[0] as i64) * k(2.0 * p[0], p[1], c)?),
        )
        .grid(&["n", "x"], product(&[&[0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0], XS]))
        .note("Taylor coefficients from a 64-point trapezoidal rule on |t| = 1/2")
        .build(),
        Def::assert(
            "eq11_zero",
            "(11) line 1: k_n(0) = (2/(pi n)) sin(pi n/2), k_{2n}(0) = 0",
            1e-12,
            |p, c| Ok(bateman_k_quadrature(p[0], 0.0, c)?.value),
            |p, _| Ok(if (p[0] as i64) % 2 == 0 { 0.0 } else { 2.0 / (PI * p[0]) * (FRAC_PI_2 * p[0]).sin() }),
        )
        .over("n", &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0, 11.0, 12.0])
        .build(),
        Def::assert(
            "eq11_decay",
            "(11) line 2: lim_{x->inf} k_n(x) = lim_{x->inf} k'_n(x) = 0",
            1e-6,
            |p, c| Ok(k(p[0], p[1], c)?.abs().max(kx(p[0], p[1], 1, c)?.abs())),
            |_, _| Ok(0.0),
        )
        .grid(&["n", "x"], product(&[&[0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0], &[30.0, 40.0]]))
        .note("max(|k_n|, |k'_n|) at large x")
        .build(),
        Def::assert(
            "eq12_unit",
            "(12) line 1: |k_n(x)| <= 1",
            1e-9,
            |p, c| Ok(bound_excess(k(p[0], p[1], c)?, 1.0)),
            |_, _| Ok(0.0),
        )
        .grid(
            &["n", "x"],
            product(&[
                &[0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0, 11.0, 12.0],
                &[0.0, 0.1, 0.5, 1.0, 2.0, 3.0, 5.0, 7.5, 10.0],
            ]),
        )
        .note("asserted for x >= 0 only, since k_0(x) = e^{-x} exceeds 1 for x < 0; lhs is the excess over the bound")
        .build(),
        Def::assert(
            "eq12_n_over_x",
            "(12) line 2: |k_n(x)| <= |n/x|, n > 2",
            1e-9,
            |p, c| Ok(bound_excess(k(p[0], p[1], c)?, p[0] / p[1])),
            |_, _| Ok(0.0),
        )
        .grid(&["n", "x"], product(&[&[3.0, 4.0, 5.0, 6.0, 8.0], &[0.5, 1.0, 2.0, 4.0, 8.0, 16.0]]))
        .note("lhs is the excess over the bound")
        .build(),
        Def::assert(
            "eq12_n2_over_x2",
            "(12) line 2: |k_n(x)| <= |(n^2+2)/x^2|, n > 2",
            1e-9,
            |p, c| Ok(bound_excess(k(p[0], p[1], c)?, (p[0] * p[0] + 2.0) / (p[1] * p[1]))),
            |_, _| Ok(0.0),
        )
        .grid(&["n", "x"], product(&[&[3.0, 4.0, 5.0, 6.0, 8.0], &[0.5, 1.0, 2.0, 4.0, 8.0, 16.0]]))
        .note("lhs is the excess over the bound")
        .build(),
        Def::assert(
            "eq12_even",
            "(12) line 3: |k_{2n}(x)| <= |2n/x|, x > 1",
            1e-9,
            |p, c| Ok(bound_excess(k(2.0 * p[0], p[1], c)?, 2.0 * p[0] / p[1])),
            |_, _| Ok(0.0),
        )
        .grid(&["n", "x"], product(&[&[1.0, 2.0, 3.0, 4.0, 6.0], &[1.5, 2.0, 4.0, 8.0, 16.0]]))
        .note("lhs is the excess over the bound")
        .build(),
        Def::assert(
            "eq12_deriv",
            "(12) line 4: |k'_n(x)| <= |n/(2x)|",
            1e-9,
            |p, c| Ok(bound_excess(kx(p[0], p[1], 1, c)?, p[0] / (2.0 * p[1]))),
            |_, _| Ok(0.0),
        )
        .grid(&["n", "x"], product(&[&[2.0, 3.0, 4.0, 6.0], &[0.5, 1.0, 2.0, 4.0, 8.0]]))
        .note("n >= 2; n = 1 is eq12_deriv_n1; lhs is the excess over the bound")
        .build(),
        Def::diagnose(
            "eq12_deriv_n1",
            "(12) line 4 at n = 1: |k'_1(x)| <= |1/(2x)|",
            |p, c| Ok(bound_excess(kx(1.0, p[0], 1, c)?, 1.0 / (2.0 * p[0]))),
            |_, _| Ok(0.0),
        )
        .over("x", &[1.5, 1.8, 2.0, 2.2, 2.5, 3.0])
        .note("the bound is exceeded slightly near x = 2 (|k'_1(2)| = 0.25059); at n = 0 it fails outright since k'_0 = -e^{-x}")
        .build(),
        Def::assert(
            "eq13_havelock_l",
            "(13): k_{2n}(x) = (2/pi) L_n(x), L_r = int_0^{pi/2} cos(2r phi - k tan phi) dphi",
            1e-8,
            |p, c| {
                let m = 2.0 * p[0];
                let l = fourier(
                    |t| {
                        let (s, co) = (m * t.atan()).sin_cos();
                        let w = 1.0 / (1.0 + t * t);
                        (w * co, w * s)
                    },
                    p[1],
                    c,
                )?;
                Ok(FRAC_2_PI * l)
            },
            |p, c| k(2.0 * p[0], p[1], c),
        )
        .grid(&["n", "x"], product(&[&[0.0, 1.0, 2.0, 3.0, 4.0], XS]))
        .build(),
        Def::assert(
            "eq13_havelock_m",
            "(13): h_{2n}(x) = -(2/pi) M_n(x), M_r = int_0^{pi/2} sin(2r phi - k tan phi) dphi",
            1e-8,
            |p, c| {
                let m = 2.0 * p[0];
                let mm = fourier(
                    |t| {
                        let (s, co) = (m * t.atan()).sin_cos();
                        let w = 1.0 / (1.0 + t * t);
                        (w * s, -w * co)
                    },
                    p[1],
                    c,
                )?;
                Ok(-FRAC_2_PI * mm)
            },
            |p, c| super::eval::h(2.0 * p[0], p[1], c),
        )
        .grid(&["n", "x"], product(&[&[0.0, 1.0, 2.0, 3.0, 4.0], XS]))
        .build(),
        Def::assert(
            "eq14_closed",
            "(14): k_0 = e^{-x}, k_2 = 2x e^{-x}, ..., k_12 = (2/45) x (2x^5 - 30x^4 + 150x^3 - 300x^2 + 225x - 45) e^{-x}",
            1e-12,
            |p, c| k(2.0 * p[0], p[1], c),
            |p, _| Ok(tabulated_poly(p[0] as u32, p[1]) * (-p[1]).exp()),
        )
        .grid(&["n", "x"], product(&[&[0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0], XS_CLOSED]))
        .relative()
        .note("Laguerre path against the tabulated polynomials")
        .build(),
        Def::assert(
            "eq15_rodrigues",
            "(15): k_{2n}(x) = ((-1)^n x e^x / n!) d^n/dx^n [x^{n-1} e^{-2x}]",
            1e-12,
            |p, _| Ok(rodrigues_coeffs(p[0] as u32)[p[1] as usize]),
            |p, _| Ok(tabulated_coeffs(p[0] as u32)[p[1] as usize]),
        )
        .grid(
            &["n", "j"],
            (1..=6u32).flat_map(|n| (0..=n).map(move |j| vec![n as f64, j as f64])).collect(),
        )
        .note("coefficient of x^j in k_{2n} e^x, against the tabulated polynomials")
        .build(),
        Def::assert(
            "eq17_laguerre",
            "(17): k_{2n}(x) = (-1)^n e^{-x} [L_n(2x) - L_{n-1}(2x)]",
            1e-8,
            |p, c| Ok(bateman_k_quadrature(2.0 * p[0], p[1], c)?.value),
            |p, c| k(2.0 * p[0], p[1], c),
        )
        .grid(&["n", "x"], product(&[&[0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0], XS_CLOSED]))
        .note("defining quadrature against the closed form")
        .build(),
        Def::assert(
            "eq18_split",
            "(18) lines 2-3: k_1(x) = (2/pi) int cos(xt)/(1+t^2)^{3/2} dt + (2/pi) int t sin(xt)/(1+t^2)^{3/2} dt",
            1e-8,
            |p, c| Ok(bateman_k_quadrature(1.0, p[0], c)?.value),
            |p, c| {
                let (a, b) = k1_parts(p[0], c)?;
                Ok(a + b)
            },
        )
        .over("x", XS)
        .build(),
        Def::diagnose(
            "eq18_l4",
            "(18) line 4: k_1(x) = (2/pi) int cos(xt)/(1+t^2)^{3/2} dt - (2x/pi) int cos(xt)/(1+t^2)^{1/2} dt",
            |p, c| Ok(bateman_k_quadrature(1.0, p[0], c)?.value),
            |p, c| {
                let (a, _) = k1_parts(p[0], c)?;
                let b = fourier(|t| ((1.0 + t * t).powf(-0.5), 0.0), p[0], c)?;
                Ok(a - FRAC_2_PI * p[0] * b)
            },
        )
        .over("x", XS)
        .note("integration by parts gives + for the second term; see eq18_l4_corrected")
        .build(),
        Def::assert(
            "eq18_l4_corrected",
            "(18) line 4, corrected: k_1(x) = (2/pi) int cos(xt)/(1+t^2)^{3/2} dt + (2x/pi) int cos(xt)/(1+t^2)^{1/2} dt",
            1e-8,
            |p, c| Ok(bateman_k_quadrature(1.0, p[0], c)?.value),
            |p, c| {
                let (a, _) = k1_parts(p[0], c)?;
                let b = fourier(|t| ((1.0 + t * t).powf(-0.5), 0.0), p[0], c)?;
                Ok(a + FRAC_2_PI * p[0] * b)
            },
        )
        .over("x", XS)
        .build(),
        Def::diagnose(
            "eq19_bessel",
            "(19): k_1(x) = (2x/pi)[K_1(x) - K_0(x)], x > 0; k_1(x) = -(2x/pi)[K_1(-x) + K_0(-x)], x < 0",
            |p, c| Ok(bateman_k_quadrature(1.0, p[0], c)?.value),
            |p, _| {
                let x = p[0];
                if x > 0.0 {
                    Ok(FRAC_2_PI * x * (bk(1.0, x)? - bk(0.0, x)?))
                } else {
                    Ok(-FRAC_2_PI * x * (bk(1.0, -x)? + bk(0.0, -x)?))
                }
            },
        )
        .over("x", &[-3.0, -1.0, -0.5, 0.5, 1.0, 3.0])
        .note("the signs of K_0 in the two branches are exchanged; see eq19_bessel_corrected")
        .build(),
        Def::assert(
            "eq19_bessel_corrected",
            "(19), corrected: k_1(x) = (2x/pi)[K_1(x) + K_0(x)], x > 0; k_1(x) = -(2x/pi)[K_1(-x) - K_0(-x)], x < 0",
            1e-8,
            |p, c| Ok(bateman_k_quadrature(1.0, p[0], c)?.value),
            |p, _| {
                let x = p[0];
                if x > 0.0 {
                    Ok(FRAC_2_PI * x * (bk(1.0, x)? + bk(0.0, x)?))
                } else {
                    Ok(-FRAC_2_PI * x * (bk(1.0, -x)? - bk(0.0, -x)?))
                }
            },
        )
        .over("x", &[-3.0, -1.0, -0.5, 0.5, 1.0, 3.0])
        .build(),
        Def::assert(
            "eq20_l1",
            "(20) line 1: (2x-2n) k_{2n}(x) = (n-1) k_{2n-2}(x) + (n+1) k_{2n+2}(x)",
            1e-8,
            |p, c| Ok((2.0 * p[1] - 2.0 * p[0]) * bateman_k_quadrature(2.0 * p[0], p[1], c)?.value),
            |p, c| {
                let (n, x) = (p[0], p[1]);
                Ok((n - 1.0) * k(2.0 * n - 2.0, x, c)? + (n + 1.0) * k(2.0 * n + 2.0, x, c)?)
            },
        )
        .grid(&["n", "x"], product(&[&[0.0, 1.0, 2.0, 3.0, 4.0, 5.0], XS]))
        .build(),
        Def::assert(
            "eq20_l2",
            "(20) line 2: 4x k'_n(x) = (n-2) k_{n-2}(x) - (n+2) k_{n+2}(x)",
            1e-8,
            |p, c| Ok(4.0 * p[1] * kx(p[0], p[1], 1, c)?),
            |p, c| {
                let (n, x) = (p[0], p[1]);
                Ok((n - 2.0) * k(n - 2.0, x, c)? - (n + 2.0) * k(n + 2.0, x, c)?)
            },
        )
        .grid(&["n", "x"], product(&[&[0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0], XS]))
        .build(),
        Def::assert(
            "eq20_l3",
            "(20) line 3: k'_n(x) + k'_{n+2}(x) = k_n(x) - k_{n+2}(x)",
            1e-8,
            |p, c| Ok(kx(p[0], p[1], 1, c)? + kx(p[0] + 2.0, p[1], 1, c)?),
            |p, c| Ok(k(p[0], p[1], c)? - k(p[0] + 2.0, p[1], c)?),
        )
        .grid(&["n", "x"], product(&[&[0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0], XS]))
        .build(),
        Def::assert(
            "eq20_l4",
            "(20) line 4: x k''_n(x) = (x-n) k_n(x)",
            1e-6,
            |p, c| Ok(p[1] * kx(p[0], p[1], 2, c)?),
            |p, c| Ok((p[1] - p[0]) * k(p[0], p[1], c)?),
        )
        .grid(&["n", "x"], product(&[&[0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0], XS]))
        .note("second derivative from the differentiated integral")
        .build(),
        Def::assert(
            "eq21_l1",
            "(21) line 1: k_3(x) = -(1/3)[4x dk_1(x)/dx + k_{-1}(x)]",
            1e-8,
            |p, c| Ok(bateman_k_quadrature(3.0, p[0], c)?.value),
            |p, c| Ok(-(4.0 * p[0] * kx(1.0, p[0], 1, c)? + k(-1.0, p[0], c)?) / 3.0),
        )
        .over("x", XS)
        .build(),
        Def::diagnose(
            "eq21_chain",
            "(21) lines 2-4: dk_1/dx = (2/pi)[K_1 - K_0] + (2x/pi)[K_1' - K_0'], K_1' = (K_2 + K_0)/2, K_0' = -K_1",
            |p, c| kx(1.0, p[0], 1, c),
            |p, _| {
                let x = p[0];
                let (k0, k1, k2) = (bk(0.0, x)?, bk(1.0, x)?, bk(2.0, x)?);
                Ok(FRAC_2_PI * (k1 - k0) + FRAC_2_PI * x * ((k2 + k0) / 2.0 + k1))
            },
        )
        .over("x", XS)
        .note("inherits the K_0 sign of the printed Bessel form, and K_1' = -(K_0 + K_2)/2")
        .build(),
        Def::assert(
            "eq22_kminus1",
            "(22): k_{-1}(x) = (2/pi) int cos(x tan t) cos t dt - (2/pi) int sin(x tan t) sin t dt",
            1e-8,
            |p, c| Ok(bateman_k_quadrature(-1.0, p[0], c)?.value),
            |p, c| {
                let (a, b) = k1_parts(p[0], c)?;
                Ok(a - b)
            },
        )
        .over("x", XS)
        .build(),
        Def::assert(
            "eq24_triple_angle",
            "(24): sin(3t) = t(3-t^2)/(1+t^2)^{3/2}, cos(3t) = (1-3t^2)/(1+t^2)^{3/2} with t = tan",
            1e-13,
            |p, _| Ok(if p[1] == 0.0 { (3.0 * p[0]).sin() } else { (3.0 * p[0]).cos() }),
            |p, _| {
                let t = p[0].tan();
                let d = (1.0 + t * t).powf(1.5);
                Ok(if p[1] == 0.0 { t * (3.0 - t * t) / d } else { (1.0 - 3.0 * t * t) / d })
            },
        )
        .grid(&["theta", "which"], product(&[&[0.1, 0.4, 0.7, 1.0, 1.3, 1.5], &[0.0, 1.0]]))
        .note("which = 0 for the sine, 1 for the cosine")
        .build(),
        Def::assert(
            "eq25_k3",
            "(25): k_3(x) = (2/pi) int (1-3t^2) cos(xt)/(1+t^2)^{5/2} dt + (2/pi) int t(3-t^2) sin(xt)/(1+t^2)^{5/2} dt",
            1e-8,
            |p, c| Ok(bateman_k_quadrature(3.0, p[0], c)?.value),
            |p, c| {
                let v = fourier(
                    |t| {
                        let d = (1.0 + t * t).powf(-2.5);
                        ((1.0 - 3.0 * t * t) * d, t * (3.0 - t * t) * d)
                    },
                    p[0],
                    c,
                )?;
                Ok(FRAC_2_PI * v)
            },
        )
        .over("x", XS)
        .build(),
        Def::assert(
            "eq26_l1",
            "(26) line 1: int t^{2n+1} sin(xt)/(1+t^2)^a dt = (-1)^{n+1} (2^{1/2-a} sqrt(pi)/G(a)) d^{2n+1}/dx^{2n+1} [x^{a-1/2} K_{a-1/2}(x)]",
            1e-6,
            |p, c| {
                let (n, a) = (p[0] as i32, p[1]);
                fourier(|t| (0.0, t.powi(2 * n + 1) * (1.0 + t * t).powf(-a)), p[2], c)
            },
            |p, _| Ok(sign(p[0] as i64 + 1) * cos_transform_odd_derivative(p[0] as u32, p[1], p[2])?),
        )
        .grid(&["n", "a", "x"], product(&[&[0.0, 1.0], &[2.0, 2.5, 3.0], &[0.5, 1.0, 2.0]]))
        .note("odd derivatives of the cosine transform; the third derivative by Richardson extrapolation")
        .build(),
        Def::diagnose(
            "eq26_l2",
            "(26) line 2: int t^{2n} sin(xt)/(1+t^2)^a dt = (-1)^n (2^{1/2-a} sqrt(pi)/G(a)) d^{2n+1}/dx^{2n+1} [x^{a-1/2} K_{a-1/2}(x)]",
            |p, c| {
                let (n, a) = (p[0] as i32, p[1]);
                fourier(|t| (0.0, t.powi(2 * n) * (1.0 + t * t).powf(-a)), p[2], c)
            },
            |p, _| Ok(sign(p[0] as i64) * cos_transform_odd_derivative(p[0] as u32, p[1], p[2])?),
        )
        .grid(&["n", "a", "x"], product(&[&[0.0, 1.0], &[2.0, 2.5, 3.0], &[0.5, 1.0, 2.0]]))
        .note("an even power of t pairs with a cosine kernel and an even derivative; the sine form is not a derivative of the Bessel expression")
        .build(),
        Def::assert(
            "eq27_double_angle",
            "(27): sin(2t) = 2 tan t/(1+tan^2 t), cos(2t) = (1-tan^2 t)/(1+tan^2 t)",
            1e-13,
            |p, _| Ok(if p[1] == 0.0 { (2.0 * p[0]).sin() } else { (2.0 * p[0]).cos() }),
            |p, _| {
                let t = p[0].tan();
                Ok(if p[1] == 0.0 { 2.0 * t / (1.0 + t * t) } else { (1.0 - t * t) / (1.0 + t * t) })
            },
        )
        .grid(&["theta", "which"], product(&[&[0.1, 0.4, 0.7, 1.0, 1.3, 1.5], &[0.0, 1.0]]))
        .note("which = 0 for the sine, 1 for the cosine")
        .build(),
        Def::assert(
            "eq28_l1",
            "(28) line 1: d^{2m} k_n/dx^{2m} = (-1)^m (2/pi) int (tan t)^{2m} cos(x tan t - n t) dt",
            1e-6,
            |p, c| {
                let (m, n, x) = (p[0] as u32, p[1], p[2]);
                if m == 0 {
                    k(n, x, c)
                } else {
                    diff(|y| k(n, y, c), x, 2 * m, 0.1)
                }
            },
            |p, c| {
                let (m, n, x) = (p[0] as i32, p[1], p[2]);
                let v = fourier(
                    |t| {
                        let w = t.powi(2 * m) / (1.0 + t * t);
                        let (s, co) = (n * t.atan()).sin_cos();
                        (w * co, w * s)
                    },
                    x,
                    c,
                )?;
                Ok(sign(m as i64) * FRAC_2_PI * v)
            },
        )
        .grid(&["m", "n", "x"], product(&[&[0.0, 1.0], &[0.0, 1.0, 2.0, 3.0], XS]))
        .note("lhs by Richardson differences of the closed forms; the m = 1 integral is an Abel limit")
        .build(),
        Def::diagnose(
            "eq28_l2",
            "(28) line 2: d^{2m+1} k_n/dx^{2m+1} = (-1)^m (2/pi) int (tan t)^{2m+1} sin(x tan t - n t) dt",
            |p, c| diff(|y| k(p[0], y, c), p[1], 1, 0.1),
            |p, c| {
                let (n, x) = (p[0], p[1]);
                let v = fourier(
                    |t| {
                        let w = t / (1.0 + t * t);
                        let (s, co) = (n * t.atan()).sin_cos();
                        (-w * s, w * co)
                    },
                    x,
                    c,
                )?;
                Ok(FRAC_2_PI * v)
            },
        )
        .grid(&["n", "x"], product(&[&[0.0, 1.0, 2.0, 3.0], XS]))
        .note("m = 0; differentiating the cosine kernel gives the factor (-1)^{m+1}; see eq28_l2_corrected")
        .build(),
        Def::assert(
            "eq28_l2_corrected",
            "(28) line 2, corrected: d^{2m+1} k_n/dx^{2m+1} = (-1)^{m+1} (2/pi) int (tan t)^{2m+1} sin(x tan t - n t) dt",
            1e-6,
            |p, c| diff(|y| k(p[0], y, c), p[1], 1, 0.1),
            |p, c| {
                let (n, x) = (p[0], p[1]);
                let v = fourier(
                    |t| {
                        let w = t / (1.0 + t * t);
                        let (s, co) = (n * t.atan()).sin_cos();
                        (-w * s, w * co)
                    },
                    x,
                    c,
                )?;
                Ok(-FRAC_2_PI * v)
            },
        )
        .grid(&["n", "x"], product(&[&[0.0, 1.0, 2.0, 3.0], XS]))
        .note("m = 0")
        .build(),
        Def::assert(
            "eq29_symmetry",
            "(29): k_{-n}(x) = k_n(-x)",
            1e-8,
            |p, c| Ok(bateman_k_quadrature(-p[0], p[1], c)?.value),
            |p, c| k(p[0], -p[1], c),
        )
        .grid(&["nu", "x"], product(&[&[0.5, 1.0, 2.0, 3.5], &[-3.0, -1.0, 0.5, 2.0]]))
        .note("quadrature at -nu against the dispatched evaluation at -x")
        .build(),
    ]
}
