use std::f64::consts::{LN_2, PI, SQRT_2};

use super::eval::{k, ki, quad, quad_decay, sign};
use super::{product, Def, Identity};
use crate::integral::bessel_integral_ji;
use crate::quadrature::QuadConfig;
use crate::special::{bessel, factorial, gamma, hermite, laguerre, BesselKind};
use crate::Result;

// J_n for any integer order, through J_{−n} = (−1)^n J_n.
fn jn(n: i64, x: f64) -> Result<f64> {
    let v = bessel(BesselKind::J, n.unsigned_abs() as f64, x)?;
    Ok(if n < 0 { sign(n) * v } else { v })
}

fn ji(n: u32, x: f64, c: &QuadConfig) -> Result<f64> {
    bessel_integral_ji(n, x, c).map(|r| r.value)
}

fn kin(n: f64, x: f64, c: &QuadConfig) -> Result<f64> {
    ki(n as u32, x, c)
}

// Integrand of the Bessel-difference integrals, regular at t = 0.
fn bessel_diff(n: u32, t: f64, c: &QuadConfig) -> Result<f64> {
    Ok((jn(n as i64, t)? - k(2.0 * n as f64, t, c)?) / t)
}

// ∫_0^x g(x − t) ki_{2n}(t) dt.
fn conv(g: impl Fn(f64) -> f64, n: u32, x: f64, c: &QuadConfig) -> Result<f64> {
    quad(|t| Ok(g(x - t) * ki(n, t, c)?), 0.0, x, c)
}

pub(crate) fn identities() -> Vec<Identity> {
    let xs = &[0.5, 1.0, 2.0];
    let mut out = vec![
        Def::assert(
            "A01_beta_laguerre_corrected",
            "(A.1), corrected: int_0^1 (1-t)^{b-1} e^{at} k_{2n}(at) dt = 2a (-1)^{n-1}(n-1)! Gamma(b)/Gamma(b+n+1) L_{n-1}^{(b+1)}(2a)",
            1e-8,
            |p, c| {
                let (n, a, b) = (p[0], p[1], p[2]);
                quad(|t| Ok((1.0 - t).powf(b - 1.0) * (a * t).exp() * k(2.0 * n, a * t, c)?), 0.0, 1.0, c)
            },
            |p, _| {
                let (n, a, b) = (p[0], p[1], p[2]);
                Ok(2.0 * a * sign(n as i64 - 1) * factorial(n as u32 - 1) * gamma(b)? / gamma(b + n + 1.0)?
                    * laguerre(n as u32 - 1, b + 1.0, 2.0 * a))
            },
        )
        .grid(&["n", "a", "b"], product(&[&[1.0, 2.0, 3.0], &[0.5, 1.0], &[1.0, 1.5, 2.0]]))
        .note("printed without the factor 2a; k_{2n}(y) = (-1)^{n-1}(2y/n) e^{-y} L_{n-1}^{(1)}(2y) and the Laguerre beta integral supply it")
        .build(),
        Def::assert(
            "A02_convolution",
            "(A.2): int_0^x k_{2m}(t) k_{2n}(x-t) dt = (1/2)[k_{2m+2n-2}(x) + 2 k_{2m+2n}(x) + k_{2m+2n+2}(x)]",
            1e-8,
            |p, c| {
                let (m, n, x) = (p[0], p[1], p[2]);
                quad(|t| Ok(k(2.0 * m, t, c)? * k(2.0 * n, x - t, c)?), 0.0, x, c)
            },
            |p, c| {
                let (s, x) = (2.0 * (p[0] + p[1]), p[2]);
                Ok(0.5 * (k(s - 2.0, x, c)? + 2.0 * k(s, x, c)? + k(s + 2.0, x, c)?))
            },
        )
        .grid(&["m", "n", "x"], product(&[&[1.0, 2.0, 3.0], &[1.0, 2.0], xs]))
        .build(),
        Def::assert(
            "A03_bessel_diff",
            "(A.3): int_0^x (J_0 - k_0)/t dt = Ji_0(x) - ki_0(x) + ln 2; int_0^x (J_n - k_{2n})/t dt = Ji_n(x) - ki_{2n}(x) + (-1)^n/n",
            1e-8,
            |p, c| quad(|t| bessel_diff(p[0] as u32, t, c), 0.0, p[1], c),
            |p, c| {
                let n = p[0] as u32;
                let konst = if n == 0 { LN_2 } else { sign(n as i64) / p[0] };
                Ok(ji(n, p[1], c)? - ki(n, p[1], c)? + konst)
            },
        )
        .grid(&["n", "x"], product(&[&[0.0, 1.0, 2.0, 3.0], xs]))
        .build(),
        Def::assert(
            "A04_bessel_moment",
            "(A.4): int_0^inf J_0(2 sqrt(at)) k_{2n}(t) dt = ((-1)^{n-1}/2)[(n-1) ki_{2n-2}(a) - 2n ki_{2n}(a) + (n+1) ki_{2n+2}(a)]",
            1e-8,
            |p, c| quad_decay(|t| Ok(jn(0, 2.0 * (p[1] * t).sqrt())? * k(2.0 * p[0], t, c)?), c),
            |p, c| {
                let (n, a) = (p[0], p[1]);
                Ok(sign(n as i64 - 1) / 2.0
                    * ((n - 1.0) * kin(n - 1.0, a, c)? - 2.0 * n * kin(n, a, c)? + (n + 1.0) * kin(n + 1.0, a, c)?))
            },
        )
        .grid(&["n", "a"], product(&[&[1.0, 2.0, 3.0], xs]))
        .build(),
        Def::assert(
            "A05_bessel_ki",
            "(A.5): int_0^inf J_0(2 sqrt(at)) k_{2n}(t) dt/t = (-1)^n ki_{2n}(a)",
            1e-8,
            |p, c| quad_decay(|t| Ok(jn(0, 2.0 * (p[1] * t).sqrt())? * k(2.0 * p[0], t, c)? / t), c),
            |p, c| Ok(sign(p[0] as i64) * kin(p[0], p[1], c)?),
        )
        .grid(&["n", "a"], product(&[&[1.0, 2.0, 3.0], xs]))
        .build(),
        Def::assert(
            "A06_bessel_j1_corrected",
            "(A.6), corrected: int_0^inf e^{-t} J_1(2^{3/2} sqrt(xt)) k_{2n}(t) dt/sqrt(t) = (-1)^{n-1} x^{n-1/2} e^{-x}/(sqrt(2) n!)",
            1e-8,
            |p, c| {
                let (n, x) = (p[0], p[1]);
                quad_decay(|t| Ok((-t).exp() * jn(1, 2.0 * SQRT_2 * (x * t).sqrt())? * k(2.0 * n, t, c)? / t.sqrt()), c)
            },
            |p, _| {
                let (n, x) = (p[0], p[1]);
                Ok(sign(n as i64 - 1) * x.powf(n - 0.5) * (-x).exp() / (SQRT_2 * factorial(n as u32)))
            },
        )
        .grid(&["n", "x"], product(&[&[1.0, 2.0, 3.0], xs]))
        .note("printed with the measure dt/t, which fails; dt/sqrt(t) reproduces the right side exactly")
        .build(),
        Def::assert(
            "A07_laplace_j1",
            "(A.7): int_0^inf e^{-at} t^{n+1/2} J_1(2 sqrt(xt)) dt = (-1)^n Gamma(n+2) e^{-x/(2a)}/(a^{n+1} sqrt(x)) k_{2n+2}(x/(2a))",
            1e-8,
            |p, c| {
                let (n, a, x) = (p[0], p[1], p[2]);
                quad_decay(|t| Ok((-a * t).exp() * t.powf(n + 0.5) * jn(1, 2.0 * (x * t).sqrt())?), c)
            },
            |p, c| {
                let (n, a, x) = (p[0], p[1], p[2]);
                Ok(sign(n as i64) * gamma(n + 2.0)? * (-x / (2.0 * a)).exp() / (a.powf(n + 1.0) * x.sqrt())
                    * k(2.0 * n + 2.0, x / (2.0 * a), c)?)
            },
        )
        .grid(&["n", "a", "x"], product(&[&[0.0, 1.0, 2.0], &[1.0, 2.0], xs]))
        .build(),
        Def::assert(
            "A08_bessel_diff",
            "(A.8): int_0^x (J_n - k_{2n})/t dt = Ji_n(x) - ki_{2n}(x) + (-1)^n/n",
            1e-8,
            |p, c| quad(|t| bessel_diff(p[0] as u32, t, c), 0.0, p[1], c),
            |p, c| Ok(ji(p[0] as u32, p[1], c)? - kin(p[0], p[1], c)? + sign(p[0] as i64) / p[0]),
        )
        .grid(&["n", "x"], product(&[&[1.0, 2.0, 3.0, 4.0], &[0.5, 1.0, 2.0, 5.0]]))
        .note("repeats the second line of the previous entry")
        .build(),
        Def::assert(
            "A09_bessel_weighted_corrected",
            "(A.9), corrected: int_0^inf t^{n/2-1} e^{-t} J_{2-n}(4 sqrt(xt)) k_{2n}(t) dt = (x^{n/2-1} e^{-x}/2) k_{2n}(x)",
            1e-8,
            |p, c| {
                let (n, x) = (p[0], p[1]);
                quad_decay(
                    |t| Ok(t.powf(n / 2.0 - 1.0) * (-t).exp() * jn(2 - n as i64, 4.0 * (x * t).sqrt())? * k(2.0 * n, t, c)?),
                    c,
                )
            },
            |p, c| {
                let (n, x) = (p[0], p[1]);
                Ok(x.powf(n / 2.0 - 1.0) * (-x).exp() / 2.0 * k(2.0 * n, x, c)?)
            },
        )
        .grid(&["n", "x"], product(&[&[1.0, 2.0, 3.0], xs]))
        .note("printed with an extra 1/t in the measure (off by factors 2-4 at n = 2, 3)")
        .build(),
        Def::diagnose(
            "A10_bessel_product",
            "(A.10): int_0^inf e^{-bt^2} J_l(a r) J_v(a r)/(t r^{l+v}) k_{2n+2}(bt^2) dt = (-1)^n J_l(ax) J_v(ax)/((2n+2) x^{l+v}), r = sqrt(t^2+x^2)",
            |p, c| {
                let (l, v, a, b, x, n) = (p[0], p[1], p[2], p[3], p[4], p[5]);
                quad_decay(
                    |t| {
                        let r = (t * t + x * x).sqrt();
                        Ok((-b * t * t).exp() * bessel(BesselKind::J, l, a * r)? * bessel(BesselKind::J, v, a * r)?
                            / (t * r.powf(l + v))
                            * k(2.0 * n + 2.0, b * t * t, c)?)
                    },
                    c,
                )
            },
            |p, _| {
                let (l, v, a, x, n) = (p[0], p[1], p[2], p[4], p[5]);
                Ok(sign(n as i64) * bessel(BesselKind::J, l, a * x)? * bessel(BesselKind::J, v, a * x)?
                    / ((2.0 * n + 2.0) * x.powf(l + v)))
            },
        )
        .grid(
            &["lambda", "nu", "a", "b", "x", "n"],
            product(&[&[0.0, 1.0], &[0.0, 1.0], &[1.0], &[1.0], &[0.5, 1.0], &[0.0, 1.0]]),
        )
        .note("heavy parameter family sampled at a = b = 1 and small integer orders")
        .build(),
        Def::assert(
            "A11_hermite",
            "(A.11): int_0^pi U_{2n}(sqrt(x) cos(theta)) sin^2(theta) d(theta) = (pi (2n)! e^{x/2}/(2x n!)) k_{2n+2}(x/2), U_n = H_n",
            1e-10,
            |p, _| {
                let (n, x) = (p[0] as u32, p[1]);
                quad(|th: f64| Ok(hermite(2 * n, x.sqrt() * th.cos()) * th.sin().powi(2)), 0.0, PI, &QuadConfig::default())
            },
            |p, c| {
                let (n, x) = (p[0], p[1]);
                Ok(PI * factorial(2 * n as u32) * (0.5 * x).exp() / (2.0 * x * factorial(n as u32)) * k(2.0 * n + 2.0, 0.5 * x, c)?)
            },
        )
        .grid(&["n", "x"], product(&[&[0.0, 1.0, 2.0, 3.0], xs]))
        .relative()
        .note("U_n is the physicists' Hermite polynomial")
        .build(),
    ];
    type Kernel = fn(f64) -> f64;
    type Closed = fn(f64) -> f64;
    let convs: [(&'static str, &'static str, u32, Kernel, Closed); 6] = [
        (
            "A12_sin_conv",
            "(A.12): int_0^x sin(x-t) ki_2(t) dt = cos x - sin x - e^{-x}",
            1,
            f64::sin,
            |x| x.cos() - x.sin() - (-x).exp(),
        ),
        (
            "A13_cos_conv_corrected",
            "(A.13), corrected: int_0^x cos(x-t) ki_2(t) dt = e^{-x} - cos x - sin x",
            1,
            f64::cos,
            |x| (-x).exp() - x.cos() - x.sin(),
        ),
        (
            "A14_sinh_conv",
            "(A.14): int_0^x sinh(x-t) ki_2(t) dt = e^{-x}(1+x) - cosh x",
            1,
            f64::sinh,
            |x| (-x).exp() * (1.0 + x) - x.cosh(),
        ),
        (
            "A15_cosh_conv",
            "(A.15): int_0^x cosh(x-t) ki_2(t) dt = -x e^{-x} - sinh x",
            1,
            f64::cosh,
            |x| -x * (-x).exp() - x.sinh(),
        ),
        (
            "A16_exp_conv",
            "(A.16): int_0^x e^{x-t} ki_2(t) dt = -2 sinh x",
            1,
            f64::exp,
            |x| -2.0 * x.sinh(),
        ),
        (
            "A17_texp_conv",
            "(A.17): int_0^x (x-t) e^{x-t} ki_4(t) dt = sinh x - x cosh x",
            2,
            |u| u * u.exp(),
            |x| x.sinh() - x * x.cosh(),
        ),
    ];
    for (id, cit, n, g, closed) in convs {
        out.push(
            Def::assert(
                id,
                cit,
                1e-8,
                move |p, c| conv(g, n, p[0], c),
                move |p, _| Ok(closed(p[0])),
            )
            .over("x", xs)
            .build(),
        );
    }
    out.extend([
        Def::assert(
            "A18_laplace_ki0",
            "(A.18): int_0^inf e^{-at} ki_0(bt) dt = (1/a) ln(b/(a+b))",
            1e-8,
            |p, c| quad_decay(|t| ki(0, p[1] * t, c).map(|v| (-p[0] * t).exp() * v), c),
            |p, _| Ok((p[1] / (p[0] + p[1])).ln() / p[0]),
        )
        .grid(&["a", "b"], product(&[&[0.5, 1.0, 2.0], &[0.5, 1.0, 2.0]]))
        .build(),
        Def::assert(
            "A19_frullani",
            "(A.19): int_0^inf (ki_2(at) - ki_2(bt))/t dt = 2 ln(a/b)",
            1e-8,
            |p, c| quad_decay(|t| Ok((ki(1, p[0] * t, c)? - ki(1, p[1] * t, c)?) / t), c),
            |p, _| Ok(2.0 * (p[0] / p[1]).ln()),
        )
        .grid(
            &["a", "b"],
            vec![vec![0.5, 1.0], vec![1.0, 2.0], vec![2.0, 0.5], vec![3.0, 1.0]],
        )
        .build(),
        Def::assert(
            "A20_bessel_ki",
            "(A.20): int_0^inf J_0(2 sqrt(at)) ki_{2n}(t) dt = (-1)^n k_{2n}(a)/a",
            1e-8,
            |p, c| quad_decay(|t| Ok(jn(0, 2.0 * (p[1] * t).sqrt())? * kin(p[0], t, c)?), c),
            |p, c| Ok(sign(p[0] as i64) * k(2.0 * p[0], p[1], c)? / p[1]),
        )
        .grid(&["n", "a"], product(&[&[1.0, 2.0, 3.0], xs]))
        .build(),
    ]);
    out
}
