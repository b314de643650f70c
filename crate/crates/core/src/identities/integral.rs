use std::f64::consts::{FRAC_PI_2, PI};

use super::eval::{diff, h, hx, k, ki, kx, quad, sign};
use super::{product, Def, Identity};
use crate::integral::{bessel_integral_ji, ki_quadrature, ki_sequence, ki_special_zero};
use crate::quadrature::QuadConfig;
use crate::special::{bessel, binomial, laguerre, BesselKind};
use crate::Result;

const NS: &[f64] = &[1.0, 2.0, 3.0, 4.0, 5.0];
const XS: &[f64] = &[0.5, 1.0, 2.0, 4.0];

fn ji(n: f64, x: f64, c: &QuadConfig) -> Result<f64> {
    bessel_integral_ji(n as u32, x, c).map(|r| r.value)
}

fn j(n: f64, x: f64) -> Result<f64> {
    bessel(BesselKind::J, n, x)
}

fn kin(n: f64, x: f64, c: &QuadConfig) -> Result<f64> {
    ki(n as u32, x, c)
}

// (−1)^m C(n, m) terms of the second and fourth series forms.
fn alt_binomial(n: f64, m: u32) -> f64 {
    sign(m as i64) * binomial(n as u32, m)
}

pub(crate) fn identities() -> Vec<Identity> {
    let nx = product(&[NS, XS]);
    vec![
        Def::assert(
            "eq81_ji",
            "(81): Ji_v(x) = -int_x^inf J_v(t)/t dt, so x Ji'_v(x) = J_v(x)",
            1e-7,
            |p, c| Ok(p[1] * diff(|t| ji(p[0], t, c), p[1], 1, 0.05)?),
            |p, _| j(p[0], p[1]),
        )
        .grid(&["v", "x"], product(&[&[0.0, 1.0, 2.0, 3.0], &[0.5, 1.0, 2.0, 5.0]]))
        .note("Richardson derivative of the tail integral")
        .build(),
        Def::assert(
            "eq82_definition",
            "(82): ki_{2n}(x) = -int_x^inf k_{2n}(t)/t dt",
            1e-8,
            |p, c| kin(p[0], p[1], c),
            |p, c| ki_quadrature(p[0] as u32, p[1], c).map(|r| r.value),
        )
        .grid(
            &["n", "x"],
            product(&[&[0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 8.0, 9.0, 12.0, 20.0, 40.0], &[0.5, 1.0, 2.0, 4.0, 8.0]]),
        )
        .note("library values (Laguerre sum up to n = 8, recurrence above) against the defining integral")
        .build(),
        Def::assert(
            "eq83_l1",
            "(83) line 1: ki_{2n}(x) = int_0^x k_{2n}(t)/t dt + ki_{2n}(0)",
            1e-8,
            |p, c| kin(p[0], p[1], c),
            |p, c| Ok(quad(|t| Ok(k(2.0 * p[0], t, c)? / t), 0.0, p[1], c)? + ki_special_zero(p[0] as u32)?),
        )
        .grid(&["n", "x"], nx.clone())
        .build(),
        Def::assert(
            "eq83_zero",
            "(83) lines 2-3: ki_{2n}(0) = 0 for even n, -2/n for odd n",
            1e-6,
            |p, c| kin(p[0], 1e-7, c),
            |p, _| ki_special_zero(p[0] as u32),
        )
        .over("n", &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0, 11.0, 12.0])
        .note("the finite-x value at x = 1e-7 approaches the constant linearly")
        .build(),
        Def::assert(
            "eq84_l1",
            "(84) line 1: ki_{2n}(x) = (e^{-x}/n) sum_{k=1}^n (-2)^k C(n,k) L_{k-1}(x)",
            1e-8,
            |p, _| {
                let n = p[0] as u32;
                let s: f64 = (1..=n)
                    .map(|kk| (-2f64).powi(kk as i32) * binomial(n, kk) * laguerre(kk - 1, 0.0, p[1]))
                    .sum();
                Ok((-p[1]).exp() * s / p[0])
            },
            |p, c| ki_quadrature(p[0] as u32, p[1], c).map(|r| r.value),
        )
        .grid(&["n", "x"], nx.clone())
        .build(),
        Def::diagnose(
            "eq84_l2",
            "(84) line 2: ki_{2n}(x) = (1/(nx))[n k_{2n}(x) - 2 sum_m (-1)^m C(n,m)(m k_{2m}(2x) + (m+1) k_{2m+2}(2x) - 2 k_0(2x))]",
            |p, c| kin(p[0], p[1], c),
            |p, c| {
                let x2 = 2.0 * p[1];
                let mut s = 0.0;
                for m in 1..=p[0] as u32 {
                    let mf = m as f64;
                    s += alt_binomial(p[0], m)
                        * (mf * k(2.0 * mf, x2, c)? + (mf + 1.0) * k(2.0 * mf + 2.0, x2, c)? - 2.0 * k(0.0, x2, c)?);
                }
                Ok((p[0] * k(2.0 * p[0], p[1], c)? - 2.0 * s) / (p[0] * p[1]))
            },
        )
        .grid(&["n", "x"], nx.clone())
        .note("the printed sign uses the undefined index k; read as (-1)^m")
        .build(),
        Def::diagnose(
            "eq84_l3",
            "(84) line 3: ki_{2n}(x) = ((-1)^{n-1} e^x/2^{n+1}) sum_{m=1}^n m k_{2k}(x)",
            |p, c| kin(p[0], p[1], c),
            |p, c| {
                let mut s = 0.0;
                for m in 1..=p[0] as u32 {
                    s += m as f64 * k(2.0 * m as f64, p[1], c)?;
                }
                Ok(sign(p[0] as i64 - 1) * p[1].exp() / 2f64.powi(p[0] as i32 + 1) * s)
            },
        )
        .grid(&["n", "x"], nx.clone())
        .note("the summand index k is undefined; read as k_{2m}")
        .build(),
        Def::assert(
            "eq84_l4",
            "(84) line 4: L_{n-1}(x) = (e^x/2^n) sum_{m=1}^n (-1)^m C(n,m) m ki_{2m}(x)",
            1e-9,
            |p, _| Ok(laguerre(p[0] as u32 - 1, 0.0, p[1])),
            |p, c| {
                let mut s = 0.0;
                for m in 1..=p[0] as u32 {
                    s += alt_binomial(p[0], m) * m as f64 * ki(m, p[1], c)?;
                }
                Ok(p[1].exp() / 2f64.powi(p[0] as i32) * s)
            },
        )
        .grid(&["n", "x"], nx.clone())
        .relative()
        .build(),
        Def::assert(
            "eq84_l5",
            "(84) line 5: ki_2(x) = -2 k_0(x)",
            1e-12,
            |p, c| ki_quadrature(1, p[0], c).map(|r| r.value),
            |p, c| Ok(-2.0 * k(0.0, p[0], c)?),
        )
        .over("x", &[0.25, 0.5, 1.0, 2.0, 4.0, 8.0])
        .note("the defining integral against the closed form")
        .build(),
        Def::assert(
            "eq85_l1",
            "(85) line 1: k_{2n}(x) = [(n-1) ki_{2n-2}(x) - (n+1) ki_{2n+2}(x)]/2",
            1e-7,
            |p, c| k(2.0 * p[0], p[1], c),
            |p, c| {
                let n = p[0];
                Ok(((n - 1.0) * ki_quadrature(n as u32 - 1, p[1], c)?.value
                    - (n + 1.0) * ki_quadrature(n as u32 + 1, p[1], c)?.value)
                    / 2.0)
            },
        )
        .grid(&["n", "x"], product(&[&[1.0, 2.0, 3.0, 4.0], &[0.5, 1.0, 2.0]]))
        .note("ki by its defining integral, so the check is independent of the library recurrence")
        .build(),
        Def::diagnose(
            "eq85_l2",
            "(85) line 2: n ki_{2n}(x) + (n+1) ki_{2n+2}(x) = -2 sum_{k=0}^n ki_{2k}(x)",
            |p, c| Ok(p[0] * kin(p[0], p[1], c)? + (p[0] + 1.0) * kin(p[0] + 1.0, p[1], c)?),
            |p, c| {
                let seq = ki_sequence(p[0] as u32, p[1], c)?;
                Ok(-2.0 * seq.iter().sum::<f64>())
            },
        )
        .grid(&["n", "x"], nx.clone())
        .note("the right side sums the Bateman functions themselves; see eq85_l2_corrected")
        .build(),
        Def::assert(
            "eq85_l2_corrected",
            "(85) line 2, corrected: n ki_{2n}(x) + (n+1) ki_{2n+2}(x) = -2 sum_{k=0}^n k_{2k}(x)",
            1e-8,
            |p, c| {
                let n = p[0] as u32;
                Ok(p[0] * ki_quadrature(n, p[1], c)?.value + (p[0] + 1.0) * ki_quadrature(n + 1, p[1], c)?.value)
            },
            |p, c| {
                let mut s = 0.0;
                for m in 0..=p[0] as u32 {
                    s += k(2.0 * m as f64, p[1], c)?;
                }
                Ok(-2.0 * s)
            },
        )
        .grid(&["n", "x"], nx.clone())
        .build(),
        Def::assert(
            "eq85_l3",
            "(85) line 3: x ki'_{2n}(x) = [(n-1) ki_{2n-2}(x) - (n+1) ki_{2n+2}(x)]/2",
            1e-6,
            |p, c| Ok(p[1] * diff(|t| kin(p[0], t, c), p[1], 1, 0.05)?),
            |p, c| Ok(((p[0] - 1.0) * kin(p[0] - 1.0, p[1], c)? - (p[0] + 1.0) * kin(p[0] + 1.0, p[1], c)?) / 2.0),
        )
        .grid(&["n", "x"], nx.clone())
        .build(),
        Def::assert(
            "eq85_l4",
            "(85) line 4: x ki'_{2n}(x) = k_{2n}(x)",
            1e-6,
            |p, c| Ok(p[1] * diff(|t| kin(p[0], t, c), p[1], 1, 0.05)?),
            |p, c| k(2.0 * p[0], p[1], c),
        )
        .grid(&["n", "x"], product(&[&[1.0, 2.0, 3.0], XS]))
        .note("derivative by Richardson extrapolation")
        .build(),
        Def::assert(
            "eq86_l1",
            "(86) line 1: (n+1)[Ji_{n+1} ki_{2n-2} - Ji_{n-1} ki_{2n+2}] = 2x Ji_{n-1} ki'_{2n} - 2n Ji'_n ki_{2n-2}",
            1e-6,
            |p, c| {
                let (n, x) = (p[0], p[1]);
                Ok((n + 1.0)
                    * (ji(n + 1.0, x, c)? * kin(n - 1.0, x, c)? - ji(n - 1.0, x, c)? * kin(n + 1.0, x, c)?))
            },
            |p, c| {
                let (n, x) = (p[0], p[1]);
                let dki = diff(|t| kin(n, t, c), x, 1, 0.05)?;
                let dji = diff(|t| ji(n, t, c), x, 1, 0.05)?;
                Ok(2.0 * x * ji(n - 1.0, x, c)? * dki - 2.0 * n * dji * kin(n - 1.0, x, c)?)
            },
        )
        .grid(&["n", "x"], product(&[&[1.0, 2.0, 3.0], &[0.5, 1.0, 2.0]]))
        .note("derivatives by Richardson extrapolation")
        .build(),
        Def::diagnose(
            "eq86_l2",
            "(86) line 2: sum_{m=1}^inf (-1)^m m ki_{2m}(x) ki_{2m}(y) = J_0(2 sqrt(xy))",
            |p, c| {
                let (sx, sy) = (ki_sequence(400, p[0], c)?, ki_sequence(400, p[1], c)?);
                Ok((1..=400).map(|m| sign(m as i64) * m as f64 * sx[m] * sy[m]).sum())
            },
            |p, _| j(0.0, 2.0 * (p[0] * p[1]).sqrt()),
        )
        .grid(&["x", "y"], vec![vec![0.5, 0.5], vec![0.5, 1.0], vec![1.0, 2.0]])
        .note("400-term partial sums; they settle near values unrelated to J_0")
        .build(),
        Def::assert(
            "eq88_l1",
            "(88) line 1: ki_{2n}(x) = (pi/2)[k'_{2n}(x) h_{2n}(x) - h'_{2n}(x) k_{2n}(x)]",
            1e-5,
            |p, c| kin(p[0], p[1], c),
            |p, c| {
                let nu = 2.0 * p[0];
                let x = p[1];
                Ok(FRAC_PI_2 * (kx(nu, x, 1, c)? * h(nu, x, c)? - hx(nu, x, 1, c)? * k(nu, x, c)?))
            },
        )
        .grid(&["n", "x"], product(&[&[1.0, 2.0, 3.0], &[0.5, 1.0, 2.0]]))
        .build(),
        Def::assert(
            "eq88_l2",
            "(88) line 2: ki_{2n} = (pi/(8x))[(2n+2)(k_{2n} h_{2n+2} - k_{2n+2} h_{2n}) - (2n-2)(k_{2n} h_{2n-2} - k_{2n-2} h_{2n})]",
            1e-8,
            |p, c| kin(p[0], p[1], c),
            |p, c| {
                let (n, x) = (2.0 * p[0], p[1]);
                let cross = |m: f64| -> Result<f64> { Ok(k(n, x, c)? * h(m, x, c)? - k(m, x, c)? * h(n, x, c)?) };
                Ok(PI / (8.0 * x) * ((n + 2.0) * cross(n + 2.0)? - (n - 2.0) * cross(n - 2.0)?))
            },
        )
        .grid(&["n", "x"], product(&[&[1.0, 2.0, 3.0], &[0.5, 1.0, 2.0]]))
        .build(),
    ]
}
