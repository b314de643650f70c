use std::f64::consts::{FRAC_PI_2, PI};

use super::eval::{diff, fourier, k, kg, quad};
use super::{product, Def, Identity};
use crate::quadrature::QuadConfig;
use crate::special::{gamma, hyp_kummer_m};
use crate::Result;

#[derive(Clone, Copy)]
enum Part {
    /// `cos(x tanθ / 2) cos(nθ)`
    U,
    /// `sin(x tanθ / 2) sin(nθ)`
    V,
    /// `cos(x tanθ / 2 + nθ)`
    I,
}

/// `∫_0^{π/2} cos^{α−1}θ · T(x, θ) dθ` over `t = tanθ`, where the
/// amplitude `(1+t²)^{−(α+1)/2}` decays for `α > −1`.
fn giuliani(part: Part, alpha: f64, n: f64, x: f64, c: &QuadConfig) -> Result<f64> {
    let env = |t: f64| {
        let w = (1.0 + t * t).powf(-0.5 * (alpha + 1.0));
        let (s, co) = (n * t.atan()).sin_cos();
        match part {
            Part::U => (w * co, 0.0),
            Part::V => (0.0, w * s),
            Part::I => (w * co, -w * s),
        }
    };
    fourier(env, 0.5 * x, c)
}

fn d(part: Part, alpha: f64, n: f64, x: f64, order: u32, c: &QuadConfig) -> Result<f64> {
    if order == 0 {
        return giuliani(part, alpha, n, x, c);
    }
    diff(|t| giuliani(part, alpha, n, t, c), x, order, 0.05)
}

/// `∫_0^{π/2} cos^α θ sin^{β−1} θ cos(x tanθ + nθ) dθ`.
fn bateman_giuliani(alpha: f64, beta: f64, n: f64, x: f64, c: &QuadConfig) -> Result<f64> {
    let env = |t: f64| {
        let w = t.powf(beta - 1.0) * (1.0 + t * t).powf(-0.5 * (alpha + beta + 1.0));
        let (s, co) = (n * t.atan()).sin_cos();
        (w * co, -w * s)
    };
    fourier(env, x, c)
}

fn bg_d(alpha: f64, beta: f64, n: f64, x: f64, order: u32, c: &QuadConfig) -> Result<f64> {
    if order == 0 {
        return bateman_giuliani(alpha, beta, n, x, c);
    }
    diff(|t| bateman_giuliani(alpha, beta, n, t, c), x, order, 0.05)
}

// ∫_0^1 t^k (1−t)^{n−1} e^{−2x/t} dt with t = 1 − u^{1/n}.
fn beta_exp(kk: f64, n: f64, x: f64, c: &QuadConfig) -> Result<f64> {
    let v = quad(
        |u| {
            let t = 1.0 - u.powf(1.0 / n);
            Ok(if t <= 0.0 {
                0.0
            } else {
                t.powf(kk) * (-2.0 * x / t).exp()
            })
        },
        0.0,
        1.0,
        c,
    )?;
    Ok(v / n)
}

fn ode_grid() -> Vec<Vec<f64>> {
    product(&[&[3.5, 5.0], &[1.0, 2.0], &[0.5, 1.0, 2.0]])
}

pub(crate) fn identities() -> Vec<Identity> {
    let names = &["alpha", "n", "x"];
    vec![
        Def::assert(
            "B01_kummer_series",
            "(B.1): 1F1(a;b;x) = 1 + (a/b) x/1! + a(a+1)/(b(b+1)) x^2/2! + ...",
            1e-12,
            |p, _| hyp_kummer_m(p[0], p[1], p[2]),
            |p, _| {
                let (a, b, x) = (p[0], p[1], p[2]);
                let (mut term, mut sum) = (1.0, 1.0);
                for j in 0..200 {
                    let jf = j as f64;
                    term *= (a + jf) / (b + jf) * x / (jf + 1.0);
                    sum += term;
                }
                Ok(sum)
            },
        )
        .grid(&["a", "b", "x"], product(&[&[0.5, 1.5], &[2.0, 3.5], &[0.5, 1.0, 2.0]]))
        .relative()
        .note("the library Kummer function against 200 terms of its series")
        .build(),
        Def::assert(
            "B02_giuliani",
            "(B.2): I(x) = int_0^{pi/2} cos^{a-1}(theta) cos((x/2) tan(theta) + n theta) d(theta) = (pi/2) k_{-n,a-1}(x/2)",
            1e-8,
            |p, c| giuliani(Part::I, p[0], p[1], p[2], c),
            |p, c| Ok(FRAC_PI_2 * kg(-p[1], p[0] - 1.0, 0.0, 0.5 * p[2], c)?),
        )
        .grid(names, ode_grid())
        .note("the index of k is -n: the kernel phase is +n theta")
        .build(),
        Def::assert(
            "B03_giuliani_ode",
            "(B.3): 4x I'' - 4(a-1) I' - (x+2n) I = 0",
            1e-5,
            |p, c| {
                let (a, n, x) = (p[0], p[1], p[2]);
                Ok(4.0 * x * d(Part::I, a, n, x, 2, c)? - 4.0 * (a - 1.0) * d(Part::I, a, n, x, 1, c)?
                    - (x + 2.0 * n) * d(Part::I, a, n, x, 0, c)?)
            },
            |_, _| Ok(0.0),
        )
        .grid(names, ode_grid())
        .note("I by quadrature, derivatives by Richardson extrapolation")
        .build(),
        Def::assert(
            "B05_split",
            "(B.4)-(B.5): I = U_n(a,x) - V_n(a,x)",
            1e-10,
            |p, c| giuliani(Part::I, p[0], p[1], p[2], c),
            |p, c| Ok(giuliani(Part::U, p[0], p[1], p[2], c)? - giuliani(Part::V, p[0], p[1], p[2], c)?),
        )
        .grid(names, ode_grid())
        .build(),
        Def::assert(
            "B06_first_order_u",
            "(B.6) line 1: 2(a-1) U_n'(a,x) + (x/2) U_n(a-2,x) - n V_n(a,x) = 0",
            1e-5,
            |p, c| {
                let (a, n, x) = (p[0], p[1], p[2]);
                Ok(2.0 * (a - 1.0) * d(Part::U, a, n, x, 1, c)? + 0.5 * x * d(Part::U, a - 2.0, n, x, 0, c)?
                    - n * d(Part::V, a, n, x, 0, c)?)
            },
            |_, _| Ok(0.0),
        )
        .grid(names, ode_grid())
        .build(),
        Def::assert(
            "B06_first_order_v",
            "(B.6) line 2: 2(a-1) V_n'(a,x) + (x/2) V_n(a-2,x) - n U_n(a,x) = 0",
            1e-5,
            |p, c| {
                let (a, n, x) = (p[0], p[1], p[2]);
                Ok(2.0 * (a - 1.0) * d(Part::V, a, n, x, 1, c)? + 0.5 * x * d(Part::V, a - 2.0, n, x, 0, c)?
                    - n * d(Part::U, a, n, x, 0, c)?)
            },
            |_, _| Ok(0.0),
        )
        .grid(names, ode_grid())
        .build(),
        Def::assert(
            "B07_second_order_u",
            "(B.7) line 1: 2x U_n'' - 2(a-1) U_n' - (x/2) U_n + n V_n = 0",
            1e-5,
            |p, c| {
                let (a, n, x) = (p[0], p[1], p[2]);
                Ok(2.0 * x * d(Part::U, a, n, x, 2, c)? - 2.0 * (a - 1.0) * d(Part::U, a, n, x, 1, c)?
                    - 0.5 * x * d(Part::U, a, n, x, 0, c)?
                    + n * d(Part::V, a, n, x, 0, c)?)
            },
            |_, _| Ok(0.0),
        )
        .grid(names, ode_grid())
        .build(),
        Def::assert(
            "B07_second_order_v",
            "(B.7) line 2: 2x V_n'' - 2(a-1) V_n' - (x/2) V_n + n U_n = 0",
            1e-5,
            |p, c| {
                let (a, n, x) = (p[0], p[1], p[2]);
                Ok(2.0 * x * d(Part::V, a, n, x, 2, c)? - 2.0 * (a - 1.0) * d(Part::V, a, n, x, 1, c)?
                    - 0.5 * x * d(Part::V, a, n, x, 0, c)?
                    + n * d(Part::U, a, n, x, 0, c)?)
            },
            |_, _| Ok(0.0),
        )
        .grid(names, ode_grid())
        .build(),
        Def::diagnose(
            "B08_fourth_order",
            "(B.8) line 1: 4x^2 U'''' - 8(a-2)x U''' - 2[x^2 - 2(a-1)(a-2)] U'' + 2x(a-2) U' - (x^2/4 + n^2 + 1 - a) U = 0",
            |p, c| {
                let (a, n, x) = (p[0], p[1], p[2]);
                let u = |o| d(Part::U, a, n, x, o, c);
                Ok(4.0 * x * x * u(4)? - 8.0 * (a - 2.0) * x * u(3)? - 2.0 * (x * x - 2.0 * (a - 1.0) * (a - 2.0)) * u(2)?
                    + 2.0 * x * (a - 2.0) * u(1)?
                    - (0.25 * x * x + n * n + 1.0 - a) * u(0)?)
            },
            |_, _| Ok(0.0),
        )
        .grid(names, ode_grid())
        .note("eliminating V between the second-order pair gives +x^2/4 in the last coefficient; see B08_fourth_order_corrected")
        .build(),
        Def::assert(
            "B08_fourth_order_corrected",
            "(B.8) line 1, corrected: 4x^2 U'''' - 8(a-2)x U''' - 2[x^2 - 2(a-1)(a-2)] U'' + 2x(a-2) U' - (n^2 + 1 - a - x^2/4) U = 0",
            1e-5,
            |p, c| {
                let (a, n, x) = (p[0], p[1], p[2]);
                let u = |o| d(Part::U, a, n, x, o, c);
                Ok(4.0 * x * x * u(4)? - 8.0 * (a - 2.0) * x * u(3)? - 2.0 * (x * x - 2.0 * (a - 1.0) * (a - 2.0)) * u(2)?
                    + 2.0 * x * (a - 2.0) * u(1)?
                    - (n * n + 1.0 - a - 0.25 * x * x) * u(0)?)
            },
            |_, _| Ok(0.0),
        )
        .grid(names, ode_grid())
        .build(),
        Def::assert(
            "B08_v_from_u",
            "(B.8) line 2: V_n = (1/n)(-2x U_n'' + 2(a-1) U_n' + (x/2) U_n)",
            1e-5,
            |p, c| giuliani(Part::V, p[0], p[1], p[2], c),
            |p, c| {
                let (a, n, x) = (p[0], p[1], p[2]);
                let u = |o| d(Part::U, a, n, x, o, c);
                Ok((-2.0 * x * u(2)? + 2.0 * (a - 1.0) * u(1)? + 0.5 * x * u(0)?) / n)
            },
        )
        .grid(names, ode_grid())
        .build(),
        Def::diagnose(
            "B09_difference",
            "(B.9): U_n - V_n = pi Gamma(a-1) e^{-x/2}/(2^a Gamma((a-n+1)/2) Gamma((a+n+1)/2)) 1F1((a-n+1)/2; 1-a; x) - pi^2 cos((a-n)/2) x^a e^{-x/2}/(2^a sin(pi a) Gamma(a)) 1F1((a+n+1)/2; a+1; x)",
            |p, c| giuliani(Part::I, p[0], p[1], p[2], c),
            |p, _| {
                let (a, n, x) = (p[0], p[1], p[2]);
                let e = (-0.5 * x).exp() / 2f64.powf(a);
                Ok(PI * gamma(a - 1.0)? * e / (gamma(0.5 * (a - n + 1.0))? * gamma(0.5 * (a + n + 1.0))?)
                    * hyp_kummer_m(0.5 * (a - n + 1.0), 1.0 - a, x)?
                    - PI * PI * (0.5 * (a - n)).cos() * x.powf(a) * e / ((PI * a).sin() * gamma(a)?)
                        * hyp_kummer_m(0.5 * (a + n + 1.0), a + 1.0, x)?)
            },
        )
        .grid(names, product(&[&[3.5, 4.5], &[1.0, 2.0], &[0.5, 1.0, 2.0]]))
        .note("non-integer a keeps 1-a off the poles of 1F1")
        .build(),
        Def::diagnose(
            "B10_sum",
            "(B.10): U_n + V_n = pi Gamma(a-1) e^{-x/2}/(2^a Gamma((a+n+1)/2) Gamma((a-n+1)/2)) 1F1((1-a-n)/2; 1-a; x) - pi^2 cos((a+n)/2) x^a e^{-x/2}/(2^a sin(pi a) Gamma(a)) 1F1((a-n+1)/2; a+1; x)",
            |p, c| Ok(giuliani(Part::U, p[0], p[1], p[2], c)? + giuliani(Part::V, p[0], p[1], p[2], c)?),
            |p, _| {
                let (a, n, x) = (p[0], p[1], p[2]);
                let e = (-0.5 * x).exp() / 2f64.powf(a);
                Ok(PI * gamma(a - 1.0)? * e / (gamma(0.5 * (a + n + 1.0))? * gamma(0.5 * (a - n + 1.0))?)
                    * hyp_kummer_m(0.5 * (1.0 - a - n), 1.0 - a, x)?
                    - PI * PI * (0.5 * (a + n)).cos() * x.powf(a) * e / ((PI * a).sin() * gamma(a)?)
                        * hyp_kummer_m(0.5 * (a - n + 1.0), a + 1.0, x)?)
            },
        )
        .grid(names, product(&[&[3.5, 4.5], &[1.0, 2.0], &[0.5, 1.0, 2.0]]))
        .build(),
        Def::diagnose(
            "B11_k_minus",
            "(B.11): k_{-v,a,0}(x) = Gamma(a) e^{-x}/(2^a Gamma((a-v)/2+1) Gamma((a+v)/2)) 1F1((a-v)/2+1; -a; 2x) - pi cos((a-v+1)/2) x^{a+1} e^{-x}/(2^a sin(pi(a+1)) Gamma(a+1)) 1F1((a+v)/2+1; a+2; 2x)",
            |p, c| kg(-p[1], p[0], 0.0, p[2], c),
            |p, _| {
                let (a, v, x) = (p[0], p[1], p[2]);
                let e = (-x).exp() / 2f64.powf(a);
                Ok(gamma(a)? * e / (gamma(0.5 * (a - v) + 1.0)? * gamma(0.5 * (a + v))?)
                    * hyp_kummer_m(0.5 * (a - v) + 1.0, -a, 2.0 * x)?
                    - PI * (0.5 * (a - v + 1.0)).cos() * x.powf(a + 1.0) * e / ((PI * (a + 1.0)).sin() * gamma(a + 1.0)?)
                        * hyp_kummer_m(0.5 * (a + v) + 1.0, a + 2.0, 2.0 * x)?)
            },
        )
        .grid(&["alpha", "nu", "x"], product(&[&[2.5, 3.5], &[1.0, 2.0], &[0.5, 1.0, 2.0]]))
        .build(),
        Def::diagnose(
            "B12_k_plus",
            "(B.12): k_{v,a,0}(x) = Gamma(a) e^{-x}/(2^a Gamma((a+v)/2+1) Gamma((a-v)/2+1)) 1F1(-(a+v)/2; -a; 2x) - pi cos((a+v+1)/2) x^{a+1} e^{-x}/(2^a sin(pi(a+1)) Gamma(a+1)) 1F1((a-v)/2+1; a+2; 2x)",
            |p, c| kg(p[1], p[0], 0.0, p[2], c),
            |p, _| {
                let (a, v, x) = (p[0], p[1], p[2]);
                let e = (-x).exp() / 2f64.powf(a);
                Ok(gamma(a)? * e / (gamma(0.5 * (a + v) + 1.0)? * gamma(0.5 * (a - v) + 1.0)?)
                    * hyp_kummer_m(-0.5 * (a + v), -a, 2.0 * x)?
                    - PI * (0.5 * (a + v + 1.0)).cos() * x.powf(a + 1.0) * e / ((PI * (a + 1.0)).sin() * gamma(a + 1.0)?)
                        * hyp_kummer_m(0.5 * (a - v) + 1.0, a + 2.0, 2.0 * x)?)
            },
        )
        .grid(&["alpha", "nu", "x"], product(&[&[2.5, 3.5], &[1.0, 2.0], &[0.5, 1.0, 2.0]]))
        .build(),
        Def::assert(
            "B13_substitution",
            "(B.13): int_0^{pi/2} cos^a(theta) cos((x/2) tan(theta)) d(theta) = int_0^inf cos(xt/2)/(1+t^2)^{a/2+1} dt",
            1e-8,
            |p, c| quad(|th: f64| Ok(th.cos().powf(p[0]) * (0.5 * p[1] * th.tan()).cos()), 0.0, FRAC_PI_2, c),
            |p, c| fourier(|t| ((1.0 + t * t).powf(-0.5 * p[0] - 1.0), 0.0), 0.5 * p[1], c),
        )
        .grid(&["alpha", "x"], product(&[&[3.0, 4.0, 5.5], &[0.5, 1.0, 2.0]]))
        .note("the theta side by finite quadrature; alpha >= 3 damps the endpoint oscillation")
        .build(),
        Def::assert(
            "B14_third_order",
            "(B.14): x I''' - (a-1) I'' - (x+n) I' - b I = 0 for I = int_0^{pi/2} cos^a sin^{b-1} cos(x tan + n theta) d(theta)",
            1e-5,
            |p, c| {
                let (a, b, n, x) = (p[0], p[1], p[2], p[3]);
                let i = |o| bg_d(a, b, n, x, o, c);
                Ok(x * i(3)? - (a - 1.0) * i(2)? - (x + n) * i(1)? - b * i(0)?)
            },
            |_, _| Ok(0.0),
        )
        .grid(&["alpha", "beta", "n", "x"], product(&[&[3.5, 5.0], &[1.0, 2.0], &[1.0, 2.0], &[0.5, 1.0, 2.0]]))
        .build(),
        Def::diagnose(
            "B15_bateman_integral",
            "(B.15): int_0^{pi/2} cos^a sin^{b-1} cos(x tan(theta) + n theta) d(theta) = (pi/2) k_{n,a,b-1}(x)",
            |p, c| bateman_giuliani(p[0], p[1], p[2], p[3], c),
            |p, c| Ok(FRAC_PI_2 * kg(p[2], p[0], p[1] - 1.0, p[3], c)?),
        )
        .grid(&["alpha", "beta", "n", "x"], product(&[&[3.5, 5.0], &[1.0, 2.0], &[1.0, 2.0], &[0.5, 1.0, 2.0]]))
        .note("the kernel phase is +n theta, so the index of k must be -n; see B15_bateman_integral_corrected")
        .build(),
        Def::assert(
            "B15_bateman_integral_corrected",
            "(B.15), corrected: int_0^{pi/2} cos^a sin^{b-1} cos(x tan(theta) + n theta) d(theta) = (pi/2) k_{-n,a,b-1}(x)",
            1e-8,
            |p, c| bateman_giuliani(p[0], p[1], p[2], p[3], c),
            |p, c| Ok(FRAC_PI_2 * kg(-p[2], p[0], p[1] - 1.0, p[3], c)?),
        )
        .grid(&["alpha", "beta", "n", "x"], product(&[&[3.5, 5.0], &[1.0, 2.0], &[1.0, 2.0], &[0.5, 1.0, 2.0]]))
        .build(),
        Def::assert(
            "B16_l1",
            "(B.16) line 1: int_0^{pi/2} cos^m(theta) cos(x tan(theta) + (m+2n) theta) d(theta) = (e^x sin(pi n)/2^{k+1}) int_0^1 t^k (1-t)^{n-1} e^{-2x/t} dt",
            1e-6,
            |p, c| Ok(FRAC_PI_2 * kg(-(p[0] + 2.0 * p[1]), p[0], 0.0, p[2], c)?),
            |p, c| {
                let (m, n, x) = (p[0], p[1], p[2]);
                Ok(x.exp() * (PI * n).sin() / 2f64.powf(m + 1.0) * beta_exp(m, n, x, c)?)
            },
        )
        .grid(&["m", "n", "x"], product(&[&[0.0, 1.0, 2.0], &[0.5, 1.5], &[0.5, 1.0, 2.0]]))
        .note("the exponent k is read as m")
        .build(),
        Def::assert(
            "B16_l2",
            "(B.16) line 2: int_0^{pi/2} cos(x tan(theta) + 2n theta) d(theta) = (e^x sin(pi n)/2) int_0^1 (1-t)^{n-1} e^{-2x/t} dt = (pi/2) k_{-2n}(x)",
            1e-6,
            |p, c| Ok(FRAC_PI_2 * k(-2.0 * p[0], p[1], c)?),
            |p, c| Ok(p[1].exp() * (PI * p[0]).sin() / 2.0 * beta_exp(0.0, p[0], p[1], c)?),
        )
        .grid(&["n", "x"], product(&[&[0.5, 1.5], &[0.5, 1.0, 2.0]]))
        .build(),
    ]
}
