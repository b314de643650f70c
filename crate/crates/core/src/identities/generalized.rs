use std::f64::consts::{FRAC_2_PI, FRAC_PI_2, PI};

use super::eval::{diff, fourier, h, hg, k, kg, quad, quad_decay};
use super::{product, Def, Identity};
use crate::functions::{derivative_nu, derivative_x, FunctionId};
use crate::generalized::{bateman_k_gen_quadrature, h_gen_s_form, havelock_h_gen_quadrature, s_polynomial, GenParams};
use crate::quadrature::QuadConfig;
use crate::special::{
    bessel, bessel_i_series, exp_integral_ei, factorial, gamma, hyp_kummer_m, laguerre, struve_series, whittaker_w,
    BesselKind, StruveKind, SQRT_PI,
};
use crate::Result;

const XS: &[f64] = &[0.5, 1.0, 2.0, 4.0];

fn kgq(nu: f64, alpha: f64, beta: f64, x: f64, c: &QuadConfig) -> Result<f64> {
    bateman_k_gen_quadrature(GenParams::new(nu, alpha, beta)?, x, c).map(|r| r.value)
}

fn hgq(nu: f64, alpha: f64, beta: f64, x: f64, c: &QuadConfig) -> Result<f64> {
    havelock_h_gen_quadrature(GenParams::new(nu, alpha, beta)?, x, c).map(|r| r.value)
}

// Richardson derivative of a generalized function computed by quadrature.
fn dgq(f: impl Fn(f64) -> Result<f64>, x: f64, order: u32) -> Result<f64> {
    diff(f, x, order, 0.05)
}

/// `(2/π) ∫_0^{π/2} tan^{m} θ · θ^{j} · T(x tanθ − νθ) dθ` with `T = cos`
/// (`cosine = true`) or `sin`, after `t = tan θ`.
fn weighted(cosine: bool, nu: f64, x: f64, m: i32, j: i32, c: &QuadConfig) -> Result<f64> {
    let env = |t: f64| {
        let psi = nu * t.atan();
        let w = t.powi(m) * t.atan().powi(j) / (1.0 + t * t);
        let (sp, cp) = psi.sin_cos();
        if cosine {
            (w * cp, w * sp)
        } else {
            (-w * sp, w * cp)
        }
    };
    fourier(env, x, c).map(|v| FRAC_2_PI * v)
}

/// `U(a, b, z)` for `a > 0` from `Γ(a) U = ∫_0^∞ e^{−zt} t^{a−1} (1+t)^{b−a−1} dt`,
/// with `t = u^{1/a}` to remove the endpoint singularity.
fn tricomi_u(a: f64, b: f64, z: f64, c: &QuadConfig) -> Result<f64> {
    let p = 1.0 / a;
    let v = quad_decay(
        |u| {
            let t = u.powf(p);
            Ok((-z * t).exp() * (1.0 + t).powf(b - a - 1.0))
        },
        c,
    )?;
    Ok(v / (a * gamma(a)?))
}

/// `W_{n,1/2}(t)` for integer `n ≥ 0`: `e^{−t/2} t U(1−n, 2, t)`, where
/// `U(−m, 2, t) = (−1)^m m! L_m^{(1)}(t)` and `U(1, 2, t) = 1/t`.
fn whittaker_int(n: u32, t: f64) -> f64 {
    if n == 0 {
        return (-0.5 * t).exp();
    }
    let m = n - 1;
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    (-0.5 * t).exp() * t * sign * factorial(m) * laguerre(m, 1.0, t)
}

// (Γ(−k)/√π)(x/2)^{k+1/2}[I_{k+1/2}(x) − L_{−k−1/2}(x)] times `scale`.
fn bessel_struve_form(kk: f64, x: f64, scale: f64) -> Result<f64> {
    let g = gamma(-kk)?;
    Ok(scale * g / SQRT_PI
        * (0.5 * x).powf(kk + 0.5)
        * (bessel_i_series(kk + 0.5, x) - struve_series(StruveKind::L, -kk - 0.5, x)))
}

// The S polynomial implied by a (quadrature) value of h_{2n,2k}:
// h = (1/π)[k_{2n} Ei − 2S].
fn implied_s(n: f64, kk: f64, x: f64, c: &QuadConfig) -> Result<f64> {
    let hv = hgq(2.0 * n, 2.0 * kk, 0.0, x, c)?;
    Ok(0.5 * (k(2.0 * n, x, c)? * exp_integral_ei(x)? - PI * hv))
}

pub(crate) fn identities() -> Vec<Identity> {
    let mut out = Vec::new();
    out.extend(whittaker_identities());
    out.extend(power_identities());
    out.extend(unrestricted_identities());
    out
}

fn whittaker_identities() -> Vec<Identity> {
    vec![
        Def::assert(
            "eq42_whittaker",
            "(42): k_{2 nu}(t/2) = W_{nu,1/2}(t)/Gamma(nu+1)",
            1e-12,
            |p, c| k(2.0 * p[0], 0.5 * p[1], c),
            |p, _| Ok(whittaker_int(p[0] as u32, p[1]) / gamma(p[0] + 1.0)?),
        )
        .grid(&["nu", "t"], product(&[&[0.0, 1.0, 2.0], &[0.5, 1.0, 2.0, 5.0]]))
        .note("integer nu: W_{n,1/2} through the terminating Tricomi function")
        .build(),
        Def::assert(
            "eq42_whittaker_general",
            "(42) at non-integer nu: k_{2 nu}(t/2) = W_{nu,1/2}(t)/Gamma(nu+1)",
            1e-8,
            |p, c| k(2.0 * p[0], 0.5 * p[1], c),
            |p, _| Ok(whittaker_w(p[0], 0.5, p[1])? / gamma(p[0] + 1.0)?),
        )
        .grid(
            &["nu", "t"],
            product(&[&[-0.75, -0.25, 0.25, 0.5, 0.75], &[0.5, 1.0, 2.0, 5.0]]),
        )
        .note("Whittaker function from its integral representation")
        .build(),
        Def::assert(
            "eq74_tricomi",
            "(74) line 1: k_{2 nu}(x) = e^{-x} U(-nu, 0; 2x)/Gamma(nu+1)",
            1e-8,
            |p, c| k(2.0 * p[0], p[1], c),
            |p, c| Ok((-p[1]).exp() * tricomi_u(-p[0], 0.0, 2.0 * p[1], c)? / gamma(p[0] + 1.0)?),
        )
        .grid(&["nu", "x"], product(&[&[-0.75, -0.5, -0.25], &[0.5, 1.0, 2.0]]))
        .note("nu < 0, where the Tricomi integral representation applies")
        .build(),
        Def::assert(
            "eq74_l2",
            "(74) line 2: U(-nu, 0; 2x) = 2x U(1-nu, 2; 2x)",
            1e-10,
            |p, c| tricomi_u(-p[0], 0.0, 2.0 * p[1], c),
            |p, c| Ok(2.0 * p[1] * tricomi_u(1.0 - p[0], 2.0, 2.0 * p[1], c)?),
        )
        .grid(&["nu", "x"], product(&[&[-0.75, -0.5, -0.25], &[0.5, 1.0, 2.0]]))
        .relative()
        .build(),
        Def::diagnose(
            "eq74_kummer",
            "(74) line 3: k_{2n+2}(x) = 2x e^{-x} 1F1(-2n; 2; 2x)",
            |p, c| k(2.0 * p[0] + 2.0, p[1], c),
            |p, _| Ok(2.0 * p[1] * (-p[1]).exp() * hyp_kummer_m(-2.0 * p[0], 2.0, 2.0 * p[1])?),
        )
        .grid(&["n", "x"], product(&[&[0.0, 1.0, 2.0, 3.0], &[0.5, 1.0, 2.0]]))
        .note("the parameter is -n with a factor (-1)^n; see eq74_kummer_corrected")
        .build(),
        Def::assert(
            "eq74_kummer_corrected",
            "(74) line 3, corrected: k_{2n+2}(x) = (-1)^n 2x e^{-x} 1F1(-n; 2; 2x)",
            1e-12,
            |p, c| k(2.0 * p[0] + 2.0, p[1], c),
            |p, _| {
                let sign = if (p[0] as i64) % 2 == 0 { 1.0 } else { -1.0 };
                Ok(sign * 2.0 * p[1] * (-p[1]).exp() * hyp_kummer_m(-p[0], 2.0, 2.0 * p[1])?)
            },
        )
        .grid(
            &["n", "x"],
            product(&[&[0.0, 1.0, 2.0, 3.0, 4.0], &[0.5, 1.0, 2.0, 4.0]]),
        )
        .relative()
        .build(),
    ]
}

fn power_identities() -> Vec<Identity> {
    let nk = product(&[&[0.0, 1.0, 2.0, 3.0], &[0.0, 1.0, 2.0, 3.0], &[1.0, 2.0]]);
    vec![
        Def::assert(
            "eq65_cos2",
            "(65) line 1: int_0^{pi/2} cos^2(theta) cos(x tan(theta)) d(theta) = pi (1+x) e^{-x}/4",
            1e-10,
            |p, c| Ok(FRAC_PI_2 * kgq(0.0, 2.0, 0.0, p[0], c)?),
            |p, _| Ok(PI * (1.0 + p[0]) * (-p[0]).exp() / 4.0),
        )
        .over("x", XS)
        .build(),
        Def::assert(
            "eq65_sin2",
            "(65) line 2: int_0^{pi/2} sin^2(theta) cos(x tan(theta)) d(theta) = pi (1-x) e^{-x}/4",
            1e-10,
            |p, c| Ok(FRAC_PI_2 * kgq(0.0, 0.0, 2.0, p[0], c)?),
            |p, _| Ok(PI * (1.0 - p[0]) * (-p[0]).exp() / 4.0),
        )
        .over("x", XS)
        .build(),
        Def::assert(
            "eq65_sincos",
            "(65) line 3: int_0^{pi/2} cos(theta) sin(theta) sin(x tan(theta)) d(theta) = pi x e^{-x}/4",
            1e-10,
            |p, c| Ok(FRAC_PI_2 * hgq(0.0, 1.0, 1.0, p[0], c)?),
            |p, _| Ok(PI * p[0] * (-p[0]).exp() / 4.0),
        )
        .over("x", XS)
        .build(),
        Def::diagnose(
            "eq66_l1",
            "(66) line 1: (n-k-2) h_{n-2,k} + (n+k+2) h_{n+2,k} + (2n-x) h_{n,k} = -8/pi",
            |p, c| {
                let (n, kk, x) = (p[0], p[1], p[2]);
                Ok((n - kk - 2.0) * hgq(n - 2.0, kk, 0.0, x, c)?
                    + (n + kk + 2.0) * hgq(n + 2.0, kk, 0.0, x, c)?
                    + (2.0 * n - x) * hgq(n, kk, 0.0, x, c)?)
            },
            |_, _| Ok(-8.0 / PI),
        )
        .grid(&["n", "k", "x"], nk.clone())
        .note("the coefficient must be (2n-4x), as in the k = 0 recurrence; see eq66_l1_corrected")
        .build(),
        Def::assert(
            "eq66_l1_corrected",
            "(66) line 1, corrected: (n-k-2) h_{n-2,k} + (n+k+2) h_{n+2,k} + (2n-4x) h_{n,k} = -8/pi",
            1e-8,
            |p, c| {
                let (n, kk, x) = (p[0], p[1], p[2]);
                Ok((n - kk - 2.0) * hgq(n - 2.0, kk, 0.0, x, c)?
                    + (n + kk + 2.0) * hgq(n + 2.0, kk, 0.0, x, c)?
                    + (2.0 * n - 4.0 * x) * hgq(n, kk, 0.0, x, c)?)
            },
            |_, _| Ok(-8.0 / PI),
        )
        .grid(&["n", "k", "x"], nk.clone())
        .build(),
        Def::assert(
            "eq66_l2",
            "(66) line 2: 4x h'_{n,k} = (n-k-2) h_{n-2,k} - (n+k+2) h_{n+2,k} + 2k h_{n,k}",
            1e-6,
            |p, c| Ok(4.0 * p[2] * dgq(|t| hgq(p[0], p[1], 0.0, t, c), p[2], 1)?),
            |p, c| {
                let (n, kk, x) = (p[0], p[1], p[2]);
                Ok((n - kk - 2.0) * hgq(n - 2.0, kk, 0.0, x, c)? - (n + kk + 2.0) * hgq(n + 2.0, kk, 0.0, x, c)?
                    + 2.0 * kk * hgq(n, kk, 0.0, x, c)?)
            },
        )
        .grid(&["n", "k", "x"], nk.clone())
        .note("derivative by Richardson extrapolation on quadrature values")
        .build(),
        Def::diagnose(
            "eq66_l3",
            "(66) line 3: 2x h'_{n,k} - 4/pi = (n-k-2) h_{n-2,k} + (n+k-2x) h_{n+2,k}",
            |p, c| Ok(2.0 * p[2] * dgq(|t| hgq(p[0], p[1], 0.0, t, c), p[2], 1)? - 4.0 / PI),
            |p, c| {
                let (n, kk, x) = (p[0], p[1], p[2]);
                Ok((n - kk - 2.0) * hgq(n - 2.0, kk, 0.0, x, c)? + (n + kk - 2.0 * x) * hgq(n + 2.0, kk, 0.0, x, c)?)
            },
        )
        .grid(&["n", "k", "x"], nk.clone())
        .note("adding lines 1 (corrected) and 2 puts h_{n,k}, not h_{n+2,k}, in the last term; see eq66_l3_corrected")
        .build(),
        Def::assert(
            "eq66_l3_corrected",
            "(66) line 3, corrected: 2x h'_{n,k} - 4/pi = (n-k-2) h_{n-2,k} + (n+k-2x) h_{n,k}",
            1e-6,
            |p, c| Ok(2.0 * p[2] * dgq(|t| hgq(p[0], p[1], 0.0, t, c), p[2], 1)? - 4.0 / PI),
            |p, c| {
                let (n, kk, x) = (p[0], p[1], p[2]);
                Ok((n - kk - 2.0) * hgq(n - 2.0, kk, 0.0, x, c)? + (n + kk - 2.0 * x) * hgq(n, kk, 0.0, x, c)?)
            },
        )
        .grid(&["n", "k", "x"], nk.clone())
        .build(),
        Def::diagnose(
            "eq66_l4",
            "(66) line 4: 2 h'_{0,2k} = 2 h_{0,2k+2} - h_{0,2k} - h_{2,2k+2}",
            |p, c| Ok(2.0 * dgq(|t| hgq(0.0, 2.0 * p[0], 0.0, t, c), p[1], 1)?),
            |p, c| {
                let (kk, x) = (2.0 * p[0], p[1]);
                Ok(2.0 * hgq(0.0, kk + 2.0, 0.0, x, c)? - hgq(0.0, kk, 0.0, x, c)? - hgq(2.0, kk + 2.0, 0.0, x, c)?)
            },
        )
        .grid(&["k", "x"], product(&[&[0.0, 1.0, 2.0], &[0.5, 1.0, 2.0]]))
        .note("expanding cos(2 theta) and sin(2 theta) gives the derivative of h_{0,2k+2} and h_{2,2k}; see eq66_l4_corrected")
        .build(),
        Def::assert(
            "eq66_l4_corrected",
            "(66) line 4, corrected: 2 h'_{0,2k+2} = 2 h_{0,2k+2} - h_{0,2k} - h_{2,2k}",
            1e-6,
            |p, c| Ok(2.0 * dgq(|t| hgq(0.0, 2.0 * p[0] + 2.0, 0.0, t, c), p[1], 1)?),
            |p, c| {
                let (kk, x) = (2.0 * p[0], p[1]);
                Ok(2.0 * hgq(0.0, kk + 2.0, 0.0, x, c)? - hgq(0.0, kk, 0.0, x, c)? - hgq(2.0, kk, 0.0, x, c)?)
            },
        )
        .grid(&["k", "x"], product(&[&[0.0, 1.0, 2.0], &[0.5, 1.0, 2.0]]))
        .build(),
        Def::assert(
            "eq66_l5",
            "(66) line 5: x h''_{n,k} - k h'_{n,k} + (n-x) h_{n,k} = -2/pi",
            1e-5,
            |p, c| {
                let (n, kk, x) = (p[0], p[1], p[2]);
                let f = |t| hgq(n, kk, 0.0, t, c);
                Ok(x * dgq(f, x, 2)? - kk * dgq(f, x, 1)? + (n - x) * hgq(n, kk, 0.0, x, c)?)
            },
            |_, _| Ok(-FRAC_2_PI),
        )
        .grid(&["n", "k", "x"], nk)
        .note("derivatives by Richardson extrapolation on quadrature values")
        .build(),
        Def::diagnose(
            "eq67_l1",
            "(67): 2 k'_{0,2k} = 2 k_{0,2k+2} - k_{0,2k} - k_{2,2k+2}",
            |p, c| Ok(2.0 * dgq(|t| kgq(0.0, 2.0 * p[0], 0.0, t, c), p[1], 1)?),
            |p, c| {
                let (kk, x) = (2.0 * p[0], p[1]);
                Ok(2.0 * kgq(0.0, kk + 2.0, 0.0, x, c)? - kgq(0.0, kk, 0.0, x, c)? - kgq(2.0, kk + 2.0, 0.0, x, c)?)
            },
        )
        .grid(&["k", "x"], product(&[&[0.0, 1.0, 2.0], &[0.5, 1.0, 2.0]]))
        .note("same index slip as the Havelock companion; see eq67_corrected")
        .build(),
        Def::assert(
            "eq67_corrected",
            "(67), corrected: 2 k'_{0,2k+2} = 2 k_{0,2k+2} - k_{0,2k} - k_{2,2k}",
            1e-7,
            |p, c| Ok(2.0 * dgq(|t| kgq(0.0, 2.0 * p[0] + 2.0, 0.0, t, c), p[1], 1)?),
            |p, c| {
                let (kk, x) = (2.0 * p[0], p[1]);
                Ok(2.0 * kgq(0.0, kk + 2.0, 0.0, x, c)? - kgq(0.0, kk, 0.0, x, c)? - kgq(2.0, kk, 0.0, x, c)?)
            },
        )
        .grid(&["k", "x"], product(&[&[0.0, 1.0, 2.0], &[0.5, 1.0, 2.0]]))
        .build(),
        Def::assert(
            "eq68_l1",
            "(68) line 1: k_{0,2k}(x) = 2/(sqrt(pi) Gamma(k+1)) (x/2)^{k+1/2} K_{k+1/2}(x)",
            1e-8,
            |p, c| kgq(0.0, 2.0 * p[0], 0.0, p[1], c),
            |p, _| {
                let kk = p[0];
                Ok(2.0 / (SQRT_PI * gamma(kk + 1.0)?) * (0.5 * p[1]).powf(kk + 0.5) * bessel(BesselKind::K, kk + 0.5, p[1])?)
            },
        )
        .grid(&["k", "x"], product(&[&[0.0, 1.0, 2.0, 3.0], XS]))
        .build(),
        Def::diagnose(
            "eq68_l2",
            "(68) line 2: h_{0,2k}(x) = (2 Gamma(-k)/sqrt(pi)) (x/2)^{k+1/2} [I_{k+1/2}(x) - L_{-k-1/2}(x)]",
            |p, c| hgq(0.0, 2.0 * p[0], 0.0, p[1], c),
            |p, _| bessel_struve_form(p[0], p[1], 2.0),
        )
        .grid(&["k", "x"], product(&[&[0.5, 1.5, 2.5], &[0.5, 1.0, 2.0]]))
        .note("non-integer k only (Gamma(-k) has poles); the leading factor 2 is spurious; see eq68_l2_corrected")
        .build(),
        Def::assert(
            "eq68_l2_corrected",
            "(68) line 2, corrected: h_{0,2k}(x) = (Gamma(-k)/sqrt(pi)) (x/2)^{k+1/2} [I_{k+1/2}(x) - L_{-k-1/2}(x)]",
            1e-6,
            |p, c| hgq(0.0, 2.0 * p[0], 0.0, p[1], c),
            |p, c| {
                if p[0].fract() == 0.0 {
                    hg(0.0, 2.0 * p[0], 0.0, p[1], c)
                } else {
                    bessel_struve_form(p[0], p[1], 1.0)
                }
            },
        )
        .grid(&["k", "x"], product(&[&[0.5, 1.0, 1.5, 2.0, 2.5], &[0.5, 1.0, 2.0]]))
        .note("integer k through the limit k -> k +- eps of the same expression")
        .build(),
        Def::diagnose(
            "eq69_s_form",
            "(69): h_{2n,2k}(x) = (1/pi)[k_{2n}(x) li(e^x) - 2 S_{n-k-1,k}(x)], n >= k+1",
            |p, c| hgq(2.0 * p[0], 2.0 * p[1], 0.0, p[2], c),
            |p, c| h_gen_s_form(p[0] as u32, p[1] as u32, p[2], c),
        )
        .grid(
            &["n", "k", "x"],
            [[4.0, 1.0], [5.0, 1.0], [6.0, 1.0], [7.0, 1.0], [6.0, 2.0], [7.0, 2.0], [8.0, 2.0], [9.0, 2.0]]
                .iter()
                .flat_map(|nk| [0.5, 1.0, 2.0].map(|x| vec![nk[0], nk[1], x]))
                .collect(),
        )
        .note("pairs (n, k) whose S_{n-k-1,k} is tabulated; no consistent reading was found")
        .build(),
        Def::diagnose(
            "eq70_s_k1",
            "(70): S_{2,1} = (2+x+x^2)/6, ..., S_{5,1} = (18-9x^2+31x^3-16x^4+2x^5)/180",
            |p, c| implied_s(p[0] + 2.0, 1.0, p[1], c),
            |p, _| s_polynomial(p[0] as u32, 1, p[1]),
        )
        .grid(&["m", "x"], product(&[&[2.0, 3.0, 4.0, 5.0], &[0.5, 1.0, 2.0]]))
        .note("the polynomial implied by quadrature values of h_{2n,2} against the tabulated S_{m,1}; the (5, 1) row is printed twice")
        .build(),
        Def::diagnose(
            "eq71_s_k2",
            "(71): S_{3,2} = (16+7x+3x^2+x^3)/48, ..., S_{6,2}",
            |p, c| implied_s(p[0] + 3.0, 2.0, p[1], c),
            |p, _| s_polynomial(p[0] as u32, 2, p[1]),
        )
        .grid(&["m", "x"], product(&[&[3.0, 4.0, 5.0, 6.0], &[0.5, 1.0, 2.0]]))
        .note("the polynomial implied by quadrature values of h_{2n,4} against the tabulated S_{m,2}")
        .build(),
    ]
}

fn unrestricted_identities() -> Vec<Identity> {
    let nx = product(&[&[0.5, 1.5, 2.0], &[0.5, 1.0, 2.0]]);
    let kx_d = |p: &[f64], order: u32, fun: FunctionId, c: &QuadConfig| -> Result<f64> {
        let f = |t: f64| match fun {
            FunctionId::BatemanK => k(p[0], t, c),
            _ => h(p[0], t, c),
        };
        diff(f, p[1], order, 0.05)
    };
    let nu_d = |p: &[f64], order: u32, fun: FunctionId, c: &QuadConfig| -> Result<f64> {
        let f = |v: f64| match fun {
            FunctionId::BatemanK => k(v, p[1], c),
            _ => h(v, p[1], c),
        };
        diff(f, p[0], order, 0.05)
    };
    vec![
        Def::assert(
            "eq76_tform",
            "(76): k_{nu,alpha,beta}, h_{nu,alpha,beta} as integrals over t = tan(theta) with weight t^beta (1+t^2)^{-alpha/2-beta/2-1}",
            1e-8,
            |p, c| {
                let (nu, a, b, x) = (p[0], p[1], p[2], p[3]);
                let f = |th: f64| Ok(th.cos().powf(a) * th.sin().powf(b) * (x * th.tan() - nu * th).cos());
                quad(f, 0.0, FRAC_PI_2, c).map(|v| FRAC_2_PI * v)
            },
            |p, c| kg(p[0], p[1], p[2], p[3], c),
        )
        .grid(&["nu", "alpha", "beta", "x"], product(&[&[0.5, 1.5, -1.0], &[3.0, 4.0], &[0.0, 1.0], &[0.5, 1.0, 2.0]]))
        .note("the theta integral by finite quadrature (alpha >= 3 damps the oscillation at pi/2) against the t form")
        .build(),
        Def::assert(
            "eq77_l1",
            "(77) line 1: d^{2k} k_nu/dx^{2k} = (-1)^k (2/pi) int tan^{2k}(theta) cos(x tan(theta) - nu theta) d(theta)",
            1e-5,
            move |p, c| kx_d(p, 2, FunctionId::BatemanK, c),
            |p, c| Ok(-weighted(true, p[0], p[1], 2, 0, c)?),
        )
        .grid(&["nu", "x"], nx.clone())
        .note("k = 1; Richardson derivative of the evaluated function against the weighted integral")
        .build(),
        Def::diagnose(
            "eq77_l2",
            "(77) line 2: d^{2k+1} k_nu/dx^{2k+1} = (-1)^k (2/pi) int tan^{2k+1}(theta) sin(x tan(theta) - nu theta) d(theta)",
            move |p, c| kx_d(p, 1, FunctionId::BatemanK, c),
            |p, c| weighted(false, p[0], p[1], 1, 0, c),
        )
        .grid(&["nu", "x"], nx.clone())
        .note("k = 0; differentiating cos gives -sin, so the sign is (-1)^{k+1}; see eq77_l2_corrected")
        .build(),
        Def::assert(
            "eq77_l2_corrected",
            "(77) line 2, corrected: d^{2k+1} k_nu/dx^{2k+1} = (-1)^{k+1} (2/pi) int tan^{2k+1}(theta) sin(x tan(theta) - nu theta) d(theta)",
            1e-5,
            move |p, c| kx_d(p, 1, FunctionId::BatemanK, c),
            |p, c| Ok(-weighted(false, p[0], p[1], 1, 0, c)?),
        )
        .grid(&["nu", "x"], nx.clone())
        .build(),
        Def::assert(
            "eq78_l1",
            "(78) line 1: d^{2k} h_nu/dx^{2k} = (-1)^k (2/pi) int tan^{2k}(theta) sin(x tan(theta) - nu theta) d(theta)",
            1e-5,
            move |p, c| kx_d(p, 2, FunctionId::HavelockH, c),
            |p, c| Ok(-weighted(false, p[0], p[1], 2, 0, c)?),
        )
        .grid(&["nu", "x"], nx.clone())
        .note("k = 1")
        .build(),
        Def::assert(
            "eq78_l2",
            "(78) line 2: d^{2k+1} h_nu/dx^{2k+1} = (-1)^k (2/pi) int tan^{2k+1}(theta) cos(x tan(theta) - nu theta) d(theta)",
            1e-5,
            move |p, c| kx_d(p, 1, FunctionId::HavelockH, c),
            |p, c| weighted(true, p[0], p[1], 1, 0, c),
        )
        .grid(&["nu", "x"], nx.clone())
        .note("k = 0")
        .build(),
        Def::assert(
            "eq78_library",
            "(77)-(78): the library x-derivatives of k_nu and h_nu match Richardson derivatives, orders 1 and 2",
            1e-5,
            move |p, c| kx_d(&p[1..], p[0] as u32, if p[3] == 0.0 { FunctionId::BatemanK } else { FunctionId::HavelockH }, c),
            |p, c| {
                let fun = if p[3] == 0.0 { FunctionId::BatemanK } else { FunctionId::HavelockH };
                derivative_x(fun, p[1], p[2], p[0] as u32, c).map(|r| r.value)
            },
        )
        .grid(&["order", "nu", "x", "h"], product(&[&[1.0, 2.0], &[0.5, 2.0, 3.0], &[0.5, 2.0], &[0.0, 1.0]]))
        .build(),
        Def::assert(
            "eq79_l1",
            "(79) line 1: d^{2k} k_nu/dnu^{2k} = (-1)^k (2/pi) int theta^{2k} cos(x tan(theta) - nu theta) d(theta)",
            1e-5,
            move |p, c| nu_d(p, 2, FunctionId::BatemanK, c),
            |p, c| Ok(-weighted(true, p[0], p[1], 0, 2, c)?),
        )
        .grid(&["nu", "x"], nx.clone())
        .note("k = 1")
        .build(),
        Def::assert(
            "eq79_l2",
            "(79) line 2: d^{2k+1} k_nu/dnu^{2k+1} = (-1)^k (2/pi) int theta^{2k+1} sin(x tan(theta) - nu theta) d(theta)",
            1e-5,
            move |p, c| nu_d(p, 1, FunctionId::BatemanK, c),
            |p, c| weighted(false, p[0], p[1], 0, 1, c),
        )
        .grid(&["nu", "x"], nx.clone())
        .note("k = 0")
        .build(),
        Def::assert(
            "eq80_l1",
            "(80) line 1: d^{2k} h_nu/dnu^{2k} = (-1)^k (2/pi) int theta^{2k} sin(x tan(theta) - nu theta) d(theta)",
            1e-5,
            move |p, c| nu_d(p, 2, FunctionId::HavelockH, c),
            |p, c| Ok(-weighted(false, p[0], p[1], 0, 2, c)?),
        )
        .grid(&["nu", "x"], nx.clone())
        .note("k = 1")
        .build(),
        Def::diagnose(
            "eq80_l2",
            "(80) line 2: d^{2k+1} h_nu/dnu^{2k+1} = (-1)^k (2/pi) int theta^{2k+1} cos(x tan(theta) - nu theta) d(theta)",
            move |p, c| nu_d(p, 1, FunctionId::HavelockH, c),
            |p, c| weighted(true, p[0], p[1], 0, 1, c),
        )
        .grid(&["nu", "x"], nx.clone())
        .note("k = 0; differentiating sin(.. - nu theta) in nu gives -theta cos, so the sign is (-1)^{k+1}; see eq80_l2_corrected")
        .build(),
        Def::assert(
            "eq80_l2_corrected",
            "(80) line 2, corrected: d^{2k+1} h_nu/dnu^{2k+1} = (-1)^{k+1} (2/pi) int theta^{2k+1} cos(x tan(theta) - nu theta) d(theta)",
            1e-5,
            move |p, c| nu_d(p, 1, FunctionId::HavelockH, c),
            |p, c| Ok(-weighted(true, p[0], p[1], 0, 1, c)?),
        )
        .grid(&["nu", "x"], nx.clone())
        .build(),
        Def::assert(
            "eq80_library",
            "(79)-(80): the library nu-derivatives of k_nu and h_nu match Richardson derivatives, orders 1 and 2",
            1e-5,
            move |p, c| nu_d(&p[1..], p[0] as u32, if p[3] == 0.0 { FunctionId::BatemanK } else { FunctionId::HavelockH }, c),
            |p, c| {
                let fun = if p[3] == 0.0 { FunctionId::BatemanK } else { FunctionId::HavelockH };
                derivative_nu(fun, p[1], p[2], p[0] as u32, c).map(|r| r.value)
            },
        )
        .grid(&["order", "nu", "x", "h"], product(&[&[1.0, 2.0], &[0.5, 2.0, -1.5], &[0.5, -2.0], &[0.0, 1.0]]))
        .build(),
    ]
}
