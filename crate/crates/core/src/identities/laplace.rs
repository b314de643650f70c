use super::eval::k;
use super::{product, Def, Identity};
use crate::quadrature::QuadConfig;
use crate::transforms::{initial_final_value_check, laplace_numeric, transform};
use crate::Result;

// L{k_2}(s) from its registered closed form.
fn f_k2(s: f64) -> Result<f64> {
    transform("eq40_k2")?.closed_unchecked(s, &[])
}

fn numeric(f: impl Fn(f64) -> f64, s: f64, c: &QuadConfig) -> Result<f64> {
    laplace_numeric(f, s, c).map(|r| r.value)
}

// Extrapolated `s F(s)` limit of a registered transform; `side` 0 is the
// initial value, 1 the final value.
fn limit(id: &str, params: &[f64], side: f64) -> Result<f64> {
    let p = (!params.is_empty()).then_some(params);
    let r = initial_final_value_check(id, p)?;
    Ok(if side == 0.0 { r.initial } else { r.final_ })
}

fn expected(id: &str, side: f64) -> Result<f64> {
    let e = transform(id)?.limits.expect("registered limits");
    Ok(if side == 0.0 { e.initial } else { e.final_ })
}

pub(crate) fn identities() -> Vec<Identity> {
    let s = &[0.5, 1.0, 2.0, 5.0];
    vec![
        Def::assert(
            "eq39_scaling",
            "(39): L{f(at)} = (1/a) F(s/a), with f = k_2",
            1e-7,
            |p, c| numeric(|t| k(2.0, p[0] * t, c).unwrap_or(f64::NAN), p[1], c),
            |p, _| Ok(f_k2(p[1] / p[0])? / p[0]),
        )
        .grid(&["a", "s"], product(&[&[0.5, 2.0, 3.0], s]))
        .build(),
        Def::assert(
            "eq39_shift",
            "(39): L{e^{-bt} f(t)} = F(s+b), with f = k_2",
            1e-7,
            |p, c| numeric(|t| (-p[0] * t).exp() * k(2.0, t, c).unwrap_or(f64::NAN), p[1], c),
            |p, _| f_k2(p[1] + p[0]),
        )
        .grid(&["b", "s"], product(&[&[0.5, 1.0, 2.0], s]))
        .build(),
        Def::assert(
            "eq39_multiplication",
            "(39): L{t f(t)} = -F'(s), with f = k_2",
            1e-7,
            |p, c| numeric(|t| t * k(2.0, t, c).unwrap_or(f64::NAN), p[0], c),
            |p, _| Ok(4.0 / (p[0] + 1.0).powi(3)),
        )
        .over("s", s)
        .note("F(s) = 2/(s+1)^2 differentiated by hand")
        .build(),
        Def::assert(
            "eq41_limits",
            "(41): lim_{s->inf} s F(s) = f(0+), lim_{s->0} s F(s) = f(inf) for k_0 and k_{2n+2}",
            1e-4,
            |p, _| match p[0] as u32 {
                0 => limit("eq37_k0", &[], p[2]),
                1 => limit("eq37_k2n2", &[p[1]], p[2]),
                _ => limit("eq40_k2", &[], p[2]),
            },
            |p, _| match p[0] as u32 {
                0 => expected("eq37_k0", p[2]),
                1 => expected("eq37_k2n2", p[2]),
                _ => expected("eq40_k2", p[2]),
            },
        )
        .grid(
            &["subject", "n", "side"],
            vec![
                vec![0.0, 0.0, 0.0],
                vec![0.0, 0.0, 1.0],
                vec![1.0, 0.0, 0.0],
                vec![1.0, 0.0, 1.0],
                vec![1.0, 1.0, 0.0],
                vec![1.0, 1.0, 1.0],
                vec![1.0, 2.0, 0.0],
                vec![1.0, 2.0, 1.0],
                vec![2.0, 0.0, 0.0],
                vec![2.0, 0.0, 1.0],
            ],
        )
        .note("subject 0: k_0, 1: k_{2n+2}, 2: k_2; side 0: initial, 1: final; extrapolated from s = 1e3, 1e6 and 1e-3, 1e-6")
        .build(),
        Def::assert(
            "eq57_limits",
            "(57): initial and final values of L{h_0} = 2 s ln(s)/(pi (s^2-1)) times s",
            1e-4,
            |p, _| limit("eq53_h0", &[], p[0]),
            |p, _| expected("eq53_h0", p[0]),
        )
        .over("side", &[0.0, 1.0])
        .build(),
    ]
}
