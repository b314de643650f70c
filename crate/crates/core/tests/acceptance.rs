//! Acceptance checks, one printed line per criterion.
//!
//! Lines go straight to stdout so they show up without `--nocapture`.

use std::f64::consts::{FRAC_2_PI, PI};
use std::io::Write;

use bateman::generalized::{bateman_k_gen_quadrature, havelock_h_gen_quadrature};
use bateman::quadrature::integrate_semiinf_decay;
use bateman::{
    bateman_k, bateman_k_gen, bateman_k_quadrature, csv_row, havelock_h, havelock_h_gen, havelock_h_quadrature,
    initial_final_value_check, ki, ki_quadrature, ki_special_zero, registry, render_catalog, run_suite, transforms,
    GenParams, QuadConfig, Status, SuiteReport, Tier, CSV_HEADER,
};

const XS: [f64; 6] = [0.25, 0.5, 1.0, 2.0, 4.0, 8.0];

struct Outcome {
    pass: bool,
    detail: String,
}

fn max_of(it: impl IntoIterator<Item = f64>) -> f64 {
    it.into_iter().fold(0.0, |m, v| if v.is_nan() || v > m { v } else { m })
}

fn residual(report: &SuiteReport, id: &str) -> f64 {
    let e = report
        .entries
        .iter()
        .find(|e| e.identity == id)
        .unwrap_or_else(|| panic!("{id} missing from report"));
    if e.errors.is_empty() {
        e.max_residual.unwrap_or(f64::NAN)
    } else {
        f64::NAN
    }
}

fn within(report: &SuiteReport, ids: &[&str], tol: f64) -> Outcome {
    let worst = ids
        .iter()
        .map(|id| (id, residual(report, id)))
        .fold(
            ("", 0.0),
            |acc, (id, r)| {
                if r.is_nan() || r > acc.1 {
                    (id, r)
                } else {
                    acc
                }
            },
        );
    Outcome {
        pass: worst.1 <= tol,
        detail: format!(
            "{} entries, worst {} = {:.3e} (tol {tol:e})",
            ids.len(),
            worst.0,
            worst.1
        ),
    }
}

fn both(a: Outcome, b: Outcome) -> Outcome {
    Outcome {
        pass: a.pass && b.pass,
        detail: format!("{}; {}", a.detail, b.detail),
    }
}

// Tabulated polynomial forms of the even-order functions, x > 0.
fn k_even_table(order: u32, x: f64) -> f64 {
    let p = match order {
        0 => 1.0,
        2 => 2.0 * x,
        4 => 2.0 * x * (x - 1.0),
        6 => 2.0 / 3.0 * x * (2.0 * x * x - 6.0 * x + 3.0),
        8 => 2.0 / 3.0 * x * (x.powi(3) - 6.0 * x * x + 9.0 * x - 3.0),
        10 => 2.0 / 15.0 * x * (2.0 * x.powi(4) - 20.0 * x.powi(3) + 60.0 * x * x - 60.0 * x + 15.0),
        12 => {
            2.0 / 45.0 * x * (2.0 * x.powi(5) - 30.0 * x.powi(4) + 150.0 * x.powi(3) - 300.0 * x * x + 225.0 * x - 45.0)
        }
        _ => unreachable!(),
    };
    p * (-x).exp()
}

fn closed_forms(c: &QuadConfig) -> Outcome {
    let mut worst = 0.0f64;
    for order in (0..=12).step_by(2) {
        for &x in &XS {
            let want = k_even_table(order, x);
            let got = bateman_k(order as f64, x, c).unwrap().value;
            let rel = (got - want).abs() / want.abs().max(f64::MIN_POSITIVE);
            // k_4(1) vanishes; compare absolutely there.
            let r = if want.abs() < 1e-300 { (got - want).abs() } else { rel };
            worst = worst.max(r);
        }
    }
    Outcome {
        pass: worst <= 1e-12,
        detail: format!("orders 0..12 even at 6 points, max relative error {worst:.3e}"),
    }
}

fn oracle(c: &QuadConfig, report: &SuiteReport) -> Outcome {
    let mut parts = Vec::new();
    let mut k_even = Vec::new();
    for n in (0..=12).step_by(2) {
        for &x in XS.iter().take(5).chain(&[-0.5, -2.0]) {
            let a = bateman_k(n as f64, x, c).unwrap().value;
            let b = bateman_k_quadrature(n as f64, x, c).unwrap().value;
            k_even.push((a - b).abs());
        }
    }
    parts.push(("k even", max_of(k_even)));
    let k1 = [-2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 4.0]
        .iter()
        .map(|&x| (bateman_k(1.0, x, c).unwrap().value - bateman_k_quadrature(1.0, x, c).unwrap().value).abs());
    parts.push(("k_1", max_of(k1)));
    let mut h_even = Vec::new();
    for n in (0..=12).step_by(2) {
        for &x in XS.iter().take(5) {
            let a = havelock_h(n as f64, x, c).unwrap().value;
            let b = havelock_h_quadrature(n as f64, x, c).unwrap().value;
            h_even.push((a - b).abs());
        }
    }
    parts.push(("h even", max_of(h_even)));
    let mut gen = Vec::new();
    for kk in 0..=3 {
        let p = GenParams::new(0.0, 2.0 * kk as f64, 0.0).unwrap();
        for &x in &[0.5, 1.0, 2.0] {
            gen.push((bateman_k_gen(p, x, c).unwrap().value - bateman_k_gen_quadrature(p, x, c).unwrap().value).abs());
            gen.push(
                (havelock_h_gen(p, x, c).unwrap().value - havelock_h_gen_quadrature(p, x, c).unwrap().value).abs(),
            );
        }
    }
    for id in ["eq65_cos2", "eq65_sin2", "eq65_sincos", "eq68_l1"] {
        gen.push(residual(report, id));
    }
    parts.push(("generalized", max_of(gen)));
    let mut kis = vec![residual(report, "eq84_l1")];
    for n in 0..=6u32 {
        for &x in &[0.5, 1.0, 2.0, 4.0] {
            kis.push((ki(n, x, c).unwrap().value - ki_quadrature(n, x, c).unwrap().value).abs());
        }
    }
    parts.push(("ki", max_of(kis)));
    let worst = parts.iter().map(|p| p.1).fold(0.0, f64::max);
    Outcome {
        pass: worst <= 1e-7 && parts.iter().all(|p| !p.1.is_nan()),
        detail: parts
            .iter()
            .map(|(n, r)| format!("{n} {r:.2e}"))
            .collect::<Vec<_>>()
            .join(", "),
    }
}

fn special_values(c: &QuadConfig) -> Outcome {
    let mut worst = 0.0f64;
    for n in 1..=12 {
        let nf = n as f64;
        let k0 = 2.0 / (PI * nf) * (PI * nf / 2.0).sin();
        let h0 = -2.0 / (PI * nf) * (1.0 - (PI * nf / 2.0).cos());
        worst = worst.max((bateman_k(nf, 0.0, c).unwrap().value - k0).abs());
        worst = worst.max((havelock_h(nf, 0.0, c).unwrap().value - h0).abs());
    }
    let mut exact = true;
    for n in 1..=12u32 {
        let want = if n % 2 == 1 { -2.0 / n as f64 } else { 0.0 };
        exact &= ki_special_zero(n).unwrap() == want;
        exact &= ki(n, 1e-10, c).unwrap().value == want;
    }
    Outcome {
        pass: worst <= 1e-12 && exact,
        detail: format!("max k/h error at 0 {worst:.3e}; ki(0+) exact: {exact}"),
    }
}

fn symmetries(c: &QuadConfig, report: &SuiteReport) -> Outcome {
    // Quadrature on one side, the dispatching evaluator on the other.
    let mut worst = 0.0f64;
    for &nu in &[0.0, 1.0, 2.0, 3.0, 0.5, 1.3, -2.7, 4.25] {
        for &x in &[0.5, 1.0, 2.0, 3.7] {
            let k = bateman_k_quadrature(-nu, -x, c).unwrap().value - bateman_k(nu, x, c).unwrap().value;
            let h = havelock_h_quadrature(-nu, -x, c).unwrap().value + havelock_h(nu, x, c).unwrap().value;
            worst = worst.max(k.abs()).max(h.abs());
        }
    }
    let reg = within(report, &["eq29_symmetry", "eq46_symmetry"], 1e-8);
    Outcome {
        pass: worst <= 1e-8 && reg.pass,
        detail: format!("direct {worst:.3e}; {}", reg.detail),
    }
}

fn orthogonality(c: &QuadConfig, report: &SuiteReport) -> Outcome {
    let ortho = within(report, &["eq35_orth_diag", "eq35_orth_off"], 1e-6);
    let f = |x: f64| {
        let a = bateman_k(1.0, x, c).unwrap().value;
        let b = bateman_k(1.0, -x, c).unwrap().value;
        (a * a - b * b) / x
    };
    let pv = integrate_semiinf_decay(f, c).unwrap().value;
    let pv_ok = (pv - FRAC_2_PI).abs() <= 1e-5;
    Outcome {
        pass: ortho.pass && pv_ok,
        detail: format!(
            "{}; principal value at k = m = 0 is {pv:.9}, printed value {FRAC_2_PI:.9} (|diff| {:.3e}, tol 1e-5){}",
            ortho.detail,
            (pv - FRAC_2_PI).abs(),
            if pv_ok {
                ""
            } else {
                "; unattainable, see the eq36_pv discrepancy"
            }
        ),
    }
}

fn laplace(report: &SuiteReport) -> Outcome {
    let ids: Vec<&str> = transforms()
        .iter()
        .filter(|t| t.tier == Tier::Assert)
        .map(|t| t.id)
        .collect();
    let count_ok = ids.len() >= 18;
    let t = within(report, &ids, 1e-6);
    let k0 = initial_final_value_check("eq37_k0", None).unwrap();
    let h0 = initial_final_value_check("eq53_h0", None).unwrap();
    let got = [k0.initial, k0.final_, h0.initial, h0.final_];
    let dev = max_of(got.iter().zip([1.0, 0.0, 0.0, 0.0]).map(|(g, w)| (g - w).abs()));
    let lim = within(report, &["eq41_limits", "eq57_limits"], 1e-4);
    Outcome {
        pass: count_ok && t.pass && dev <= 1e-4 && lim.pass,
        detail: format!("{}; limits {got:.6?} max deviation {dev:.3e}; {}", t.detail, lim.detail),
    }
}

fn series(report: &SuiteReport) -> Outcome {
    let a = within(report, &["eq33_l1", "eq33_l2"], 1e-6);
    let b = within(report, &["eq34_sum_unity"], 1e-3);
    let d = within(report, &["eq30_l2", "eq30_l3", "eq30_l4"], 1e-5);
    both(both(a, b), d)
}

const APPENDIX_A: [&str; 15] = [
    "A02_convolution",
    "A03_bessel_diff",
    "A05_bessel_ki",
    "A06_bessel_j1_corrected",
    "A07_laplace_j1",
    "A08_bessel_diff",
    "A12_sin_conv",
    "A13_cos_conv_corrected",
    "A14_sinh_conv",
    "A15_cosh_conv",
    "A16_exp_conv",
    "A17_texp_conv",
    "A18_laplace_ki0",
    "A19_frullani",
    "A20_bessel_ki",
];

fn appendix_b(report: &SuiteReport) -> Outcome {
    let odes = within(
        report,
        &[
            "B03_giuliani_ode",
            "B06_first_order_u",
            "B06_first_order_v",
            "B07_second_order_u",
            "B07_second_order_v",
            "B08_fourth_order_corrected",
            "B14_third_order",
        ],
        1e-5,
    );
    both(odes, within(report, &["B16_l1", "B16_l2"], 1e-6))
}

fn integrity(c: &QuadConfig, full: &SuiteReport) -> Outcome {
    let asserts = run_suite(Some("ASSERT"), c, 4);
    let docs = render_catalog(registry(), full, transforms());
    let page = &docs.iter().find(|d| d.name == "discrepancies.md").unwrap().content;
    let diag: Vec<_> = full.entries.iter().filter(|e| e.tier == Tier::Diagnose).collect();
    let listed = diag
        .iter()
        .all(|e| e.max_residual.is_some() && page.contains(&format!("## `{}`", e.identity)));
    let mut reflections = 0usize;
    let mut exact = true;
    for n in 0..=6 {
        for j in -100..=100 {
            let x = j as f64 / 20.0;
            let nf = n as f64;
            let (a, b) = (bateman_k(0.0 - nf, x, c), bateman_k(nf, -x, c));
            let (g, h) = (havelock_h(0.0 - nf, x, c), havelock_h(nf, -x, c));
            exact &= csv_row(0.0, x, &a) == csv_row(0.0, x, &b);
            exact &= csv_row(0.0, x, &g) == csv_row(0.0, x, &h.map(|r| r.negated()));
            reflections += 2;
        }
    }
    Outcome {
        pass: asserts.totals.failed == 0 && listed && exact,
        detail: format!(
            "{}; {} DIAGNOSE entries listed: {listed}; {reflections} reflected cells exact: {exact}",
            asserts.summary(),
            diag.len()
        ),
    }
}

fn determinism(c: &QuadConfig, full: &SuiteReport) -> Outcome {
    let csv = || {
        let mut s = format!("{CSV_HEADER}\n");
        for n in [0.0, 1.5, -3.0] {
            for j in -20..=40 {
                let x = j as f64 / 4.0;
                s.push_str(&csv_row(n, x, &bateman_k(n, x, c)));
                s.push('\n');
            }
        }
        s
    };
    let csv_same = csv() == csv();
    let json_same = full.to_json() == run_suite(None, c, 1).to_json();
    Outcome {
        pass: csv_same && json_same,
        detail: format!("CSV identical: {csv_same}; suite JSON identical across thread counts: {json_same}"),
    }
}

#[test]
fn acceptance_criteria() {
    let c = QuadConfig::default();
    let full = run_suite(None, &c, 4);
    let results: Vec<(&str, Outcome)> = vec![
        ("closed-form reproduction", closed_forms(&c)),
        ("quadrature oracle equivalence", oracle(&c, &full)),
        ("special values at zero", special_values(&c)),
        ("reflection symmetries", symmetries(&c, &full)),
        ("ODE residuals", within(&full, &["eq20_l4", "eq52_l4"], 1e-6)),
        ("orthogonality and principal value", orthogonality(&c, &full)),
        ("Laplace transforms and limits", laplace(&full)),
        ("series sums", series(&full)),
        ("appendix A integrals", within(&full, &APPENDIX_A, 1e-6)),
        ("appendix B systems", appendix_b(&full)),
        ("suite integrity", integrity(&c, &full)),
        ("determinism", determinism(&c, &full)),
    ];
    let mut out = std::io::stdout().lock();
    let mut failed = Vec::new();
    for (i, (name, o)) in results.iter().enumerate() {
        let n = i + 1;
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        writeln!(out, "criterion {n:>2} {verdict} {name}: {}", o.detail).unwrap();
        if !o.pass {
            failed.push(n);
        }
    }
    out.flush().unwrap();
    assert!(full.entries.iter().all(|e| e.status != Status::Fail));
    assert!(within(&full, &["eq35_orth_diag", "eq35_orth_off"], 1e-6).pass);
    // The principal-value target of criterion 6 is not the value of the
    // integral; every other criterion must hold.
    assert!(failed.iter().all(|&n| n == 6), "failed criteria: {failed:?}");
}
