use std::fs;
use std::io::Write;
use std::path::Path;

use bateman::output::{format_number, round_sig};
use bateman::{
    bateman_k, bateman_k_gen, csv_row, havelock_h, havelock_h_gen, ki, laplace_closed, laplace_subject, registry,
    render_catalog, run_suite, transforms, write_docs, Error, EvalResult, FunctionId, GenParams, KiOrder, QuadConfig,
    Status, CSV_HEADER,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{Common, DocsArgs, EvalArgs, Format, LaplaceArgs, TableArgs, VerifyArgs};
use crate::error::CliError;

pub fn quad_config(c: &Common) -> Result<QuadConfig, CliError> {
    if !(c.tol > 0.0 && c.tol.is_finite()) {
        return Err(CliError::Usage(format!("--tol must be positive, got {}", c.tol)));
    }
    Ok(QuadConfig::with_tol(c.tol))
}

/// Runs `f` on a pool of `threads` workers (0: rayon's default).
pub fn with_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Evaluates `fun` of order `nu` at `x`. For `ki`, `nu` is the Bateman
/// order `2n`.
pub fn evaluate(
    fun: FunctionId,
    nu: f64,
    x: f64,
    alpha: f64,
    beta: f64,
    cfg: &QuadConfig,
) -> bateman::Result<EvalResult> {
    match fun {
        FunctionId::BatemanK => bateman_k(nu, x, cfg),
        FunctionId::HavelockH => havelock_h(nu, x, cfg),
        FunctionId::GenK => bateman_k_gen(GenParams::new(nu, alpha, beta)?, x, cfg),
        FunctionId::GenH => havelock_h_gen(GenParams::new(nu, alpha, beta)?, x, cfg),
        FunctionId::Ki => ki(KiOrder::from_bateman_order(nu)?, x, cfg),
    }
}

fn check_order(fun: FunctionId, nu: f64, alpha: f64, beta: f64) -> Result<(), CliError> {
    if !nu.is_finite() {
        return Err(CliError::Usage(format!("order must be finite, got {nu}")));
    }
    match fun {
        FunctionId::Ki => KiOrder::from_bateman_order(nu)
            .map(|_| ())
            .map_err(|e| CliError::Usage(e.to_string())),
        FunctionId::GenK | FunctionId::GenH => GenParams::new(nu, alpha, beta)
            .map(|_| ())
            .map_err(|e| CliError::Usage(e.to_string())),
        _ => Ok(()),
    }
}

#[derive(Serialize)]
struct PointJson {
    function: &'static str,
    nu: f64,
    x: f64,
    value: Option<f64>,
    err_est: f64,
    method: String,
}

pub fn eval(a: &EvalArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = quad_config(&a.common)?;
    check_order(a.function, a.nu, a.alpha, a.beta)?;
    let r = evaluate(a.function, a.nu, a.x, a.alpha, a.beta, &cfg);
    let (value, err_est, method) = match &r {
        Ok(e) => (Some(e.value), e.err_est, e.method.to_string()),
        Err(Error::NonConverged { partial }) => (None, partial.err_est, "NON_CONVERGED".to_string()),
        Err(e) => return Err(CliError::Usage(e.to_string())),
    };
    match a.format {
        Format::Json => {
            let p = PointJson {
                function: a.function.as_str(),
                nu: a.nu,
                x: a.x,
                value: value.map(round_sig),
                err_est: round_sig(err_est),
                method: method.clone(),
            };
            writeln!(out, "{}", serde_json::to_string(&p).expect("point serializes")).map_err(stdout_err)?;
        }
        _ => {
            // A non-converged point still reports its partial value.
            let shown = value.or_else(|| r.as_ref().err().and_then(Error::partial).map(|p| p.value));
            writeln!(
                out,
                "value={} err_est={} method={}",
                shown.map(format_number).unwrap_or_default(),
                format_number(err_est),
                method
            )
            .map_err(stdout_err)?;
        }
    }
    if value.is_none() {
        return Err(CliError::NotConverged(format!(
            "{}_{}({}) did not converge",
            a.function, a.nu, a.x
        )));
    }
    Ok(())
}

/// `x_min, x_min + step, ...` up to `x_max`, endpoint included when it
/// lies on the grid.
pub fn grid(x_min: f64, x_max: f64, step: f64) -> Result<Vec<f64>, CliError> {
    if !(x_min.is_finite() && x_max.is_finite() && step.is_finite()) {
        return Err(CliError::Usage("grid bounds must be finite".into()));
    }
    if x_min >= x_max {
        return Err(CliError::Usage(format!(
            "--x-min {x_min} must be below --x-max {x_max}"
        )));
    }
    if step <= 0.0 {
        return Err(CliError::Usage(format!("--x-step must be positive, got {step}")));
    }
    let n = ((x_max - x_min) / step + 1e-9).floor();
    if n > 1e7 {
        return Err(CliError::Usage(format!("grid of {n} points is too large")));
    }
    Ok((0..=n as usize).map(|i| x_min + i as f64 * step).collect())
}

#[derive(Serialize)]
struct RowJson {
    nu: f64,
    x: f64,
    value: Option<f64>,
    err_est: Option<f64>,
    method: String,
}

fn row_json(nu: f64, x: f64, r: &bateman::Result<EvalResult>) -> RowJson {
    let (value, err_est, method) = match r {
        Ok(e) => (
            Some(round_sig(e.value)),
            Some(round_sig(e.err_est)),
            e.method.to_string(),
        ),
        Err(Error::NonConverged { partial }) => (None, Some(round_sig(partial.err_est)), "NON_CONVERGED".into()),
        Err(_) => (None, None, "ERROR".into()),
    };
    RowJson {
        nu,
        x,
        value,
        err_est,
        method,
    }
}

/// Evaluates the (nu, x) product in parallel; results come back in
/// nu-major order.
pub fn evaluate_grid(
    points: &[(f64, f64)],
    threads: usize,
    f: impl Fn(f64, f64) -> bateman::Result<EvalResult> + Sync,
) -> Vec<bateman::Result<EvalResult>> {
    with_pool(threads, || points.par_iter().map(|&(nu, x)| f(nu, x)).collect())
}

pub fn table(a: &TableArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let cfg = quad_config(&a.common)?;
    let xs = grid(a.x_min, a.x_max, a.x_step)?;
    for &nu in &a.nu {
        check_order(a.function, nu, a.alpha, a.beta)?;
    }
    let points: Vec<(f64, f64)> = a.nu.iter().flat_map(|&nu| xs.iter().map(move |&x| (nu, x))).collect();
    let results = evaluate_grid(&points, a.common.parallelism, |nu, x| {
        evaluate(a.function, nu, x, a.alpha, a.beta, &cfg)
    });

    let text = match a.format {
        Format::Json => {
            let rows: Vec<_> = points
                .iter()
                .zip(&results)
                .map(|(&(nu, x), r)| row_json(nu, x, r))
                .collect();
            let mut s = serde_json::to_string_pretty(&rows).expect("rows serialize");
            s.push('\n');
            s
        }
        _ => csv_text(&points, &results),
    };
    match &a.output {
        Some(p) => write_file(p, &text)?,
        None => stdout.write_all(text.as_bytes()).map_err(stdout_err)?,
    }
    let bad = results
        .iter()
        .filter(|r| matches!(r, Err(Error::NonConverged { .. })))
        .count();
    if bad > 0 {
        return Err(CliError::NotConverged(format!("{bad} point(s) did not converge")));
    }
    Ok(())
}

pub fn csv_text(points: &[(f64, f64)], results: &[bateman::Result<EvalResult>]) -> String {
    let mut s = String::with_capacity(points.len() * 48);
    s.push_str(CSV_HEADER);
    s.push('\n');
    for (&(nu, x), r) in points.iter().zip(results) {
        s.push_str(&csv_row(nu, x, r));
        s.push('\n');
    }
    s
}

pub fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    fs::write(path, text.as_bytes()).map_err(|e| CliError::io(path, e))
}

fn stdout_err(e: std::io::Error) -> CliError {
    CliError::io("<stdout>", e)
}

pub fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = quad_config(&a.common)?;
    let threads = if a.common.parallelism == 0 {
        rayon::current_num_threads()
    } else {
        a.common.parallelism
    };
    let report = run_suite(a.filter.as_deref(), &cfg, threads);
    let mut json = report.to_json();
    json.push('\n');
    if let Some(p) = &a.output {
        write_file(p, &json)?;
    }
    if a.format == Format::Json {
        out.write_all(json.as_bytes()).map_err(stdout_err)?;
    } else {
        for e in &report.entries {
            let res = e.max_residual.map(format_number).unwrap_or_else(|| "n/a".into());
            let mut line = format!("{:<9} {} max_residual={}", e.status.as_str(), e.identity, res);
            if !e.errors.is_empty() {
                line.push_str(&format!(" errors={}", e.errors.len()));
            }
            writeln!(out, "{line}").map_err(stdout_err)?;
        }
    }
    writeln!(out, "{}", report.summary()).map_err(stdout_err)?;
    if report.totals.failed > 0 {
        let ids: Vec<_> = report
            .entries
            .iter()
            .filter(|e| e.status == Status::Fail)
            .map(|e| e.identity.as_str())
            .collect();
        return Err(CliError::AssertFailed(format!("ASSERT failures: {}", ids.join(", "))));
    }
    Ok(())
}

#[derive(Serialize)]
struct LaplaceJson<'a> {
    id: &'a str,
    s: f64,
    params: &'a [f64],
    numeric: Option<f64>,
    err_est: f64,
    closed: f64,
    residual: Option<f64>,
}

pub fn laplace(a: &LaplaceArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = quad_config(&a.common)?;
    let closed = laplace_closed(&a.id, a.s, &a.params).map_err(|e| CliError::Usage(e.to_string()))?;
    let numeric = laplace_subject(&a.id, a.s, &a.params, &cfg);
    let (value, err_est) = match &numeric {
        Ok(r) => (Some(r.value), r.err_est),
        Err(Error::NonConverged { partial }) => (None, partial.err_est),
        Err(e) => return Err(CliError::Usage(e.to_string())),
    };
    let residual = value.map(|v| (v - closed).abs());
    match a.format {
        Format::Json => {
            let j = LaplaceJson {
                id: &a.id,
                s: a.s,
                params: &a.params,
                numeric: value.map(round_sig),
                err_est: round_sig(err_est),
                closed: round_sig(closed),
                residual: residual.map(round_sig),
            };
            writeln!(out, "{}", serde_json::to_string(&j).expect("comparison serializes")).map_err(stdout_err)?;
        }
        _ => {
            writeln!(
                out,
                "numeric={} err_est={} closed={} residual={}",
                value.map(format_number).unwrap_or_else(|| "NON_CONVERGED".into()),
                format_number(err_est),
                format_number(closed),
                residual.map(format_number).unwrap_or_default()
            )
            .map_err(stdout_err)?;
        }
    }
    if value.is_none() {
        return Err(CliError::NotConverged(format!(
            "numeric transform of {} did not converge",
            a.id
        )));
    }
    Ok(())
}

pub fn docs(a: &DocsArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = quad_config(&a.common)?;
    let threads = if a.common.parallelism == 0 {
        rayon::current_num_threads()
    } else {
        a.common.parallelism
    };
    let report = run_suite(None, &cfg, threads);
    let pages = render_catalog(registry(), &report, transforms());
    write_docs(&a.out_dir, &pages).map_err(|e| CliError::io(&a.out_dir, e))?;
    for p in &pages {
        writeln!(out, "wrote {}", a.out_dir.join(p.name).display()).map_err(stdout_err)?;
    }
    writeln!(out, "{}", report.summary()).map_err(stdout_err)?;
    Ok(())
}
