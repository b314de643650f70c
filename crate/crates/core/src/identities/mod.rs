//! Catalog of identities as machine-checkable cases and the suite runner.
//!
//! Each [`Identity`] evaluates a left- and a right-hand side over a fixed
//! parameter grid. ASSERT entries must stay within their tolerance; DIAGNOSE
//! entries (suspected misprints, divergent forms) only record a residual.
//! Corrected variants of misprinted identities are separate entries whose id
//! ends in `_corrected`.

mod appendix_a;
mod appendix_b;
mod basic;
mod generalized;
mod havelock;
mod integral;
mod laplace;
mod series;

use std::fmt;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::quadrature::QuadConfig;
use crate::transforms::{laplace_subject, transforms};
use crate::{Error, Result};

/// Verification tier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Tier {
    Assert,
    Diagnose,
}

impl Tier {
    pub fn as_str(self) -> &'static str {
        match self {
            Tier::Assert => "ASSERT",
            Tier::Diagnose => "DIAGNOSE",
        }
    }
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    Diagnosed,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Diagnosed => "DIAGNOSED",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How a sample residual is formed from the two sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Residual {
    /// `|lhs − rhs|`.
    Absolute,
    /// `|lhs − rhs| / max(1, |rhs|)`.
    Relative,
}

pub type Side = Arc<dyn Fn(&[f64], &QuadConfig) -> Result<f64> + Send + Sync>;

/// One catalog entry.
#[derive(Clone)]
pub struct Identity {
    pub id: String,
    pub citation: String,
    pub tier: Tier,
    pub tol: f64,
    pub residual: Residual,
    /// Parameter names, matching the columns of [`Identity::samples`].
    pub params: Vec<&'static str>,
    pub samples: Vec<Vec<f64>>,
    pub note: String,
    pub lhs: Side,
    pub rhs: Side,
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Identity")
            .field("id", &self.id)
            .field("tier", &self.tier)
            .field("tol", &self.tol)
            .field("samples", &self.samples.len())
            .finish_non_exhaustive()
    }
}

// Builder used by the topic modules.
pub(crate) struct Def {
    inner: Identity,
}

impl Def {
    pub(crate) fn new(
        id: &str,
        citation: &str,
        tier: Tier,
        tol: f64,
        lhs: impl Fn(&[f64], &QuadConfig) -> Result<f64> + Send + Sync + 'static,
        rhs: impl Fn(&[f64], &QuadConfig) -> Result<f64> + Send + Sync + 'static,
    ) -> Self {
        Self {
            inner: Identity {
                id: id.to_string(),
                citation: citation.to_string(),
                tier,
                tol,
                residual: Residual::Absolute,
                params: vec![],
                samples: vec![vec![]],
                note: String::new(),
                lhs: Arc::new(lhs),
                rhs: Arc::new(rhs),
            },
        }
    }

    pub(crate) fn assert(
        id: &str,
        citation: &str,
        tol: f64,
        lhs: impl Fn(&[f64], &QuadConfig) -> Result<f64> + Send + Sync + 'static,
        rhs: impl Fn(&[f64], &QuadConfig) -> Result<f64> + Send + Sync + 'static,
    ) -> Self {
        Self::new(id, citation, Tier::Assert, tol, lhs, rhs)
    }

    pub(crate) fn diagnose(
        id: &str,
        citation: &str,
        lhs: impl Fn(&[f64], &QuadConfig) -> Result<f64> + Send + Sync + 'static,
        rhs: impl Fn(&[f64], &QuadConfig) -> Result<f64> + Send + Sync + 'static,
    ) -> Self {
        Self::new(id, citation, Tier::Diagnose, f64::INFINITY, lhs, rhs)
    }

    /// Sample grid; `names` labels the columns.
    pub(crate) fn grid(mut self, names: &[&'static str], samples: Vec<Vec<f64>>) -> Self {
        self.inner.params = names.to_vec();
        self.inner.samples = samples;
        self
    }

    /// Single-parameter grid.
    pub(crate) fn over(self, name: &'static str, values: &[f64]) -> Self {
        self.grid(&[name], values.iter().map(|&v| vec![v]).collect())
    }

    pub(crate) fn relative(mut self) -> Self {
        self.inner.residual = Residual::Relative;
        self
    }

    pub(crate) fn note(mut self, note: &str) -> Self {
        self.inner.note = note.to_string();
        self
    }

    pub(crate) fn build(self) -> Identity {
        self.inner
    }
}

/// Cartesian product of parameter lists, first list varying slowest.
pub(crate) fn product(lists: &[&[f64]]) -> Vec<Vec<f64>> {
    let mut out = vec![vec![]];
    for list in lists {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for prefix in &out {
            for &v in *list {
                let mut row = prefix.clone();
                row.push(v);
                next.push(row);
            }
        }
        out = next;
    }
    out
}

/// Evaluator helpers shared by the topic modules.
pub(crate) mod eval {
    use crate::functions::{bateman_k, derivative_x, havelock_h, FunctionId};
    use crate::generalized::{bateman_k_gen, havelock_h_gen, GenParams};
    use crate::integral::ki as ki_fn;
    use crate::quadrature::{
        derivative_richardson, integrate_finite, integrate_oscillatory_tail, integrate_semiinf_decay,
        integrate_semiinf_oscillatory, QuadConfig,
    };
    use crate::Result;

    pub fn k(nu: f64, x: f64, c: &QuadConfig) -> Result<f64> {
        bateman_k(nu, x, c).map(|r| r.value)
    }

    pub fn h(nu: f64, x: f64, c: &QuadConfig) -> Result<f64> {
        havelock_h(nu, x, c).map(|r| r.value)
    }

    pub fn kg(nu: f64, alpha: f64, beta: f64, x: f64, c: &QuadConfig) -> Result<f64> {
        bateman_k_gen(GenParams::new(nu, alpha, beta)?, x, c).map(|r| r.value)
    }

    pub fn hg(nu: f64, alpha: f64, beta: f64, x: f64, c: &QuadConfig) -> Result<f64> {
        havelock_h_gen(GenParams::new(nu, alpha, beta)?, x, c).map(|r| r.value)
    }

    pub fn ki(n: u32, x: f64, c: &QuadConfig) -> Result<f64> {
        ki_fn(n, x, c).map(|r| r.value)
    }

    /// `∂^order/∂x^order` from the differentiated integral.
    pub fn kx(nu: f64, x: f64, order: u32, c: &QuadConfig) -> Result<f64> {
        derivative_x(FunctionId::BatemanK, nu, x, order, c).map(|r| r.value)
    }

    pub fn hx(nu: f64, x: f64, order: u32, c: &QuadConfig) -> Result<f64> {
        derivative_x(FunctionId::HavelockH, nu, x, order, c).map(|r| r.value)
    }

    /// Richardson derivative of a fallible function; the step is `h0`.
    pub fn diff(f: impl Fn(f64) -> Result<f64>, x: f64, order: u32, h0: f64) -> Result<f64> {
        derivative_richardson(|t| f(t).unwrap_or(f64::NAN), x, order, h0).map(|r| r.value)
    }

    pub fn quad(f: impl Fn(f64) -> Result<f64>, a: f64, b: f64, c: &QuadConfig) -> Result<f64> {
        integrate_finite(|t| f(t).unwrap_or(f64::NAN), a, b, c).map(|r| r.value)
    }

    /// `∫_0^∞` of an eventually exponentially decaying integrand.
    pub fn quad_decay(f: impl Fn(f64) -> Result<f64>, c: &QuadConfig) -> Result<f64> {
        integrate_semiinf_decay(|t| f(t).unwrap_or(f64::NAN), c).map(|r| r.value)
    }

    /// `∫_a^∞` of an oscillating integrand with the given half-period.
    pub fn quad_osc(f: impl Fn(f64) -> Result<f64>, a: f64, half_period: f64, c: &QuadConfig) -> Result<f64> {
        integrate_oscillatory_tail(|t| f(t).unwrap_or(f64::NAN), a, half_period, c).map(|r| r.value)
    }

    /// `∫_0^∞ [g_c(t) cos(ωt) + g_s(t) sin(ωt)] dt` with `g(t) = (g_c, g_s)`.
    pub fn fourier(g: impl Fn(f64) -> (f64, f64), omega: f64, c: &QuadConfig) -> Result<f64> {
        integrate_semiinf_oscillatory(g, omega, c).map(|r| r.value)
    }

    pub fn sign(n: i64) -> f64 {
        if n.rem_euclid(2) == 0 {
            1.0
        } else {
            -1.0
        }
    }
}

fn transform_identities() -> Vec<Identity> {
    transforms()
        .iter()
        .map(|e| {
            let id = e.id;
            let mut samples = Vec::new();
            for p in e.params {
                for s in e.sample_points(5) {
                    let mut row = p.to_vec();
                    row.push(s);
                    samples.push(row);
                }
            }
            let np = e.param_names.len();
            let mut names = e.param_names.to_vec();
            names.push("s");
            let lhs = move |p: &[f64], c: &QuadConfig| laplace_subject(id, p[np], &p[..np], c).map(|r| r.value);
            let rhs =
                move |p: &[f64], _: &QuadConfig| crate::transforms::transform(id)?.closed_unchecked(p[np], &p[..np]);
            let def = Def::new(e.id, e.citation, e.tier, 1e-6, lhs, rhs)
                .grid(&names, samples)
                .relative()
                .note(e.note);
            def.build()
        })
        .collect()
}

fn build() -> Vec<Identity> {
    let mut all = Vec::new();
    all.extend(basic::identities());
    all.extend(series::identities());
    all.extend(havelock::identities());
    all.extend(generalized::identities());
    all.extend(integral::identities());
    all.extend(transform_identities());
    all.extend(laplace::identities());
    all.extend(appendix_a::identities());
    all.extend(appendix_b::identities());
    all
}

/// The full catalog in its documented order: the function identities,
/// then the transforms, then the two appendices.
pub fn registry() -> &'static [Identity] {
    static REGISTRY: OnceLock<Vec<Identity>> = OnceLock::new();
    REGISTRY.get_or_init(build)
}

fn matches(identity: &Identity, filter: &str) -> bool {
    match filter {
        "" => true,
        "ASSERT" => identity.tier == Tier::Assert,
        "DIAGNOSE" => identity.tier == Tier::Diagnose,
        f => identity.id.contains(f) || identity.citation.contains(f),
    }
}

/// Entries matching `filter`, in registry order.
///
/// `ASSERT` and `DIAGNOSE` select a tier; any other string selects the
/// entries whose id or citation contains it. `None` selects everything.
pub fn list_identities(filter: Option<&str>) -> Vec<&'static Identity> {
    let f = filter.unwrap_or("");
    registry().iter().filter(|i| matches(i, f)).collect()
}

/// One failed sample evaluation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleError {
    pub params: Vec<f64>,
    pub message: String,
}

/// Result of checking one identity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub citation: String,
    pub tier: Tier,
    pub status: Status,
    /// Largest sample residual; `null` in JSON when every sample failed.
    pub max_residual: Option<f64>,
    pub samples: usize,
    pub tol: Option<f64>,
    /// Parameters of the worst sample.
    pub worst: Vec<f64>,
    pub errors: Vec<SampleError>,
}

fn check(identity: &Identity, cfg: &QuadConfig) -> IdentityReport {
    let mut max_residual: Option<f64> = None;
    let mut worst = Vec::new();
    let mut errors = Vec::new();
    for p in &identity.samples {
        let both = (identity.lhs)(p, cfg).and_then(|l| (identity.rhs)(p, cfg).map(|r| (l, r)));
        match both {
            Ok((l, r)) => {
                let mut res = (l - r).abs();
                if identity.residual == Residual::Relative {
                    res /= r.abs().max(1.0);
                }
                if !res.is_finite() {
                    errors.push(SampleError {
                        params: p.clone(),
                        message: format!("non-finite residual (lhs {l}, rhs {r})"),
                    });
                    continue;
                }
                if max_residual.map_or(true, |m| res > m) {
                    max_residual = Some(res);
                    worst = p.clone();
                }
            }
            Err(e) => errors.push(SampleError {
                params: p.clone(),
                message: e.to_string(),
            }),
        }
    }
    let status = match identity.tier {
        Tier::Diagnose => Status::Diagnosed,
        Tier::Assert => {
            let ok = errors.is_empty() && max_residual.is_some_and(|m| m <= identity.tol);
            if ok {
                Status::Pass
            } else {
                Status::Fail
            }
        }
    };
    IdentityReport {
        identity: identity.id.clone(),
        citation: identity.citation.clone(),
        tier: identity.tier,
        status,
        max_residual,
        samples: identity.samples.len(),
        tol: identity.tol.is_finite().then_some(identity.tol),
        worst,
        errors,
    }
}

/// Checks one identity over its sample grid.
pub fn verify_identity(id: &str, cfg: &QuadConfig) -> Result<IdentityReport> {
    let identity = registry()
        .iter()
        .find(|i| i.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))?;
    Ok(check(identity, cfg))
}

/// Aggregate counts of a suite run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub entries: usize,
    pub passed: usize,
    pub failed: usize,
    pub diagnosed: usize,
    pub samples: usize,
}

/// Report of a suite run, entries in registry order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub filter: String,
    pub entries: Vec<IdentityReport>,
    pub totals: Totals,
}

impl SuiteReport {
    /// The one-line human summary.
    pub fn summary(&self) -> String {
        format!(
            "{} passed, {} failed, {} diagnosed",
            self.totals.passed, self.totals.failed, self.totals.diagnosed
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs every identity matching `filter` on up to `parallelism` threads.
///
/// Entry evaluation is pure, and results are collected in registry order,
/// so the report does not depend on `parallelism`.
pub fn run_suite(filter: Option<&str>, cfg: &QuadConfig, parallelism: usize) -> SuiteReport {
    let selected = list_identities(filter);
    let run = || selected.par_iter().map(|i| check(i, cfg)).collect::<Vec<_>>();
    let entries = match rayon::ThreadPoolBuilder::new().num_threads(parallelism.max(1)).build() {
        Ok(pool) => pool.install(run),
        Err(_) => selected.iter().map(|i| check(i, cfg)).collect(),
    };
    let mut totals = Totals {
        entries: entries.len(),
        ..Totals::default()
    };
    for e in &entries {
        totals.samples += e.samples;
        match e.status {
            Status::Pass => totals.passed += 1,
            Status::Fail => totals.failed += 1,
            Status::Diagnosed => totals.diagnosed += 1,
        }
    }
    SuiteReport {
        filter: filter.unwrap_or("").to_string(),
        entries,
        totals,
    }
}
