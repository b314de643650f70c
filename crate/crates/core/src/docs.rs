//! Markdown documentation generated from the registries.
//!
//! Every page is a pure function of the identity registry, the transform
//! table and a suite report, so regenerating with the same inputs yields
//! the same bytes.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use crate::identities::{Identity, IdentityReport, Status, SuiteReport, Tier};
use crate::transforms::TransformEntry;

/// One generated file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub name: &'static str,
    pub content: String,
}

/// Renders the full document set: catalog, transforms, schema and
/// discrepancies, in that order.
pub fn render_catalog(registry: &[Identity], report: &SuiteReport, transforms: &[TransformEntry]) -> Vec<Document> {
    vec![
        Document {
            name: "index.md",
            content: index_page(registry, report),
        },
        Document {
            name: "catalog.md",
            content: catalog_page(registry, report),
        },
        Document {
            name: "transforms.md",
            content: transforms_page(transforms),
        },
        Document {
            name: "schema.md",
            content: SCHEMA.to_string(),
        },
        Document {
            name: "discrepancies.md",
            content: discrepancies_page(registry, report),
        },
    ]
}

/// Writes `docs` into `dir`, creating it if needed.
pub fn write_docs(dir: &Path, docs: &[Document]) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    for d in docs {
        fs::write(dir.join(d.name), d.content.as_bytes())?;
    }
    Ok(())
}

/// Group key of a citation: its leading parenthesised label.
pub fn citation_key(citation: &str) -> &str {
    if citation.starts_with('(') {
        if let Some(end) = citation.find(')') {
            return &citation[..=end];
        }
    }
    citation.split(':').next().unwrap_or(citation)
}

/// Escapes a string for a table cell. Only `|` and line breaks need it; a
/// reader recovers the text by dropping the backslashes before `|`.
pub fn cell(s: &str) -> String {
    s.replace('|', "\\|").replace('\n', " ")
}

fn sci(v: f64) -> String {
    format!("{v:.3e}")
}

fn residual_cell(r: &IdentityReport) -> String {
    match r.max_residual {
        Some(v) => sci(v),
        None => "n/a".to_string(),
    }
}

fn badge(s: Status) -> String {
    format!("**{}**", s.as_str())
}

fn report_for<'a>(report: &'a SuiteReport, id: &str) -> Option<&'a IdentityReport> {
    report.entries.iter().find(|e| e.identity == id)
}

fn index_page(registry: &[Identity], report: &SuiteReport) -> String {
    let asserts = registry.iter().filter(|i| i.tier == Tier::Assert).count();
    let mut s = String::new();
    s.push_str("# Documentation\n\n");
    s.push_str("Generated by `bateman docs`. Do not edit by hand.\n\n");
    let _ = writeln!(
        s,
        "- [Identity catalog](catalog.md): {} entries, {} ASSERT.",
        registry.len(),
        asserts
    );
    s.push_str("- [Laplace transforms](transforms.md)\n");
    s.push_str("- [CSV and JSON schema](schema.md)\n");
    let _ = writeln!(
        s,
        "- [Known discrepancies](discrepancies.md): {} DIAGNOSE entries.",
        registry.len() - asserts
    );
    let _ = writeln!(s, "\nLast suite run: {}.", report.summary());
    s
}

fn catalog_page(registry: &[Identity], report: &SuiteReport) -> String {
    let mut s = String::new();
    s.push_str("# Identity catalog\n\n");
    s.push_str("One row per registry entry. ASSERT rows must stay within their tolerance; ");
    s.push_str("DIAGNOSE rows only record the measured residual (see [discrepancies](discrepancies.md)).\n\n");
    let _ = writeln!(s, "{}\n", report.summary());

    let mut key = None;
    for i in registry {
        let k = citation_key(&i.citation);
        if key != Some(k) {
            key = Some(k);
            let _ = writeln!(s, "\n## {}\n", k);
            s.push_str("| id | citation | tier | tol | status | max residual | samples |\n");
            s.push_str("|---|---|---|---|---|---|---|\n");
        }
        let (status, residual) = match report_for(report, &i.id) {
            Some(r) => (badge(r.status), residual_cell(r)),
            None => ("not run".to_string(), String::new()),
        };
        let tol = if i.tol.is_finite() { sci(i.tol) } else { String::new() };
        let _ = writeln!(
            s,
            "| `{}` | {} | {} | {} | {} | {} | {} |",
            i.id,
            cell(&i.citation),
            i.tier,
            tol,
            status,
            residual,
            i.samples.len()
        );
    }
    s
}

fn transforms_page(transforms: &[TransformEntry]) -> String {
    let mut s = String::new();
    s.push_str("# Laplace transforms\n\n");
    s.push_str("`F(s) = ∫₀^∞ e^{-st} f(t) dt`. Check one with `bateman laplace --id <id> --s <s>`.\n\n");
    s.push_str("| id | citation | subject f(t) | closed form F(s) | s domain | parameters | limits (f(0+), f(inf)) | tier | note |\n");
    s.push_str("|---|---|---|---|---|---|---|---|---|\n");
    for t in transforms {
        let params = if t.param_names.is_empty() {
            String::new()
        } else {
            t.param_names
                .iter()
                .zip(t.params.iter())
                .map(|(n, v)| format!("{n} ∈ {v:?}"))
                .collect::<Vec<_>>()
                .join("; ")
        };
        let limits = t
            .limits
            .map(|l| format!("{}, {}", l.initial, l.final_))
            .unwrap_or_default();
        let _ = writeln!(
            s,
            "| `{}` | {} | {} | {} | ({}, {}) | {} | {} | {} | {} |",
            t.id,
            cell(t.citation),
            cell(t.subject),
            cell(t.closed_form),
            t.s_domain.0,
            t.s_domain.1,
            params,
            limits,
            t.tier,
            cell(t.note)
        );
    }
    s
}

fn discrepancies_page(registry: &[Identity], report: &SuiteReport) -> String {
    let mut s = String::new();
    s.push_str("# Known discrepancies\n\n");
    s.push_str("Entries whose printed form does not hold numerically, diverges, or could not be ");
    s.push_str("checked. They run in the DIAGNOSE tier and never fail the suite. Where a working ");
    s.push_str("form was found it is registered separately with an id ending in `_corrected`.\n\n");
    for i in registry.iter().filter(|i| i.tier == Tier::Diagnose) {
        let _ = writeln!(s, "## `{}`\n", i.id);
        let _ = writeln!(s, "- citation: {}", i.citation);
        match report_for(report, &i.id) {
            Some(r) => {
                let _ = writeln!(
                    s,
                    "- measured residual: {} over {} samples",
                    residual_cell(r),
                    r.samples
                );
                if !r.worst.is_empty() {
                    let _ = writeln!(s, "- worst sample: {}", format_params(&i.params, &r.worst));
                }
                if !r.errors.is_empty() {
                    let _ = writeln!(
                        s,
                        "- failed samples: {} (first: {})",
                        r.errors.len(),
                        r.errors[0].message
                    );
                }
            }
            None => s.push_str("- measured residual: not run\n"),
        }
        if !i.note.is_empty() {
            let _ = writeln!(s, "- note: {}", i.note);
        }
        for c in corrections(registry, i) {
            let res = report_for(report, &c.id)
                .map(|r| format!("{}, residual {}", r.status, residual_cell(r)))
                .unwrap_or_else(|| "not run".to_string());
            let _ = writeln!(s, "- corrected form: `{}` ({})", c.id, res);
        }
        s.push('\n');
    }
    s
}

fn format_params(names: &[&str], values: &[f64]) -> String {
    names
        .iter()
        .zip(values)
        .map(|(n, v)| format!("{n} = {v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

// `_corrected` entries that repair `diag`: the id with the suffix, or
// failing that any corrected entry under the same citation key.
fn corrections<'a>(registry: &'a [Identity], diag: &Identity) -> Vec<&'a Identity> {
    let direct = format!("{}_corrected", diag.id);
    let exact: Vec<_> = registry.iter().filter(|i| i.id == direct).collect();
    if !exact.is_empty() {
        return exact;
    }
    let key = citation_key(&diag.citation);
    registry
        .iter()
        .filter(|i| i.id.ends_with("_corrected") && citation_key(&i.citation) == key)
        .collect()
}

const SCHEMA: &str = r#"# Output schema

All text output is UTF-8 with LF line endings. Numbers use `.` as the decimal
separator regardless of locale.

## Numbers

Values are written in the shortest form that round-trips, capped at 15
significant digits. Exponents use `e` (`1.5e-7`). Zero is `0`. A value that
could not be computed is an empty CSV cell or `null` in JSON.

## CSV (`table`, `figures`)

Header row:

```
nu,x,value,err_est,method
```

| column | meaning |
|---|---|
| `nu` | order of the function (for `ki`, the Bateman order `2n`) |
| `x` | argument |
| `value` | function value; empty when the point did not converge |
| `err_est` | absolute error estimate; for a non-converged point, the estimate of the partial result; empty on `ERROR` |
| `method` | `CLOSED`, `QUAD_FINITE`, `QUAD_OSC`, `QUAD_DECAY`, `SERIES`, `SERIES_LIMIT`, `PV`, `RICHARDSON`; `NON_CONVERGED` when the budget ran out, `ERROR` when the point is outside the domain |

Rows are ordered by `nu`, then by `x`.

Figure files (`fig01.csv` to `fig12.csv`) use the same columns. In the
derivative figures (`fig09.csv` to `fig12.csv`) `value` is the derivative
with respect to the order.

## JSON

Keys appear in the order listed.

### Suite report (`verify`)

| key | type | meaning |
|---|---|---|
| `filter` | string | the filter used, empty for all |
| `entries` | array | one object per identity, registry order |
| `entries[].identity` | string | id |
| `entries[].citation` | string | citation |
| `entries[].tier` | string | `ASSERT` or `DIAGNOSE` |
| `entries[].status` | string | `PASS`, `FAIL` or `DIAGNOSED` |
| `entries[].max_residual` | number or null | largest residual over the samples that evaluated |
| `entries[].samples` | integer | number of samples |
| `entries[].tol` | number or null | tolerance; null for DIAGNOSE |
| `entries[].worst` | array of numbers | parameters of the worst sample |
| `entries[].errors` | array | samples that failed to evaluate, each `{params, message}` |
| `totals` | object | `entries`, `passed`, `failed`, `diagnosed`, `samples` |

### Point evaluation (`eval --format json`)

`{"function", "nu", "x", "value", "err_est", "method"}`; `value` is null for a
non-converged point.

### Transform check (`laplace --format json`)

`{"id", "s", "params", "numeric", "err_est", "closed", "residual"}`.
"#;
