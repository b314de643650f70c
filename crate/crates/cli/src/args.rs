use std::fs;
use std::path::PathBuf;

use bateman::FunctionId;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "bateman",
    version,
    about = "Bateman and Havelock functions: evaluation, tables, figures and identity checks"
)]
#[command(args_override_self = true)]
pub struct Cli {
    /// Key-value file whose entries act as flags of the subcommand.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at one point.
    Eval(EvalArgs),
    /// Tabulate a function over orders and an argument grid.
    Table(TableArgs),
    /// Write the data behind the twelve figures as CSV.
    Figures(FiguresArgs),
    /// Run the identity suite.
    Verify(VerifyArgs),
    /// Compare a registered Laplace transform with numeric integration.
    Laplace(LaplaceArgs),
    /// Regenerate the Markdown documentation from the registries.
    Docs(DocsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Absolute and relative quadrature tolerance.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,

    /// Worker threads; 0 uses every available core.
    #[arg(long, default_value_t = 0)]
    pub parallelism: usize,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    /// k, h, kgen, hgen or ki.
    #[arg(long = "fn", value_parser = parse_function)]
    pub function: FunctionId,

    /// Order. For ki this is the Bateman order 2n.
    #[arg(long, allow_negative_numbers = true)]
    pub nu: f64,

    #[arg(long, allow_negative_numbers = true)]
    pub x: f64,

    /// Cosine power of the generalized functions.
    #[arg(long, default_value_t = 0.0)]
    pub alpha: f64,

    /// Sine power of the generalized functions.
    #[arg(long, default_value_t = 0.0)]
    pub beta: f64,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(long = "fn", value_parser = parse_function)]
    pub function: FunctionId,

    /// Orders, comma separated.
    #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
    pub nu: Vec<f64>,

    #[arg(long, allow_negative_numbers = true)]
    pub x_min: f64,

    #[arg(long, allow_negative_numbers = true)]
    pub x_max: f64,

    #[arg(long)]
    pub x_step: f64,

    #[arg(long, default_value_t = 0.0)]
    pub alpha: f64,

    #[arg(long, default_value_t = 0.0)]
    pub beta: f64,

    /// Output file; standard output if absent.
    #[arg(long)]
    pub output: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct FiguresArgs {
    /// Directory receiving fig01.csv to fig12.csv.
    #[arg(long, default_value = "figures")]
    pub out_dir: PathBuf,

    /// Generate only these figures (1 to 12), comma separated.
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<u32>,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// ASSERT, DIAGNOSE, or a substring of ids and citations.
    #[arg(long)]
    pub filter: Option<String>,

    /// Write the JSON report here.
    #[arg(long)]
    pub output: Option<PathBuf>,

    /// `json` prints the report instead of one line per entry.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct LaplaceArgs {
    /// Registered transform id.
    #[arg(long)]
    pub id: String,

    #[arg(long)]
    pub s: f64,

    /// Transform parameters, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub params: Vec<f64>,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct DocsArgs {
    #[arg(long, default_value = "docs")]
    pub out_dir: PathBuf,

    #[command(flatten)]
    pub common: Common,
}

fn parse_function(s: &str) -> Result<FunctionId, String> {
    s.parse()
        .map_err(|_| format!("unknown function `{s}` (expected k, h, kgen, hgen or ki)"))
}

/// Splits `key = value` lines; `#` starts a comment. Keys may use `_` or
/// `-` and may carry a leading `--`.
pub fn parse_config(text: &str) -> Result<Vec<(String, String)>, CliError> {
    let mut out = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .or_else(|| line.split_once(':'))
            .ok_or_else(|| CliError::Usage(format!("config line {}: expected `key = value`", no + 1)))?;
        let key = k.trim().trim_start_matches("--").replace('_', "-");
        if key.is_empty() {
            return Err(CliError::Usage(format!("config line {}: empty key", no + 1)));
        }
        let value = v.trim().trim_matches('"').to_string();
        out.push((key, value));
    }
    Ok(out)
}

/// Expands `--config <path>` into flags. Config entries are placed right
/// after the subcommand; a key also given on the command line is dropped
/// so the command line wins. A `command` key supplies the subcommand when
/// the command line has none.
pub fn expand_config(argv: Vec<String>) -> Result<Vec<String>, CliError> {
    let mut path = None;
    let mut rest = Vec::with_capacity(argv.len());
    let mut it = argv.into_iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            path = Some(
                it.next()
                    .ok_or_else(|| CliError::Usage("--config needs a path".into()))?,
            );
        } else if let Some(p) = a.strip_prefix("--config=") {
            path = Some(p.to_string());
        } else {
            rest.push(a);
        }
    }
    let Some(path) = path else {
        return Ok(rest);
    };
    let text = fs::read_to_string(&path).map_err(|source| CliError::Io {
        path: path.clone().into(),
        source,
    })?;
    let mut command = None;
    let mut flags = Vec::new();
    for (k, v) in parse_config(&text)? {
        let flag = format!("--{k}");
        if rest.iter().any(|a| *a == flag || a.starts_with(&format!("{flag}="))) {
            continue;
        }
        match (k.as_str(), v.as_str()) {
            ("command", _) => command = Some(v),
            (_, "true") => flags.push(format!("--{k}")),
            (_, "false") => {}
            _ => {
                flags.push(format!("--{k}"));
                flags.push(v);
            }
        }
    }
    let known = ["eval", "table", "figures", "verify", "laplace", "docs"];
    let pos = rest.iter().position(|a| known.contains(&a.as_str()));
    let mut out = Vec::with_capacity(rest.len() + flags.len() + 1);
    match pos {
        Some(i) => {
            out.extend(rest[..=i].iter().cloned());
            out.extend(flags);
            out.extend(rest[i + 1..].iter().cloned());
        }
        None => {
            let cmd = command.ok_or_else(|| CliError::Usage("no subcommand given and none in the config".into()))?;
            out.extend(rest.first().cloned());
            out.push(cmd);
            out.extend(flags);
            out.extend(rest.into_iter().skip(1));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &[&str]) -> Vec<String> {
        s.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn config_lines() {
        let kv = parse_config("# grid\nfn = k\nx_min: 0\n--x-step = 0.5 # inline\n").unwrap();
        assert_eq!(
            kv,
            vec![
                ("fn".into(), "k".into()),
                ("x-min".into(), "0".into()),
                ("x-step".into(), "0.5".into())
            ]
        );
        assert!(parse_config("novalue").is_err());
    }

    #[test]
    fn command_line_follows_config() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("c.conf");
        fs::write(&p, "command = eval\nfn = k\nnu = 0\nx = 1\n").unwrap();
        let out = expand_config(v(&["bateman", "--config", p.to_str().unwrap(), "--x", "2"])).unwrap();
        assert_eq!(out, v(&["bateman", "eval", "--fn", "k", "--nu", "0", "--x", "2"]));
        let out = expand_config(v(&["bateman", "eval", "--config", p.to_str().unwrap()])).unwrap();
        assert_eq!(out, v(&["bateman", "eval", "--fn", "k", "--nu", "0", "--x", "1"]));
    }
}
