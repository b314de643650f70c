mod args;
mod commands;
mod error;
mod figures;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use error::CliError;

fn run(argv: Vec<String>, out: &mut dyn Write) -> Result<(), CliError> {
    let argv = args::expand_config(argv)?;
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            write!(out, "{e}").map_err(|e| CliError::io("<stdout>", e))?;
            return Ok(());
        }
        Err(e) => {
            let msg = e.render().to_string();
            let msg = msg.trim_end().strip_prefix("error: ").unwrap_or(msg.trim_end());
            return Err(CliError::Usage(msg.to_string()));
        }
    };
    match &cli.command {
        Command::Eval(a) => commands::eval(a, out),
        Command::Table(a) => commands::table(a, out),
        Command::Figures(a) => figures::run(a, out),
        Command::Verify(a) => commands::verify(a, out),
        Command::Laplace(a) => commands::laplace(a, out),
        Command::Docs(a) => commands::docs(a, out),
    }
}

fn main() -> ExitCode {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(std::env::args().collect(), &mut out);
    let flushed = out.flush();
    match result.and(flushed.map_err(|e| CliError::io("<stdout>", e))) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
