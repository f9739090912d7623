mod args;
mod commands;
mod error;
mod json;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;
use crate::error::{CliError, CliResult};

fn emit(cli: &Cli, mut text: String) -> CliResult<()> {
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &cli.common.out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::io(path, e)),
        None => match std::io::stdout().write_all(text.as_bytes()) {
            // a closed pipe, as with `| head`, is not a failure
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
            other => other.map_err(|e| CliError::io("<stdout>", e)),
        },
    }
}

#[derive(serde::Serialize)]
struct Failure {
    schema: u32,
    error: error::ErrorReport,
}

fn fail(err: &CliError) -> ExitCode {
    let body = Failure { schema: json::SCHEMA, error: err.report() };
    eprintln!("{}", serde_json::to_string(&body).expect("error reports serialize"));
    ExitCode::from(err.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(&CliError::Usage(e.render().to_string().trim_end().to_string())),
    };
    match commands::run(&cli).and_then(|text| emit(&cli, text)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(&e),
    }
}
