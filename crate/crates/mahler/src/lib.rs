//! Command-line front end for `mahler-core`.
//!
//! Every verb prints one JSON envelope on standard output,
//! `{schema_version, command, result}` or `{schema_version, command, error}`,
//! except `plot`, which prints CSV. Exit codes: 0 success, 1 domain error or
//! failed check, 2 usage or parse error.

mod args;
mod commands;
pub mod examples;
pub mod output;
pub mod sweep;

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use mahler_core::Error;

pub use args::{Cli, Command};
use commands::{execute, Outcome};
use output::{CommandEcho, ErrorBody, Failure, Num, Success, Timing, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

fn emit_error(out: &mut dyn Write, verb: &str, args: &[String], code: &str, message: String) {
    let failure = Failure {
        schema_version: SCHEMA_VERSION,
        command: CommandEcho { verb, args },
        error: ErrorBody {
            code: code.to_string(),
            message,
        },
    };
    let text = serde_json::to_string_pretty(&failure).expect("error envelope serializes");
    let _ = writeln!(out, "{text}");
}

fn verb_of(command: &Command) -> &'static str {
    match command {
        Command::Measure(_) => "measure",
        Command::Mt { .. } => "mt",
        Command::MtSurd { .. } => "mt-surd",
        Command::Attainment { .. } => "attainment",
        Command::Certify { .. } => "certify",
        Command::SmallQuadratics { .. } => "small-quadratics",
        Command::Plot(_) => "plot",
        Command::OracleCheck { .. } => "oracle-check",
        Command::VerifyPaper => "verify-paper",
    }
}

/// Parses `argv` (program name first), runs the command, writes its output to
/// `out` and returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let echo: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
        Err(e) => {
            let verb = echo.first().map(String::as_str).unwrap_or("");
            emit_error(out, verb, &echo, "USAGE_ERROR", e.render().to_string().trim_end().to_string());
            return EXIT_USAGE;
        }
    };
    let verb = verb_of(&cli.command);
    let started = Instant::now();
    let display = match output::Display::new(&cli.log_base) {
        Ok(d) => d,
        Err(e) => {
            emit_error(out, verb, &echo, e.code(), e.to_string());
            return exit_code(&e);
        }
    };
    match execute(&cli.command, display) {
        Ok(Outcome::Csv(text)) => {
            let _ = write!(out, "{text}");
            EXIT_OK
        }
        Ok(Outcome::Json(result, exit)) => {
            let timing = cli.timing.then(|| Timing {
                elapsed_ms: Num(started.elapsed().as_secs_f64() * 1e3),
            });
            let success = Success {
                schema_version: SCHEMA_VERSION,
                command: CommandEcho { verb, args: &echo },
                result,
                timing,
            };
            let text = serde_json::to_string_pretty(&success).expect("envelope serializes");
            let _ = writeln!(out, "{text}");
            exit
        }
        Err(e) => {
            emit_error(out, verb, &echo, e.code(), e.to_string());
            exit_code(&e)
        }
    }
}
