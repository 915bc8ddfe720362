//! Command-line front end for `cubiccert`.
//!
//! [`run`] parses an argument vector, runs one subcommand and returns the
//! exit code with the canonical JSON report. Keys are sorted and exact
//! rationals are `"num/den"` strings, so identical invocations give
//! byte-identical output.

pub mod args;
pub mod commands;
pub mod report;
pub mod reproduce;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::{json, Value};

use args::{Cli, Command};

pub const EXIT_OK: i32 = 0;
/// A `reproduce` bundle ran but at least one assertion failed.
pub const EXIT_ASSERTION: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_DEGENERACY: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    /// Report text (JSON, or help text for `--help` / `--version`).
    pub output: String,
    pub out: Option<PathBuf>,
}

pub fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Genus(_) => "genus",
        Command::DiscCurve(_) => "disc-curve",
        Command::Classify(_) => "classify",
        Command::Fibre(_) => "fibre",
        Command::Enumerate(_) => "enumerate",
        Command::EcSearch(_) => "ec-search",
        Command::EcRank(_) => "ec-rank",
        Command::CsCheck(_) => "cs-check",
        Command::Galois(_) => "galois",
        Command::Flexes(_) => "flexes",
        Command::Punctures(_) => "punctures",
        Command::VerifyMap(_) => "verify-map",
        Command::Reproduce(_) => "reproduce",
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn error_report(command: Option<&str>, kind: &str, message: &str) -> Value {
    json!({ "command": command, "error": { "kind": kind, "message": message } })
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, output: e.render().to_string(), out: None }
                }
                _ => Outcome {
                    code: EXIT_PRECONDITION,
                    output: render(&error_report(None, "usage", e.render().to_string().trim())),
                    out: None,
                },
            };
        }
    };
    let name = command_name(&cli.command);
    let (code, report) = match commands::dispatch(&cli.command) {
        Ok(result) => {
            let failed = matches!(cli.command, Command::Reproduce(_)) && result["passed"] != Value::Bool(true);
            (if failed { EXIT_ASSERTION } else { EXIT_OK }, json!({ "command": name, "result": result }))
        }
        Err(e) if e.is_degeneracy() => (EXIT_DEGENERACY, error_report(Some(name), "degeneracy", &e.to_string())),
        Err(e) => (EXIT_PRECONDITION, error_report(Some(name), "precondition", &e.to_string())),
    };
    Outcome { code, output: render(&report), out: cli.out }
}
