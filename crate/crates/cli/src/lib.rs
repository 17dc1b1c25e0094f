//! Command-line front end for `stableass`: input documents, JSON reports,
//! and the oracle cross-verification mode.
//!
//! Every invocation produces exactly one JSON document. Exit codes: 0 on
//! success, 1 when verification finds a disagreement, 2 for input errors,
//! 3 when a resource bound is hit.

pub mod args;
mod commands;
pub mod error;
pub mod input;
pub mod report;
mod verify;

use std::ffi::OsString;
use std::io::Read;

use clap::error::ErrorKind as ClapErrorKind;
use clap::Parser;
use serde_json::Value;
use stableass::Limits;

pub use args::Cli;
pub use error::{CliError, ErrorKind};
pub use input::{canonicalize, InputDoc};

/// The result of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    /// A report or structured error document, with its exit code.
    Document { document: Value, exit_code: u8 },
    /// Help or version text requested on the command line.
    Text(String),
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        match self {
            Outcome::Document { exit_code, .. } => *exit_code,
            Outcome::Text(_) => 0,
        }
    }

    fn from_result(result: Result<Value, CliError>) -> Self {
        match result {
            Ok(document) => Outcome::Document { document, exit_code: 0 },
            Err(e) => Outcome::Document {
                document: e.to_document(),
                exit_code: e.kind.exit_code(),
            },
        }
    }
}

/// Parses `args` (including the program name) and runs the request,
/// reading the input document from `stdin` when `--input -` is given.
pub fn run_args<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, stdin),
        Err(e) => match e.kind() {
            ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion => {
                Outcome::Text(e.render().to_string())
            }
            _ => {
                let rendered = e.render().to_string();
                let first = rendered.lines().next().unwrap_or("invalid arguments");
                let message = first.trim_start_matches("error: ").to_string();
                Outcome::from_result(Err(CliError::input(message)
                    .with_details(Value::String(rendered))))
            }
        },
    }
}

pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    Outcome::from_result(run_inner(cli, stdin))
}

fn run_inner(cli: &Cli, stdin: &mut dyn Read) -> Result<Value, CliError> {
    let text = if cli.input == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(&cli.input)
            .map_err(|e| CliError::input(format!("cannot read {}: {e}", cli.input)))?
    };
    let doc = InputDoc::parse(&text)?;
    let defaults = Limits::default();
    let ctx = commands::Context {
        limits: Limits {
            max_candidates: cli.max_candidates.unwrap_or(defaults.max_candidates),
            max_n: cli.max_n.unwrap_or(defaults.max_n),
            ..defaults
        },
        seed: cli.seed,
    };
    commands::execute(&cli.command, &doc, &ctx)
}
