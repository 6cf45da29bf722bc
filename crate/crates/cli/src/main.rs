mod args;
mod commands;
mod report;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use args::Cli;
use supersinglet_core::Error;

/// Failure modes of a command run.
#[derive(Debug)]
pub enum Failure {
    /// Bad input or exhausted budget: exit 2.
    Usage(String, Option<&'static str>),
    /// Anything else from the library: exit 2.
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

/// A finished report, and whether the verification it describes succeeded.
pub struct Outcome {
    pub report: report::Report,
    pub success: bool,
    /// Printed instead of the report, for commands whose output is itself
    /// an input file.
    pub raw: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(outcome) => {
            let text = match outcome.raw {
                Some(raw) => raw,
                None => serde_json::to_string_pretty(&outcome.report).expect("reports serialize"),
            };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(io::stdout(), "{text}");
            if outcome.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(failure) => {
            let body = match failure {
                Failure::Usage(msg, advice) => json!({ "error": msg, "advice": advice }),
                Failure::Library(Error::BudgetExceeded {
                    what,
                    requested,
                    limit,
                    advice,
                }) => json!({
                    "error": format!("{what}: {requested} exceeds the limit {limit}"),
                    "advice": advice,
                }),
                Failure::Library(e @ Error::Json(_)) => {
                    json!({ "error": format!("malformed JSON: {e}") })
                }
                Failure::Library(e) => json!({ "error": e.to_string() }),
            };
            eprintln!(
                "{}",
                serde_json::to_string_pretty(&body).expect("errors serialize")
            );
            ExitCode::from(2)
        }
    }
}
