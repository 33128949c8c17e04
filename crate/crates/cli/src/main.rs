mod cli;
mod commands;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use crate::cli::{Cli, OutputFormat};
use crate::commands::Failure;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::dispatch(&cli.command, cli.seed) {
        Ok(outcome) => {
            let text = match cli.output {
                OutputFormat::Json => serde_json::to_string_pretty(&outcome.json).expect("JSON value serializes"),
                OutputFormat::Human => outcome.human,
            };
            // A closed pipe downstream is not an error worth reporting.
            if let Err(e) = writeln!(io::stdout(), "{text}") {
                if e.kind() != io::ErrorKind::BrokenPipe {
                    eprintln!("internal error: {e}");
                    return ExitCode::from(3);
                }
            }
            if outcome.positive {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(message)) => {
            eprintln!("internal error: {message}");
            ExitCode::from(3)
        }
    }
}
