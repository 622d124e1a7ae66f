mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use args::{Cli, Command};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Derive(a) => commands::derive(a),
        Command::Pt(a) => commands::pt(a),
        Command::Diag(a) => commands::diag(a),
        Command::Reproduce(a) => commands::reproduce_table(a),
    };
    match result {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = stdout.write_all(outcome.stdout.as_bytes());
            ExitCode::from(outcome.code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
