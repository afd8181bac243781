//! Command-line front end: identity sweeps, region and conjecture
//! certification, determinant reproduction and matrix dumps.
//!
//! Exit codes: 0 success, 1 a checked claim failed (or an internal error),
//! 2 usage error.

pub mod args;
pub mod commands;
pub mod output;

use std::ffi::OsString;
use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, Command};

/// How a command that ran to completion ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Success,
    /// A claim the command checks did not hold.
    Violation,
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Internal(String),
}

impl From<cesaro_core::Error> for Failure {
    fn from(e: cesaro_core::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

pub fn run(cli: Cli) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Verify(a) => commands::verify(&a),
        Command::Region(a) => commands::region(&a),
        Command::Conjecture(a) => commands::conjecture(&a),
        Command::Dets(a) => commands::dets(&a),
        Command::Matrix(a) => commands::matrix(&a),
    }
}

pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version also arrive here, with exit code 0.
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
