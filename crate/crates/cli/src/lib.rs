//! Command implementations behind the `gapkit` binary.
//!
//! Every command returns an [`Outcome`]: a JSON document for stdout and a
//! status that maps onto the process exit code.

pub mod args;
pub mod brute;
pub mod commands;
pub mod digest;
pub mod gen;
pub mod seed;
pub mod suites;

use std::path::{Path, PathBuf};
use thiserror::Error;

pub use args::{Cli, Command};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn usage(e: impl std::fmt::Display) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Mismatch,
    Timeout,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 1,
            Status::Timeout => 3,
        }
    }
}

pub const USAGE_EXIT: i32 = 2;

#[derive(Clone, Debug)]
pub struct Outcome {
    pub stdout: String,
    pub status: Status,
    /// Human-readable extra line for stderr (timings and the like).
    pub note: Option<String>,
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::BuildExpander(a) => commands::build_expander(&a),
        Command::Power(a) => commands::power(&a),
        Command::Product(a) => commands::product(&a),
        Command::Amplify(a) => commands::amplify(&a),
        Command::Reduce(a) => commands::reduce(&a),
        Command::Solve(a) => commands::solve(&a),
        Command::Verify(a) => suites::verify(&a),
    }
}

pub(crate) fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub(crate) fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}
