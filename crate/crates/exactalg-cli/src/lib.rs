//! Command-line front end for the exact algebra library: a JSON document
//! format, a registry of worked examples, the computation subcommands,
//! and the `verify` runner that executes every law suite and emits
//! machine-readable verdicts.
//!
//! Exit codes are strict and never mixed: 0 means the command succeeded,
//! 1 means the input or usage was bad, 2 means a mathematical check
//! failed and the output carries the failure report.

pub mod doc;
pub mod examples;
pub mod run;
pub mod verify;

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// Bad input or usage: exit code 1.
    Usage(String),
    /// A mathematical check failed before a report could be built: exit
    /// code 2.
    Failure(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Failure(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

pub type CliResult<T> = Result<T, CliError>;

pub(crate) fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub(crate) fn failure(msg: impl Into<String>) -> CliError {
    CliError::Failure(msg.into())
}
