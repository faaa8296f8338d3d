//! Command implementations behind the `ordcone` binary.
//!
//! Every command writes its regular output to `out` and notices to `err`,
//! and reports failure through [`Failure`], whose [`Failure::code`] is the
//! process exit status.

pub mod args;
mod commands;
pub mod docs;
mod geojson;

use std::fmt;
use std::io::Write;

use ordcone::Error;

pub use args::Cli;
pub use commands::run;

/// Exit status 1.
pub const EXIT_USAGE: u8 = 1;
/// Exit status 2.
pub const EXIT_WEIGHTS: u8 = 2;
/// Exit status 3.
pub const EXIT_CAP: u8 = 3;
/// Exit status 4.
pub const EXIT_MISMATCH: u8 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Usage(String),
    Weights(String),
    Cap(String),
    Mismatch(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Weights(_) => EXIT_WEIGHTS,
            Failure::Cap(_) => EXIT_CAP,
            Failure::Mismatch(_) => EXIT_MISMATCH,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Weights(m) | Failure::Cap(m) | Failure::Mismatch(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::NegativeWeight(_) | Error::ProductExceedsOne(_) | Error::NotPointed(_) => {
                Failure::Weights(e.to_string())
            }
            Error::PathCapExceeded(_) => Failure::Cap(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

/// Parses `args` and runs the command; returns the exit status.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    match run(&cli, out, err) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {f}");
            f.code()
        }
    }
}
