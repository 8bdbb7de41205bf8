//! Library behind the `ffourier` binary: argument types, signal specs, CSV
//! and SVG output, and one function per subcommand.
//!
//! Every command returns an [`commands::Output`] held in memory; nothing is
//! written until the caller asks, so identical inputs give identical bytes.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod commands;
pub mod config;
pub mod csvio;
pub mod error;
pub mod family;
pub mod plot;
pub mod report;
pub mod spec;

use clap::Parser;

pub use args::Cli;
pub use error::{CliError, CliResult, EXIT_INPUT, EXIT_NUMERIC};

/// Parse arguments, run, write outputs and return the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { 0 };
        }
    };
    let result = commands::run(&cli).and_then(|out| {
        out.write(&cli.common)?;
        Ok(out)
    });
    match result {
        Ok(out) => {
            for w in &out.warnings {
                eprintln!("warning: {w}");
            }
            match out.failure {
                Some(f) => {
                    eprintln!("error: {f}");
                    EXIT_NUMERIC
                }
                None => 0,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
