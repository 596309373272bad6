//! The `vzlef` command line: catalogs, isolation and Lefschetz verdicts,
//! branching multiplicities and geometry checks, printed as JSON, CSV or
//! Markdown tables.
//!
//! [`run`] is the whole program minus process I/O, so tests can drive it in
//! process and compare the exact bytes the binary would print.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod table;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;

use crate::args::{Cli, Command};
use crate::config::Config;
use crate::error::{exit, CliError, Result};
use crate::table::Table;

/// Settings shared by every command after merging config and flags.
#[derive(Clone, Debug)]
pub struct Context {
    pub cfg: Config,
}

/// A command's table and how many of its rows failed their criterion.
#[derive(Clone, Debug)]
pub struct Report {
    pub table: Table,
    pub failures: usize,
    /// One-line summary for stderr.
    pub note: Option<String>,
}

impl Report {
    pub fn new(table: Table) -> Self {
        Report { table, failures: 0, note: None }
    }
}

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the program on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: exit::OK, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: exit::USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    match execute(&cli) {
        Ok((report, text)) => {
            let mut stderr = String::new();
            if let Some(note) = &report.note {
                stderr.push_str(&format!("vzlef: {note}\n"));
            }
            let code = if report.failures > 0 {
                stderr.push_str(&format!("vzlef: {} row(s) fail their criterion\n", report.failures));
                if cli.strict {
                    exit::CRITERION_FAILED
                } else {
                    exit::OK
                }
            } else {
                exit::OK
            };
            Outcome { code, stdout: text, stderr }
        }
        Err(e) => {
            let hint = if matches!(e, CliError::Usage(_)) { "\nsee `vzlef --help`" } else { "" };
            Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("vzlef: {e}{hint}\n") }
        }
    }
}

fn execute(cli: &Cli) -> Result<(Report, String)> {
    let mut cfg = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    if let Some(f) = cli.format {
        cfg.format = Some(f);
    }
    let format = cfg.format.unwrap_or_default();
    let ctx = Context { cfg };
    let report = match &cli.command {
        Command::Catalog(a) => commands::catalog::run(&ctx, a)?,
        Command::Isolation(a) => commands::isolation::run(&ctx, a)?,
        Command::Lefschetz(a) => commands::lefschetz::run(&ctx, a)?,
        Command::Branch(a) => commands::branch::run(&ctx, a)?,
        Command::Geometry(a) => commands::geometry::run(&ctx, a)?,
    };
    let text = report.table.render(format)?;
    Ok((report, text))
}
