//! Verbs, reports, and the on-disk cache behind the `qzeta` binary.
//!
//! Exit codes: 0 every check passed, 1 argument or I/O trouble, 2 some
//! check failed, 3 inconclusive (typically: not enough order to decide).

pub mod args;
pub mod cache;
pub mod ops;
pub mod parse;
pub mod report;

use std::fs;
use std::path::Path;
use std::time::Instant;

use clap::Parser;
use thiserror::Error;

use crate::args::{Cli, Format, Verb};
use crate::ops::Context;
use crate::parse::ParseError;
use crate::report::Report;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Label(#[from] relations::LabelError),
    #[error(transparent)]
    Dims(#[from] relations::DimsError),
    #[error(transparent)]
    Template(#[from] qzeta::TemplateError),
    #[error(transparent)]
    Asymptotics(#[from] qzeta::AsymptoticsError),
    #[error(transparent)]
    Limit(#[from] qzeta::LimitError),
    #[error(transparent)]
    Series(#[from] exact_core::series::SeriesError),
    #[error(transparent)]
    Localization(#[from] dt_local::DtError),
    #[error("{0}")]
    Usage(String),
    #[error("csv output is limited to flat coefficient tables; this command produces none (use --format json)")]
    NoCsv,
}

/// Runs the requested verb to a finished report. Verification failures are
/// verdicts inside the report, never `Err`.
pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let ctx = Context::new(cli.cache_dir.clone());
    let started = Instant::now();
    let mut report = match &cli.verb {
        Verb::Z(args) => ops::series::run_z(args, &ctx)?,
        Verb::Stuffle(args) => ops::algebra::run_stuffle(args)?,
        Verb::Relations { action } => match action {
            args::RelationsAction::Membership(args) => ops::algebra::run_membership(args)?,
            args::RelationsAction::Closure(args) => ops::algebra::run_closure(args)?,
        },
        Verb::Dims(args) => ops::algebra::run_dims(args)?,
        Verb::Conjecture1(args) => ops::algebra::run_conjecture1(args)?,
        Verb::Pp(args) => ops::geometry::run_pp(args)?,
        Verb::Dt { action } => match action {
            args::DtAction::Verify(args) => ops::geometry::run_dt_verify(args)?,
            args::DtAction::Conjecture3(args) => ops::geometry::run_dt_conjecture3(args)?,
        },
        Verb::Asymp(args) => ops::analysis::run_asymp(args)?,
        Verb::Limit(args) => ops::analysis::run_limit(args)?,
        Verb::Cache { action } => ops::run_cache(action, &ctx)?,
    };
    if cli.timing {
        report.set_timing(started.elapsed());
    }
    Ok(report)
}

/// Renders to stdout in the chosen format and optionally writes the full
/// JSON report to a file. Cache diagnostics go to stderr so stdout stays
/// byte-stable across cache states.
pub fn emit(report: &Report, format: Format, json_path: Option<&Path>) -> Result<(), CliError> {
    for event in report.events() {
        eprintln!("event: {event}");
    }
    match format {
        Format::Text => println!("{}", report.render_text()),
        Format::Json => {
            // A bare payload (the documented coefficient object) when there
            // is no verdict to attach; the full report otherwise.
            let value = match report.payload() {
                Some(payload) if report.checks().is_empty() && report.findings().is_empty() => {
                    payload.clone()
                }
                _ => report.to_json(),
            };
            println!("{value}");
        }
        Format::Csv => match report.render_csv() {
            Some(csv) => print!("{csv}"),
            None => return Err(CliError::NoCsv),
        },
    }
    if let Some(path) = json_path {
        let mut text = serde_json::to_string_pretty(&report.to_json())?;
        text.push('\n');
        fs::write(path, text)?;
    }
    Ok(())
}

/// Full run for `main`: parse, execute, emit, map to an exit code.
pub fn run_main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            // clap routes help to stdout and errors to stderr.
            let _ = e.print();
            return code;
        }
    };
    let report = match execute(&cli) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    if let Err(e) = emit(&report, cli.format, cli.json.as_deref()) {
        eprintln!("error: {e}");
        return 1;
    }
    report.exit_code()
}
