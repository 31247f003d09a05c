//! Command-line front end.
//!
//! ```text
//! dsfusion fuse (--scenario PATH | --builtin takraw) --condition N [--trace] [--format table|json|csv] [--precision D]
//! dsfusion sweep (--scenario PATH | --builtin takraw) [--format table|json|csv]
//! dsfusion export-builtin takraw --out PATH
//! ```
//!
//! Exit codes: 0 success, 1 usage, 2 validation, 3 total conflict. Output is
//! assembled in memory and written only once the command has produced it, so
//! a run that fails early prints nothing to stdout. `sweep` still prints the
//! conditions that succeeded when others hit total conflict.

pub mod document;
pub mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::error::Error;
use crate::scenario::{builtin_takraw_scenario, Prediction, Scenario};

pub use document::{emit_scenario, parse_scenario, scenario_hash, DocumentError, ScenarioDocument};
pub use report::render_trace;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_CONFLICT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "dsfusion", version, about = "Dempster-Shafer evidence fusion")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fuse every source of one condition and report the winner.
    Fuse(FuseArgs),
    /// Predict every condition of a scenario.
    Sweep(SweepArgs),
    /// Write a built-in scenario as a JSON document.
    ExportBuiltin {
        #[arg(value_enum)]
        name: Builtin,
        /// Destination file, `-` for stdout.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Builtin {
    Takraw,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Scenario document (JSON).
    #[arg(long)]
    scenario: Option<PathBuf>,
    #[arg(long, value_enum)]
    builtin: Option<Builtin>,
}

#[derive(Debug, Args)]
struct FuseArgs {
    #[command(flatten)]
    source: Source,
    /// 1-based condition index.
    #[arg(long)]
    condition: usize,
    /// Print every pairwise combination table.
    #[arg(long)]
    trace: bool,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Decimal places in table output.
    #[arg(long, default_value_t = report::DEFAULT_PRECISION as u8,
          value_parser = clap::value_parser!(u8).range(1..=12))]
    precision: u8,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Conflict(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Validation(_) => EXIT_VALIDATION,
            CliError::Conflict(_) => EXIT_CONFLICT,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::TotalConflict { .. } => CliError::Conflict(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<DocumentError> for CliError {
    fn from(e: DocumentError) -> Self {
        CliError::Validation(e.to_string())
    }
}

fn load(source: &Source) -> Result<Scenario, CliError> {
    match (&source.scenario, source.builtin) {
        (_, Some(Builtin::Takraw)) => Ok(builtin_takraw_scenario()),
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            Ok(parse_scenario(&text)?)
        }
        (None, None) => Err(CliError::Usage(
            "one of --scenario or --builtin is required".into(),
        )),
    }
}

fn fuse(args: &FuseArgs) -> Result<String, CliError> {
    let scenario = load(&args.source)?;
    let (report, prediction) = scenario.predict_traced(args.condition)?;
    let precision = usize::from(args.precision);
    Ok(match args.format {
        Format::Table => {
            report::render_fuse_table(&scenario, &report, &prediction, args.trace, precision)
        }
        Format::Json => {
            report::fuse_json(&scenario, &scenario_hash(&scenario), &report, &prediction)
        }
        Format::Csv => report::fuse_csv(&prediction),
    })
}

/// Rendered sweep plus the first per-condition failure, if any. Failed
/// conditions do not suppress the others.
fn sweep(args: &SweepArgs, err: &mut dyn Write) -> Result<(String, Option<CliError>), CliError> {
    let scenario = load(&args.source)?;
    let outcomes: Vec<(usize, Result<Prediction, Error>)> = scenario
        .sweep()
        .into_iter()
        .enumerate()
        .map(|(i, r)| (i + 1, r))
        .collect();
    let mut first_failure = None;
    for (condition, outcome) in &outcomes {
        if let Err(e) = outcome {
            let _ = writeln!(err, "condition {condition}: {e}");
            first_failure.get_or_insert_with(|| CliError::from(e.clone()));
        }
    }
    let rendered: Vec<(usize, Result<Prediction, String>)> = outcomes
        .into_iter()
        .map(|(c, r)| (c, r.map_err(|e| e.to_string())))
        .collect();
    let text = match args.format {
        Format::Table => report::sweep_table(&scenario, &rendered, report::DEFAULT_PRECISION),
        Format::Json => report::sweep_json(&scenario, &scenario_hash(&scenario), &rendered),
        Format::Csv => {
            let ok: Vec<Prediction> = rendered.into_iter().filter_map(|(_, r)| r.ok()).collect();
            report::sweep_csv(&ok)
        }
    };
    Ok((text, first_failure))
}

fn export(name: Builtin, out: &std::path::Path) -> Result<String, CliError> {
    let scenario = match name {
        Builtin::Takraw => builtin_takraw_scenario(),
    };
    let text = emit_scenario(&scenario);
    if out == std::path::Path::new("-") {
        return Ok(text);
    }
    std::fs::write(out, text)
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", out.display())))?;
    Ok(String::new())
}

/// Runs the tool with `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Fuse(args) => fuse(args).map(|text| (text, None)),
        Command::Sweep(args) => sweep(args, err),
        Command::ExportBuiltin { name, out } => export(*name, out).map(|text| (text, None)),
    };
    let failure = match result {
        Ok((text, failure)) => {
            let _ = out.write_all(text.as_bytes());
            failure
        }
        Err(e) => Some(e),
    };
    match failure {
        None => EXIT_OK,
        Some(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
