//! The `polywidth` command line harness.
//!
//! Every subcommand runs one experiment, compares its rows against their
//! oracles and writes a JSON envelope or a CSV table. Exit status is 0 when
//! every row passes, 2 when a check fails and 1 on a usage error.

mod commands;
pub mod output;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::Error;
use commands::*;
use output::Envelope;

pub const THREADS_VAR: &str = "POLYWIDTH_THREADS";

const AFTER_HELP: &str = "\
Output rows share one set of columns (CSV header order):
  label       name of the checked quantity
  index       row index (eigenvalue number, N, trial, ...)
  x           auxiliary coordinate (mode l, parameter t, ...), empty if unused
  value       computed value, \"inf\" when structurally unbounded
  oracle      reference value, empty for informational rows
  abs_err     |value - oracle|
  rel_err     |value - oracle| / |oracle| (absolute when the oracle is 0)
  tol_kind    rel | abs | upper | lower | exact | info
  tolerance   tolerance applied to the comparison
  provenance  where the oracle value comes from
  pass        true or false
  seed        seed of the run
Floats are written with 17 significant digits.

Exit status: 0 all checks pass, 1 usage error, 2 a check failed.
POLYWIDTH_THREADS caps internal parallelism.";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Parser)]
#[command(name = "polywidth", version, about = "Polyharmonic spectra and Kolmogorov widths", after_help = AFTER_HELP)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues of the free problem on [0, 1].
    Spectrum1d(Spectrum1dArgs),
    /// Kolmogorov widths d_N on [0, 1].
    Widths1d(Widths1dArgs),
    /// Eigenvalue ratios against (pi j)^{2p}.
    Asymptotics(AsymptoticsArgs),
    /// Jackson tail bounds for random members on [0, 1].
    Jackson1d(Jackson1dArgs),
    /// Free or clamped spectrum on the unit disk.
    DiskSpectrum(DiskSpectrumArgs),
    /// Clamped eigenfunctions mapped to free eigenfunctions.
    ClampedFree(ClampedFreeArgs),
    /// Jackson tail bounds for random members on the disk.
    JacksonDisk(JacksonDiskArgs),
    /// Random subspaces against the width formula.
    Extremality(ExtremalityArgs),
    /// Distances growing linearly along a polyharmonic witness.
    UnboundedDemo(UnboundedArgs),
    /// Jacobian of five harmonic polynomials at the origin.
    JacobiCheck(JacobiArgs),
    /// Green formula for random radial polynomial pairs.
    GreenCheck(GreenArgs),
}

fn config<T: Serialize>(args: &T) -> serde_json::Value {
    serde_json::to_value(args).unwrap_or(serde_json::Value::Null)
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Spectrum1d(_) => "spectrum1d",
            Command::Widths1d(_) => "widths1d",
            Command::Asymptotics(_) => "asymptotics",
            Command::Jackson1d(_) => "jackson1d",
            Command::DiskSpectrum(_) => "disk-spectrum",
            Command::ClampedFree(_) => "clamped-free",
            Command::JacksonDisk(_) => "jackson-disk",
            Command::Extremality(_) => "extremality",
            Command::UnboundedDemo(_) => "unbounded-demo",
            Command::JacobiCheck(_) => "jacobi-check",
            Command::GreenCheck(_) => "green-check",
        }
    }

    fn seed_and_config(&self) -> (u64, serde_json::Value) {
        match self {
            Command::Spectrum1d(a) => (a.seed, config(a)),
            Command::Widths1d(a) => (a.seed, config(a)),
            Command::Asymptotics(a) => (a.seed, config(a)),
            Command::Jackson1d(a) => (a.seed, config(a)),
            Command::DiskSpectrum(a) => (a.seed, config(a)),
            Command::ClampedFree(a) => (a.seed, config(a)),
            Command::JacksonDisk(a) => (a.seed, config(a)),
            Command::Extremality(a) => (a.seed, config(a)),
            Command::UnboundedDemo(a) => (a.seed, config(a)),
            Command::JacobiCheck(a) => (a.seed, config(a)),
            Command::GreenCheck(a) => (a.seed, config(a)),
        }
    }

    fn execute(&self) -> Outcome {
        match self {
            Command::Spectrum1d(a) => spectrum1d(a),
            Command::Widths1d(a) => widths1d(a),
            Command::Asymptotics(a) => asymptotics(a),
            Command::Jackson1d(a) => jackson1d(a),
            Command::DiskSpectrum(a) => disk_spectrum(a),
            Command::ClampedFree(a) => clamped_free(a),
            Command::JacksonDisk(a) => jackson_disk(a),
            Command::Extremality(a) => extremality(a),
            Command::UnboundedDemo(a) => unbounded_demo(a),
            Command::JacobiCheck(a) => jacobi_check(a),
            Command::GreenCheck(a) => green_check(a),
        }
    }
}

/// Runs the subcommand and collects its rows into an envelope.
pub fn run(command: &Command) -> crate::Result<Envelope> {
    let (seed, config) = command.seed_and_config();
    let (rows, notes) = command.execute()?;
    Ok(Envelope::new(command.name(), seed, config, rows, notes))
}

fn is_usage_error(e: &Error) -> bool {
    matches!(e, Error::Size(_) | Error::Domain(_) | Error::Range(_) | Error::Shape(_))
}

fn thread_cap() -> Result<Option<usize>, String> {
    match std::env::var(THREADS_VAR) {
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(format!("{THREADS_VAR}: {e}")),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(format!("{THREADS_VAR} must be a positive integer, got {s:?}")),
        },
    }
}

fn emit(cli: &Cli, envelope: &Envelope) -> std::io::Result<()> {
    let bytes = match cli.common.format {
        Format::Json => output::to_json(envelope)?,
        Format::Csv => output::to_csv(envelope)?,
    };
    match &cli.common.output {
        Some(path) => fs::write(path, bytes),
        None => std::io::stdout().lock().write_all(&bytes),
    }
}

pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
        }
    };
    let result = match thread_cap() {
        Err(msg) => {
            eprintln!("error: {msg}");
            return 1;
        }
        Ok(None) => run(&cli.command),
        Ok(Some(n)) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| run(&cli.command)),
            Err(e) => {
                eprintln!("error: {e}");
                return 1;
            }
        },
    };
    let envelope = match result {
        Ok(env) => env,
        Err(e) => {
            eprintln!("error: {e}");
            return if is_usage_error(&e) { 1 } else { 2 };
        }
    };
    if let Err(e) = emit(&cli, &envelope) {
        eprintln!("error: {e}");
        return 1;
    }
    if envelope.pass {
        0
    } else {
        for f in &envelope.failures {
            eprintln!("check failed: {f}");
        }
        2
    }
}

#[cfg(test)]
mod tests;
