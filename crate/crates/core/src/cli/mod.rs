//! Command-line front end. Every command prints a JSON [`RunReport`] on
//! stdout and a one-line summary on stderr.
//!
//! Exit codes: 0 for an affirmative verdict, 1 for a negative one, 2 for bad
//! input.

mod commands;
pub mod input;

use std::ffi::OsString;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::discrete::DiscreteError;
use crate::geometry::GeometryError;
use crate::lattice::LatticeError;
use crate::spectral::SpectralError;

pub const EXIT_AFFIRMATIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Discrete(#[from] DiscreteError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

#[derive(Debug, Parser)]
#[command(name = "multitile", version, about = "Exact and spectral multi-tiling checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write CSV convergence rows to stdout instead of the JSON report.
    #[arg(long, global = true)]
    pub csv: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Precision {
    Double,
    Hp50,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Transform {
    Sinc,
    Cube,
    Simplex,
    Polygon,
    Thickening,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a finite point set multi-tiles Z^d with a sublattice.
    TileDiscrete {
        /// Point set: JSON text or a file.
        points: String,
        /// Lattice: a name (Z2, 4Z, D2), JSON text or a file.
        #[arg(long, short)]
        lattice: String,
        /// Also run the exponential-sum criterion and the cover-count oracle.
        #[arg(long)]
        verify_all: bool,
        /// Coefficient half-width for the cover-count oracle.
        #[arg(long)]
        window: Option<usize>,
        /// Cross-check every exponential sum at about 50 digits.
        #[arg(long, value_enum, default_value = "double")]
        precision: Precision,
        /// Add the truncated spectral form of the covariogram sum.
        #[arg(long)]
        spectral: bool,
        #[arg(long, default_value = "1")]
        eps: String,
        #[arg(long, default_value_t = 20.0)]
        radius: f64,
    },
    /// Decide whether a polygon multi-tiles the plane with a lattice.
    TilePolygon {
        /// Built-in name, JSON text or a file.
        polygon: String,
        #[arg(long, short, default_value = "Z2")]
        lattice: String,
        /// Add the numeric transform-vanishing check.
        #[arg(long)]
        spectral: bool,
        #[arg(long, default_value_t = 10.0)]
        radius: f64,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Compare an exact lattice sum of overlaps with its dual-lattice series.
    BsVerify {
        a: String,
        /// Second body; defaults to the first.
        #[arg(long)]
        b: Option<String>,
        #[arg(long, short, default_value = "Z2")]
        lattice: String,
        /// Rational shift, e.g. `1/2,0`.
        #[arg(long, default_value = "0,0")]
        x: String,
        #[arg(long, default_value_t = 50.0)]
        radius: f64,
        /// Largest residual that counts as agreement.
        #[arg(long, default_value_t = 1e-2)]
        tol: f64,
        /// Use the disjoint-translates form that recovers `vol A · vol B`.
        #[arg(long)]
        volume: bool,
    },
    /// Recover zeta(2) or zeta(4) from simplex transforms.
    Zeta {
        /// 2 or 4.
        #[arg(long, default_value_t = 2)]
        order: u32,
        #[arg(long, short, default_value_t = 1000)]
        k: u64,
    },
    /// The packing bound for sets whose difference set avoids the lattice.
    Minkowski {
        points: String,
        #[arg(long, short)]
        lattice: String,
    },
    /// Lattice point counts in a body and its difference body.
    Vdc {
        polygon: String,
        #[arg(long, short, default_value = "Z2")]
        lattice: String,
    },
    /// Evaluate one Fourier transform at one frequency.
    FtEval {
        #[arg(value_enum)]
        transform: Transform,
        /// Frequency, comma-separated.
        #[arg(long)]
        xi: String,
        #[arg(long, default_value = "1")]
        eps: String,
        /// Polygon operand for `polygon`.
        #[arg(long)]
        polygon: Option<String>,
        /// Point set operand for `thickening`.
        #[arg(long)]
        points: Option<String>,
    },
}

/// Outcome of one command.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub command: String,
    /// SHA-256 of the canonical JSON of the parsed inputs and flags.
    pub inputs_digest: String,
    pub verdict: Value,
    pub timing_ms: u64,
    pub exit_code: i32,
    pub summary: String,
    pub csv: Option<String>,
}

impl RunReport {
    /// Keys come out sorted: `serde_json` maps are ordered.
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "verdict": self.verdict,
            "timing_ms": self.timing_ms,
            "exit_code": self.exit_code,
        })
    }
}

/// What a command hands back before timing and hashing.
pub(crate) struct Outcome {
    pub inputs: Value,
    pub verdict: Value,
    pub affirmative: bool,
    pub summary: String,
    pub csv: Option<String>,
}

pub fn digest(command: &str, inputs: &Value) -> String {
    let canonical = json!({ "command": command, "inputs": inputs }).to_string();
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

pub fn execute(cli: &Cli) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let (name, outcome) = commands::dispatch(&cli.command)?;
    let exit_code = if outcome.affirmative { EXIT_AFFIRMATIVE } else { EXIT_NEGATIVE };
    Ok(RunReport {
        command: name.to_string(),
        inputs_digest: digest(name, &outcome.inputs),
        verdict: outcome.verdict,
        timing_ms: start.elapsed().as_millis() as u64,
        exit_code,
        summary: outcome.summary,
        csv: outcome.csv,
    })
}

/// Parses arguments, runs the command and prints its output. Returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_AFFIRMATIVE };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            eprintln!("{}", report.summary);
            match (&report.csv, cli.csv) {
                (Some(csv), true) => print!("{csv}"),
                _ => println!(
                    "{}",
                    serde_json::to_string_pretty(&report.to_json()).expect("JSON values serialize")
                ),
            }
            report.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            println!("{}", json!({ "error": e.to_string(), "exit_code": EXIT_INPUT }));
            EXIT_INPUT
        }
    }
}
