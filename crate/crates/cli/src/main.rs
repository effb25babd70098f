//! `minkflow`: verification runs for the normal flow of closed convex
//! surfaces in R³, H³ and S³.
//!
//! Exit codes: 0 success, 1 nothing found, 2 an asserted inequality is
//! violated, 3 the input surface failed the convexity check, 64 usage or
//! input error, 70 internal failure.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod counterexample;
mod flow;
mod input;
mod output;
mod sphere_table;
mod svg;
mod sweep;
mod verify;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};

use output::OutDir;

const EXIT_USAGE: u8 = 64;
const EXIT_INTERNAL: u8 = 70;

/// Outcome of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    NoFinding,
    Violation,
    NotConvex,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::NoFinding => 1,
            Status::Violation => 2,
            Status::NotConvex => 3,
        }
    }
}

/// Bad arguments, unreadable or malformed input, unusable output directory.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

#[derive(Parser, Debug)]
#[command(name = "minkflow", version, about = "Normal-flow and Minkowski-inequality verification runs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Minkowski-type inequality of a surface's space on a mesh.
    Verify(VerifyArgs),
    /// Compare the discrete normal flow with its closed-form evolution.
    Flow(FlowArgs),
    /// Scan geodesic-disk limits for violations of the false H³ inequality.
    Counterexample(CounterexampleArgs),
    /// Tabulate geodesic spheres and their (vanishing) deficits.
    SphereTable(OutArgs),
    /// Record the Euclidean-form deficit over H³ surface families.
    Sweep(SweepArgs),
}

#[derive(Args, Debug)]
pub struct OutArgs {
    /// Output directory (created if missing).
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Surface JSON: {"space", "base_radius", "perturbations": [{"basis", "amplitude"}]}.
    #[arg(long)]
    pub input: PathBuf,
    /// Icosphere subdivision level, 2..=8 (default: from the input file, else 5).
    #[arg(long)]
    pub subdivision: Option<u32>,
    /// Fixed tolerance for every deficit, replacing the sphere-calibrated one.
    #[arg(long)]
    pub tol: Option<f64>,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args, Debug)]
pub struct FlowArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Time grid start:stop:count (default: 9 points on [0, 2], or on
    /// [0, 0.9·π/2] in S³).
    #[arg(long)]
    pub grid: Option<String>,
    #[arg(long)]
    pub subdivision: Option<u32>,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args, Debug)]
pub struct CounterexampleArgs {
    #[arg(long, default_value_t = 0.1)]
    pub rmin: f64,
    #[arg(long, default_value_t = 5.0)]
    pub rmax: f64,
    #[arg(long, default_value_t = 0.05)]
    pub step: f64,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Family JSON, see README.
    #[arg(long)]
    pub family: PathBuf,
    #[command(flatten)]
    pub out: OutArgs,
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var("MINKFLOW_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| usage(format!("MINKFLOW_THREADS must be a positive integer, got '{raw}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| anyhow::anyhow!("could not size the worker pool: {e}"))
}

fn run(cli: Cli) -> Result<Status> {
    configure_threads()?;
    let started = Instant::now();
    let (name, out_path) = match &cli.command {
        Command::Verify(a) => ("verify", &a.out.out),
        Command::Flow(a) => ("flow", &a.out.out),
        Command::Counterexample(a) => ("counterexample", &a.out.out),
        Command::SphereTable(a) => ("sphere-table", &a.out),
        Command::Sweep(a) => ("sweep", &a.out.out),
    };
    let out = OutDir::create(out_path)?;
    let status = match &cli.command {
        Command::Verify(a) => verify::run(a, &out)?,
        Command::Flow(a) => flow::run(a, &out)?,
        Command::Counterexample(a) => counterexample::run(a, &out)?,
        Command::SphereTable(_) => sphere_table::run(&out)?,
        Command::Sweep(a) => sweep::run(a, &out)?,
    };
    out.write_metadata(name, started.elapsed(), status)?;
    Ok(status)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(status) => ExitCode::from(status.code()),
        Err(e) if e.downcast_ref::<UsageError>().is_some() => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}
