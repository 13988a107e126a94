//! Argument definitions and dispatch for the `evohab` binary.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use evohab_core::cdhs::DEFAULT_C_MAX;
use evohab_core::GaConfig;

use crate::catalog::EARTH_MEAN_SURFACE_TEMP_K;
use crate::commands;

/// Exit status contract of every subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Status {
    Success = 0,
    Failure = 1,
    Usage = 2,
    Tolerance = 3,
    Infeasible = 4,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        ExitCode::from(s as u8)
    }
}

/// An error carrying the exit status it maps to.
#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub error: anyhow::Error,
}

impl Failure {
    pub fn new(status: Status, error: impl Into<anyhow::Error>) -> Self {
        Self {
            status,
            error: error.into(),
        }
    }

    pub fn usage(message: impl std::fmt::Display) -> Self {
        Self::new(Status::Usage, anyhow::anyhow!("{message}"))
    }
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        Self {
            status: Status::Failure,
            error,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(error: std::io::Error) -> Self {
        Self {
            status: Status::Failure,
            error: error.into(),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "evohab",
    version,
    about = "Evolutionary optimization benchmarks and planetary habitability scoring"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a single-objective benchmark, or `all` of them.
    Bench(BenchArgs),
    /// Run NSGA-II on a two-objective benchmark and score it by IGD.
    Mo(MoArgs),
    /// Score catalog planets with the Cobb-Douglas habitability model.
    Cdhs(CdhsArgs),
    /// Consolidate stored run artifacts into report.md.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Args)]
pub struct GaArgs {
    /// Population size (even, at least 2).
    #[arg(long, default_value_t = 200)]
    pub pop: usize,
    /// Number of generations.
    #[arg(long, default_value_t = 1000)]
    pub gens: usize,
    #[arg(long, env = "EVOHAB_SEED", default_value_t = 42)]
    pub seed: u64,
    /// Mutation width as a fraction of each variable's range.
    #[arg(long, default_value_t = 0.05)]
    pub sigma_fraction: f64,
}

impl GaArgs {
    pub fn config(&self) -> GaConfig {
        GaConfig::default()
            .with_population(self.pop)
            .with_generations(self.gens)
            .with_seed(self.seed)
            .with_sigma_fraction(self.sigma_fraction)
    }
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Benchmark name, or `all` for every single-objective case.
    pub function: String,
    #[command(flatten)]
    pub ga: GaArgs,
    /// Independent runs per case with seeds seed, seed+1, ...; the best is kept.
    #[arg(long, default_value_t = 1)]
    pub restarts: u64,
    /// Directory for per-case CSVs and the run manifest.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MoArgs {
    pub problem: String,
    #[command(flatten)]
    pub ga: GaArgs,
    /// Obtained-front CSV; the reference front and manifest go beside it.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Grid points per decision variable for the reference front.
    #[arg(long)]
    pub resolution: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Bi,
    Single,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Bi => "bi",
            Mode::Single => "single",
        }
    }
}

#[derive(Debug, Args)]
pub struct CdhsArgs {
    #[arg(long)]
    pub catalog: PathBuf,
    /// Planet name; repeat for several. Defaults to every catalog row.
    #[arg(long = "planet")]
    pub planets: Vec<String>,
    #[arg(long, value_enum, default_value_t = Mode::Bi)]
    pub mode: Mode,
    /// Interior weight; the surface weight is 1 - wi.
    #[arg(long, default_value_t = 0.5)]
    pub wi: f64,
    /// Upper bound of the coupling constant C.
    #[arg(long, default_value_t = DEFAULT_C_MAX)]
    pub c_max: f64,
    /// Interior-weight steps in the sweep CSV.
    #[arg(long, default_value_t = 10)]
    pub sweep_steps: usize,
    /// Earth mean surface temperature used for Kelvin columns.
    #[arg(long, default_value_t = EARTH_MEAN_SURFACE_TEMP_K)]
    pub earth_temp: f64,
    /// Column mapping override, e.g. `radius=P_RADIUS_EU`. Repeatable.
    #[arg(long = "column", value_name = "KEY=VALUE")]
    pub columns: Vec<String>,
    /// File of key=value column mapping lines, applied before --column.
    #[arg(long)]
    pub mapping: Option<PathBuf>,
    #[command(flatten)]
    pub ga: GaArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Directory holding run manifests; report.md is written here.
    #[arg(long)]
    pub out: PathBuf,
}

pub fn run(cli: Cli) -> Status {
    let result = match cli.command {
        Command::Bench(args) => commands::bench(&args),
        Command::Mo(args) => commands::mo(&args),
        Command::Cdhs(args) => commands::cdhs(&args),
        Command::Report(args) => commands::report(&args),
    };
    match result {
        Ok(status) => status,
        Err(failure) => {
            eprintln!("error: {:#}", failure.error);
            failure.status
        }
    }
}
