//! `schull`: expected diameter, width and complexity of stochastic convex
//! hulls from the command line.

mod estimate;
mod generate;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use estimate::{compute, verify};
use generate::{gen_hardness, gen_random};

#[derive(Parser)]
#[command(name = "schull", version, about = "Expected statistics of stochastic convex hulls")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Estimate a statistic and print a report.
    Compute(ComputeArgs),
    /// Compare an estimator against full enumeration (n <= 22).
    Verify(VerifyArgs),
    /// Generate datasets.
    #[command(subcommand)]
    Gen(GenCommand),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Stat {
    Diameter,
    Width,
    Complexity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Witness,
    TwoApprox,
    Fpras,
    Oracle,
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args)]
pub struct EstimateArgs {
    /// Dataset JSON file.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub stat: Stat,
    #[arg(long, value_enum)]
    pub method: Method,
    /// Relative accuracy for `fpras`.
    #[arg(long, default_value_t = 0.1)]
    pub eps: f64,
    /// Overrides the theoretical sample-count constant of `fpras`.
    #[arg(long)]
    pub gamma: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub est: EstimateArgs,
    /// Record the running time in the report (makes output run-dependent).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub est: EstimateArgs,
}

#[derive(Subcommand)]
enum GenCommand {
    /// Points uniform in the unit cube with uniform probabilities.
    Random(RandomArgs),
    /// Dataset whose expected diameter encodes a graph's independent sets.
    Hardness(HardnessArgs),
}

#[derive(Args)]
pub struct RandomArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub dim: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0.1)]
    pub prob_min: f64,
    #[arg(long, default_value_t = 1.0)]
    pub prob_max: f64,
    /// Output file (default: standard output).
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args)]
pub struct HardnessArgs {
    /// Edge-list file, or `K<n>`, `P<n>`, `C<n>` for complete graphs, paths
    /// and cycles.
    #[arg(long)]
    pub graph: String,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Failure with its exit code.
#[derive(Debug)]
pub enum Failure {
    Validation(String),
    Capability(String),
    Violation(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Violation(_) => 1,
            Failure::Validation(_) => 3,
            Failure::Capability(_) => 4,
        }
    }
}

impl From<stochastic_hull::Error> for Failure {
    fn from(e: stochastic_hull::Error) -> Self {
        use stochastic_hull::Error as E;
        match e {
            E::UnsupportedDimension { .. } | E::TooLarge { .. } => Failure::Capability(e.to_string()),
            _ => Failure::Validation(e.to_string()),
        }
    }
}

pub fn write_output(path: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Validation(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Validation(e.to_string()))?;
    }
    match cli.command {
        Command::Compute(args) => compute(&args),
        Command::Verify(args) => verify(&args),
        Command::Gen(GenCommand::Random(args)) => gen_random(&args),
        Command::Gen(GenCommand::Hardness(args)) => gen_hardness(&args),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Failure::Validation(m) | Failure::Capability(m) | Failure::Violation(m)) = &f;
            eprintln!("schull: {m}");
            ExitCode::from(f.code())
        }
    }
}
