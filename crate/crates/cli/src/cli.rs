use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Seed used by `gen` when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Parser)]
#[command(name = "imonge", version, about = "Monge properties of interval matrices")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,

    /// Seed for the instance generator.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Human,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrongMethod {
    Adjacent,
    Quadruple,
    Corners,
    Submodular,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether every member of the interval matrix is Monge.
    CheckStrong {
        /// Matrix file, or `-` for stdin.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = StrongMethod::Adjacent)]
        method: StrongMethod,
    },
    /// Decide whether some member of the interval matrix is Monge.
    CheckWeak {
        input: PathBuf,
        /// Evaluate only the cheap necessary and sufficient conditions.
        #[arg(long)]
        conditions_only: bool,
    },
    /// Print the interval residual matrix.
    Residual { input: PathBuf },
    /// Search for row and column orders making the matrix strongly Monge.
    Permute {
        input: PathBuf,
        /// Use the algorithm for matrices whose entries all have positive width.
        #[arg(long)]
        special: bool,
    },
    /// Write a nonnegative Monge matrix as a nonnegative combination of
    /// row, column and corner-block generators.
    Decompose { input: PathBuf },
    /// Apply a weak Monge closure operation.
    Closure(ClosureArgs),
    /// Generate a seeded instance.
    Gen {
        /// One of: ism, iwm-only, not-iwm, permutable, random.
        kind: String,
        #[arg(long, default_value_t = 4)]
        rows: usize,
        #[arg(long, default_value_t = 4)]
        cols: usize,
    },
}

#[derive(Debug, Args)]
pub struct ClosureArgs {
    /// add-weak-weak, add-weak-any, envelope-union, scale, interval-scale,
    /// mixed-add, mixed-intersection or mixed-envelope. Mixed operations take
    /// the strongly Monge matrix first.
    pub op: String,
    pub first: PathBuf,
    pub second: Option<PathBuf>,
    /// Scalar for `scale` (a number) and `interval-scale` (`[lo, hi]`).
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
}
