//! `turan`: constructions, detection, exact solving and reports for Turán
//! problems on k-uniform paths.
//!
//! Exit codes: 0 success, 2 malformed input, 3 budget exhausted, 4 a
//! certificate failed verification, 5 domain error, 6 I/O error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use turan_core::Error;

#[derive(Parser)]
#[command(name = "turan", version, about = "Turán problems for k-uniform paths")]
pub struct Cli {
    #[command(flatten)]
    pub run: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

/// Options shared by every subcommand.
#[derive(Args, Clone, Debug)]
pub struct RunConfig {
    /// Node budget for searches (solver nodes, or detector nodes for `check`).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_nodes: Option<u64>,
    /// Wall-clock budget in seconds for the solver.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_secs: Option<u64>,
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value = ".turan-cache")]
    pub cache_dir: PathBuf,
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Md,
}

#[derive(Subcommand)]
pub enum Command {
    /// Build a construction and write it in the interchange format.
    ///
    /// Kinds and parameters: star n k t, even n k t, loose n k t,
    /// blocks n k l, small-blocks n k l, f0 n k s, eg n l, complete n k.
    Construct {
        kind: String,
        params: Vec<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a family contains a configuration, with a certificate.
    Check { family: PathBuf, config: String },
    /// Compute ex_k(n, config) exactly (or as far as the budget allows).
    Solve { n: usize, k: usize, config: String },
    /// Split a family into homogeneous type-1 groups and a residual.
    Decompose { family: PathBuf, s: usize, l: usize },
    /// Kernel graph with threshold s, plus the graph-side bound checks.
    Kernel {
        family: PathBuf,
        s: usize,
        /// Also build the homogeneous kernel graph from a decomposition with this path length.
        #[arg(long)]
        ell: Option<usize>,
        /// Write the kernel graph here (k = 2 interchange format).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Solve every cell of a grid file and tabulate against the closed forms.
    Report { grid: PathBuf },
    /// The best t-set for a family and the members it misses.
    Stability { family: PathBuf, t: usize },
    /// Compare ex_k(n, T) for a tight tree T with the conjectured bound.
    Kalai { n: usize, tree: String },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        Error::Timeout { .. } => 3,
        Error::Verification(_) => 4,
        Error::Domain(_) => 5,
        Error::Io(_) => 6,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
