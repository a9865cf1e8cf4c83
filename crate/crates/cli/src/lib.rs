//! Batch front end: star tables, injection verifiers, EKR verdicts and
//! catalog scans.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 bad input or I/O failure,
//! 3 numeric overflow.

mod commands;
mod input;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use commands::run;
pub use input::TRange;

#[derive(Debug, Parser)]
#[command(
    name = "spiderstar",
    version,
    about = "Independent-set stars and EKR checks on spiders and trees"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Per-vertex star sizes |I^t_x| for one t
    Stars(StarsArgs),
    /// Run the star-center injections exhaustively
    Verify(VerifyArgs),
    /// Exact EKR verdicts for one tree
    Ekr(EkrArgs),
    /// EKR verdicts inside the conjectured range over a catalog of trees
    Scan(ScanArgs),
    /// Print the spider-order normalisation of a descriptor
    Order(OrderArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false)]
pub struct Source {
    /// Spider leg lengths, e.g. 3,1,2,4
    #[arg(long, group = "source")]
    pub spider: Option<String>,
    /// Edge-list tree file (`n <count>` header, then `u v` lines)
    #[arg(long, group = "source")]
    pub tree: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "tsv")]
    pub format: Format,
    /// Write to this file instead of standard output
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Largest family the clique search accepts
    #[arg(long, default_value_t = 5000)]
    pub budget_family: usize,
    /// Largest number of clique-search nodes
    #[arg(long, default_value_t = 10_000_000)]
    pub budget_nodes: u64,
}

#[derive(Debug, Args)]
pub struct StarsArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long)]
    pub t: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub theorem: Theorem,
    #[arg(long)]
    pub spider: String,
    /// Set size or inclusive range `lo..hi`; defaults to 1..alpha
    #[arg(long)]
    pub t: Option<TRange>,
    /// Also write the JSON reports to this file
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct EkrArgs {
    #[command(flatten)]
    pub source: Source,
    /// Set size or inclusive range `lo..hi`; defaults to 1..alpha
    #[arg(long)]
    pub t: Option<TRange>,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
#[group(id = "catalog", required = true, multiple = false)]
pub struct CatalogArgs {
    /// Every spider with at most this many vertices
    #[arg(long, group = "catalog")]
    pub max_n: Option<usize>,
    /// Every tree file in this directory
    #[arg(long, group = "catalog")]
    pub dir: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub catalog: CatalogArgs,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OrderArgs {
    #[arg(long)]
    pub spider: String,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    BadInput(String),
    #[error("{0}")]
    Numeric(String),
    #[error("{context}: {source}")]
    Io {
        context: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::BadInput(_) | CliError::Io { .. } => 2,
            CliError::Numeric(_) => 3,
        }
    }
}

/// What a successful command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    /// False when a verifier found a violation.
    pub passed: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}
