//! `distlap`: analyse graphs, run the checker registry, sweep corpora and
//! regenerate the reference tables.
//!
//! Exit status: 0 when everything passes, 1 when a check (or table cell,
//! or extremal audit) fails, 2 for usage, parse and input errors.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use distlap::eigen::Tolerances;
use distlap::verify::{AnalysisOptions, ColoringMode};

#[derive(Parser, Debug)]
#[command(
    name = "distlap",
    version,
    about = "Distance Laplacian spectra and chromatic bound checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print distances, coloring, spectrum and twin structure of one graph.
    Analyze(SingleArgs),
    /// Run every registered check on one graph.
    Verify(SingleArgs),
    /// Run every check over all connected graphs on `n` vertices.
    Corpus(CorpusArgs),
    /// Regenerate the two reference tables and compare with the printed cells.
    Tables(OutputArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// A graph6 record.
    #[arg(long)]
    g6: Option<String>,
    /// An edge-list file: first line `n`, then one `u v` pair per line.
    #[arg(long)]
    edges: Option<PathBuf>,
    /// A generator spec such as `K:4,4,2`, `path:8`, `dstar:6,2` or `G_clq`.
    #[arg(long)]
    gen: Option<String>,
}

#[derive(Args, Debug)]
struct AnalysisArgs {
    /// Relative convergence tolerance of the eigensolver.
    #[arg(long, default_value_t = Tolerances::default().solver, value_parser = positive)]
    tol: f64,
    /// Tolerance for interval counts and eigenvalue comparisons.
    #[arg(long = "int-tol", default_value_t = Tolerances::default().interval, value_parser = positive)]
    int_tol: f64,
    /// Which optimal coloring feeds the class-size checks.
    #[arg(long, value_enum, default_value_t = ColoringArg::Default)]
    coloring: ColoringArg,
}

impl AnalysisArgs {
    fn options(&self) -> AnalysisOptions {
        AnalysisOptions {
            tol: Tolerances {
                solver: self.tol,
                interval: self.int_tol,
            },
            coloring: match self.coloring {
                ColoringArg::Default => ColoringMode::Default,
                ColoringArg::MaxL1 => ColoringMode::MaxEll1,
            },
        }
    }
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SingleArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    analysis: AnalysisArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct CorpusArgs {
    /// Vertex count, 1 to 8.
    #[arg(long)]
    n: usize,
    /// Also audit the minimum spectral radius for every chromatic number.
    #[arg(long = "audit-extremal")]
    audit_extremal: bool,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
    #[command(flatten)]
    analysis: AnalysisArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ColoringArg {
    Default,
    #[value(name = "max-l1")]
    MaxL1,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("`{s}` is not a positive number")),
    }
}

/// Whether the command found a failing check.
pub enum Status {
    Clean,
    Failures,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => commands::analyze(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Corpus(a) => commands::corpus(&a),
        Command::Tables(a) => commands::tables(&a),
    };
    match result {
        Ok(Status::Clean) => ExitCode::SUCCESS,
        Ok(Status::Failures) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
