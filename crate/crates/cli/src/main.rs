mod cache;
mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use e8_core::algebra::Algebra;

#[derive(Parser)]
#[command(name = "e8", version, about = "Build, verify and export e8, e8(8), f4 and so(16) from octonion bracket formulas")]
struct Cli {
    /// Worker threads for the parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension, basis layout, structure-constant count and Killing signature.
    Info {
        #[arg(long, default_value = "e8")]
        algebra: Algebra,
    },
    /// Bracket of two elements, each given as a file path or inline JSON.
    Bracket {
        #[arg(long, default_value = "e8")]
        algebra: Algebra,
        left: String,
        right: String,
    },
    /// Run verification checks; exit status 1 if any fails.
    Verify {
        #[arg(long, default_value = "e8")]
        algebra: Algebra,
        /// Repeatable; defaults to every check.
        #[arg(long, value_enum)]
        check: Vec<Check>,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: VerifyMode,
        /// Number of random triples in sample mode.
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Verify a structure table read from this JSON file instead of the built-in one.
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Write structure constants, the Killing form, root data or the basis.
    Export {
        #[arg(value_enum)]
        what: ExportKind,
        #[arg(long, default_value = "e8")]
        algebra: Algebra,
        #[arg(long, value_enum, default_value = "json")]
        format: DataFormat,
        /// Output file (standard output if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Jacobi,
    Invariance,
    Automorphisms,
    Simplicity,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyMode {
    Exhaustive,
    Sample,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DataFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportKind {
    StructureConstants,
    Killing,
    Roots,
    Basis,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] e8_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Info { algebra } => commands::info(algebra),
        Command::Bracket { algebra, left, right } => commands::bracket(algebra, &left, &right),
        Command::Verify { algebra, check, mode, samples, seed, table, format } => {
            let opts = commands::VerifyOptions { checks: check, mode, samples: samples as usize, seed, table, format };
            commands::verify(algebra, &opts)
        }
        Command::Export { what, algebra, format, out } => commands::export(what, algebra, format, out.as_deref()),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
