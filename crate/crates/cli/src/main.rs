mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pftil_core::kernel::IndexSet;

#[derive(Parser, Debug)]
#[command(
    name = "pftil",
    version,
    about = "Exact counts of symmetric domino tilings of the Aztec diamond"
)]
pub struct Cli {
    /// Write the primary output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count tilings by Pfaffian or determinant.
    Count {
        class: Class,
        #[arg(long)]
        n: usize,
        /// Kept southwestern squares, as comma-separated labels.
        #[arg(long)]
        keep: Option<IndexSet>,
    },
    /// Print one of the matrices A, B or A(k,t).
    Matrix {
        #[arg(long, ignore_case = true)]
        kind: MatrixKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "json")]
        format: Format,
    },
    /// Count by exhaustive search over path families or tilings.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "off-diagonal")]
        class: Class,
        #[arg(long, default_value = "paths")]
        engine: OracleEngine,
        #[arg(long)]
        keep: Option<IndexSet>,
        /// Write an SVG of the first configuration found.
        #[arg(long)]
        render: Option<PathBuf>,
        /// Lift the size guard.
        #[arg(long)]
        force: bool,
    },
    /// Extract o_n or o_n(k,t) from leading Pfaffians.
    Conjecture {
        kind: SeqKind,
        #[arg(long, default_value_t = 25)]
        max_n: usize,
        #[arg(long, default_value = "interpolate")]
        engine: PolyEngineArg,
        #[arg(long, default_value = "text")]
        format: Format,
        /// Results cache (default: $PFTIL_CACHE, else the user cache directory).
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Ignore cached terms and recompute.
        #[arg(long)]
        force: bool,
    },
    /// Pfaffian decomposition M = R^T T R.
    Decompose {
        #[arg(long, ignore_case = true, default_value = "Akt")]
        kind: MatrixKind,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Tables of Delannoy, Schroder and Aztec diamond numbers.
    Seq {
        name: SeqName,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Run the built-in verification battery.
    Selfcheck {
        #[arg(long, default_value = "text")]
        format: Format,
        #[arg(long, hide = true, value_parser = parse_pair)]
        corrupt: Option<(usize, usize)>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Class {
    #[value(alias = "aztec")]
    All,
    Diagonal,
    OffDiagonal,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    A,
    B,
    Akt,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleEngine {
    Paths,
    Dominoes,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqKind {
    Int,
    Poly,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyEngineArg {
    Expand,
    Interpolate,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqName {
    Delannoy,
    Schroder,
    Aztec,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected i,j")?;
    let p = |x: &str| x.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((p(a)?, p(b)?))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
