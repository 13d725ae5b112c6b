use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use jones_genus2::filtration::{CaseTag, DEFAULT_ORDER};

#[derive(Parser, Debug)]
#[command(
    name = "jones-genus2",
    version,
    about = "Exact checks on the 5-dimensional Jones representation of the genus-2 mapping class group"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the presentation relations and the determinant of a representation.
    Validate(Common),
    /// Filtration depth and leading term of Torelli words.
    Analyze(Common),
    /// Decompose M(5, Q) under the degree-zero S_6 action.
    Decompose(DecomposeArgs),
    /// Search normalizations for a representation satisfying every relation.
    Search(SearchArgs),
    /// Print the character table of S_6.
    Chartable(Common),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Substitution branch u = ±e^h.
    #[arg(long = "case", value_enum, default_value_t = CaseSelection::Both)]
    pub case: CaseSelection,

    /// Truncation order of the h-expansion.
    #[arg(long, default_value_t = DEFAULT_ORDER, value_parser = parse_order)]
    pub order: usize,

    /// Representation-definition document; defaults to the searched built-in one.
    #[arg(long)]
    pub rep: Option<PathBuf>,

    /// Word expression to analyze (repeatable).
    #[arg(long = "word")]
    pub words: Vec<String>,

    /// File of word expressions, one per line.
    #[arg(long)]
    pub catalog: Option<PathBuf>,

    /// Write the JSON document here.
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Print the JSON document instead of a summary.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug, Clone)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub common: Common,

    /// Only print the character table.
    #[arg(long)]
    pub chartable_only: bool,

    /// Perturb one character value before decomposing (negative control).
    #[arg(long, hide = true)]
    pub corrupt_chartable: bool,
}

#[derive(Args, Debug, Clone)]
pub struct SearchArgs {
    #[command(flatten)]
    pub common: Common,

    /// Search a in [-MAX_A, 0].
    #[arg(long, default_value_t = 8)]
    pub max_a: u32,

    /// Search m in [1, MAX_M].
    #[arg(long, default_value_t = 6)]
    pub max_m: u32,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseSelection {
    Plus,
    Minus,
    Both,
}

impl CaseSelection {
    pub fn cases(self) -> Vec<CaseTag> {
        match self {
            CaseSelection::Plus => vec![CaseTag::Plus],
            CaseSelection::Minus => vec![CaseTag::Minus],
            CaseSelection::Both => CaseTag::BOTH.to_vec(),
        }
    }
}

fn parse_order(s: &str) -> Result<usize, String> {
    let n: usize = s
        .parse()
        .map_err(|_| format!("'{s}' is not a nonnegative integer"))?;
    if n < 2 {
        return Err("truncation order must be at least 2".into());
    }
    Ok(n)
}
