//! Library side of the `uncrossed` binary, so tests can drive subcommands
//! without spawning a process.

pub mod commands;
pub mod format;
pub mod render;
pub mod sweep;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use uncrossed::Rational;

use crate::format::parse_rational;
use crate::sweep::Density;

pub const EXIT_GATE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INTEGRITY: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "uncrossed",
    version,
    about = "Bounds and exact values for uncrossed edges in graph drawings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every applicable bound for a graph.
    Bounds {
        /// Edge list (`n m` header, then `u v` lines) or graph JSON.
        #[arg(long = "in")]
        input: PathBuf,
        /// Fail with exit code 2 unless the graph is triangle-free.
        #[arg(long)]
        triangle_free_check: bool,
        /// Also write `bounds.csv` and `bounds.json` here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build G_{ε,n} and check its tightness properties.
    Construct {
        #[arg(long, value_parser = parse_rational)]
        epsilon: Rational,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        svg: bool,
    },
    /// Exact h(G) by exhaustive search.
    OracleH(OracleArgs),
    /// Exact unc(G) by exhaustive search.
    OracleUnc(OracleArgs),
    /// Sweep the construction over an (ε, n) grid.
    VerifyTightness {
        #[arg(long, value_delimiter = ',', value_parser = parse_rational,
              default_value = "3/20,1/5,1/4,3/10,7/20,2/5,9/20")]
        epsilons: Vec<Rational>,
        #[arg(long, value_delimiter = ',', default_value = "20,40,80")]
        ns: Vec<usize>,
        /// CSV destination; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Old, new and combined bounds side by side.
    CompareBounds {
        #[arg(long, value_delimiter = ',', required = true)]
        ns: Vec<usize>,
        /// Rationals, `tree` (m = n-1) or `complete`.
        #[arg(long, value_delimiter = ',', value_parser = Density::parse,
              default_value = "tree,1/10,1/5,3/10,2/5,complete")]
        epsilons: Vec<Density>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a construction record or a certificate as SVG.
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Largest accepted n (default 8 for h, 6 for unc).
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Largest rotation-system count for one candidate subgraph.
    #[arg(long, default_value_t = 10_000_000)]
    pub budget: u128,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    pub time_limit: Option<f64>,
    /// Result JSON destination; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A failed run: process exit code and message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<uncrossed::Error> for Failure {
    fn from(e: uncrossed::Error) -> Self {
        use uncrossed::Error::*;
        let code = match e {
            SearchBudget(_) => EXIT_BUDGET,
            MalformedCertificate(_) | ConstructionIntegrity(_) => EXIT_INTEGRITY,
            InvalidParameter(_) | Parse { .. } | UnsupportedInput(_) | NotApplicable(_) => {
                EXIT_GATE
            }
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl Failure {
    pub fn io(path: &std::path::Path, e: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_GATE,
            message: format!("{}: {e}", path.display()),
        }
    }
}

pub fn run(cli: Cli, stdout: &mut dyn std::io::Write) -> Result<(), Failure> {
    commands::dispatch(cli.command, stdout)
}
