//! Command-line front end for `hgbern-core`: list Dirichlet characters,
//! compute tables of generalized hypergeometric Bernoulli numbers and
//! polynomials by any route, and run the cross-verification suites.

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub mod commands;
pub mod render;
pub mod verify;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("methods disagree: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for bad input, 1 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            _ => 1,
        }
    }
}

const CHARACTER_HELP: &str = "\
Characters mod f are addressed by index 0..φ(f)-1. The unit group (Z/fZ)^* is
split by the Chinese remainder theorem into cyclic factors: for an odd prime
power the generator is the least primitive root, for 4 it is 3, and for 2^k
(k >= 3) the factors are generated by -1 and 5. A character is the tuple of
exponents (c_1, ..., c_r) with χ(g_i) = exp(2πi c_i / ord(g_i)); indices
enumerate these tuples in lexicographic order, prime factors ascending, with
the first factor most significant. Index 0 is always the principal character.";

#[derive(Debug, Parser)]
#[command(
    name = "hgbern",
    version,
    about = "Exact generalized hypergeometric Bernoulli numbers and polynomials"
)]
#[command(after_long_help = CHARACTER_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every Dirichlet character mod f.
    #[command(after_long_help = CHARACTER_HELP)]
    ListCharacters {
        #[arg(short = 'f', long = "modulus", value_parser = clap::value_parser!(u64).range(1..))]
        modulus: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compute B_{N,n,χ} or B_{N,n,χ}(x) for a range of n.
    #[command(after_long_help = CHARACTER_HELP)]
    Compute(ComputeArgs),
    /// Run an identity suite over a bounded grid.
    Verify(VerifyArgs),
    /// Table of the character-free numbers B_{N,n}.
    Table {
        #[arg(long = "max-N", default_value_t = 4)]
        max_big_n: u32,
        #[arg(long = "max-n", default_value_t = 10)]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Numbers,
    Polynomials,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(short = 'f', long = "modulus", value_parser = clap::value_parser!(u64).range(1..))]
    pub modulus: u64,
    /// Character index, or "all".
    #[arg(long, default_value = "0")]
    pub index: String,
    #[arg(long = "N", value_parser = clap::value_parser!(u32).range(1..))]
    pub big_n: u32,
    #[arg(long = "n-from", default_value_t = 0)]
    pub n_from: u32,
    #[arg(long = "n-to", default_value_t = 10)]
    pub n_to: u32,
    #[arg(long, value_enum, default_value_t = Target::Numbers)]
    pub target: Target,
    /// oracle | cor10 | recurrence | tsum | ttilde | determinant | hbp | all
    #[arg(long, default_value = "recurrence")]
    pub method: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Evaluate polynomials at this rational point, e.g. "1/2".
    #[arg(long, allow_hyphen_values = true)]
    pub x0: Option<String>,
    /// Add a floating-point column labelled "approx".
    #[arg(long)]
    pub approx: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Every suite below.
    All,
    /// All seven number routes agree.
    FiveWay,
    /// Polynomial routes agree with each other, the generating function and the Stirling form.
    Polynomials,
    /// d/dx B_n(x) = n B_{n-1}(x).
    Appell,
    /// B_n(x+y) expands binomially in B_k(x) and y.
    Addition,
    /// The weighted sum of B_0..B_n recovers the power sum S_n.
    Brec,
    /// Closed forms for the principal character mod 1.
    Trivial,
    /// Closed forms for n <= 4 in terms of S_0..S_4.
    Appendix,
    /// Counting, multiplicativity, orthogonality and conductors of characters.
    Characters,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long = "max-N", default_value_t = 4)]
    pub max_big_n: u32,
    #[arg(long = "max-n", default_value_t = 10)]
    pub max_n: u32,
    #[arg(long = "max-f", default_value_t = 8)]
    pub max_f: u64,
}

/// Runs one command, writing to `out`. `Ok(false)` means a verification
/// suite found a failing identity.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<bool, CliError> {
    match cli.command {
        Command::ListCharacters { modulus, format } => commands::list_characters(modulus, format, out).map(|_| true),
        Command::Compute(args) => commands::compute(&args, out).map(|_| true),
        Command::Verify(args) => {
            let report = verify::run_suite(args.suite, args.max_big_n, args.max_n, args.max_f);
            report.write(out)?;
            Ok(report.all_passed())
        }
        Command::Table {
            max_big_n,
            max_n,
            format,
        } => commands::table(max_big_n, max_n, format, out).map(|_| true),
    }
}
