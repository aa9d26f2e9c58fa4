//! `omega-lyndon`: ω-Lyndon words, generalized lexicographic orders and
//! their factorizations from the command line.
//!
//! Exit codes: 0 success or true verdict, 1 false verdict or counterexample,
//! 2 input error, 3 search cap exceeded.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "omega-lyndon", version, about = "ω-Lyndon words and factorizations under generalized lexicographic orders")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Order scheme such as `ab`, `ab,ba` or `ab|ba,ab` (defaults to the natural order).
    #[arg(long, global = true)]
    order: Option<String>,

    /// Alphabet symbols in index order, e.g. `abc`. Inferred from the literals when absent.
    #[arg(long, global = true)]
    alphabet: Option<String>,

    /// Emit one JSON object instead of aligned text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compare two eventually periodic words, e.g. `ab(ba)` and `(b)`.
    Compare { x: String, y: String },
    /// Compare the ω-powers of two finite words.
    OmegaCompare { u: String, v: String },
    /// Test whether a finite or eventually periodic word is ω-Lyndon.
    IsLyndon { word: String },
    /// Factorize a finite word into non-increasing ω-Lyndon factors.
    Factorize { word: String },
    /// Factorize an eventually periodic word.
    FactorizeInf {
        word: String,
        #[arg(long, default_value_t = omega_lyndon::DEFAULT_CAP)]
        cap: usize,
    },
    /// Classify the ω-Lyndon prefixes of an eventually periodic word.
    Classify {
        word: String,
        #[arg(long, default_value_t = omega_lyndon::DEFAULT_CAP)]
        cap: usize,
    },
    /// Extend a finite ω-Lyndon word to an infinite one.
    Extend { word: String },
    /// The ω-minimal factor of length N of an eventually periodic word.
    MinimalFactor {
        word: String,
        #[arg(long)]
        n: usize,
    },
    /// Minimal-factor boundaries of a finite prefix for factor lengths up to N.
    Boundaries {
        prefix: String,
        #[arg(long)]
        n_max: usize,
    },
    /// Check the order axioms and the lexicographic condition empirically.
    ValidateOrder {
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        /// Random tail pairs per word pair.
        #[arg(long, default_value_t = 16)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Cross-check factorizations against exhaustive enumeration and Duval.
    OracleCheck {
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Compare { .. } => "compare",
            Command::OmegaCompare { .. } => "omega-compare",
            Command::IsLyndon { .. } => "is-lyndon",
            Command::Factorize { .. } => "factorize",
            Command::FactorizeInf { .. } => "factorize-inf",
            Command::Classify { .. } => "classify",
            Command::Extend { .. } => "extend",
            Command::MinimalFactor { .. } => "minimal-factor",
            Command::Boundaries { .. } => "boundaries",
            Command::ValidateOrder { .. } => "validate-order",
            Command::OracleCheck { .. } => "oracle-check",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = commands::run(&cli);
    report.print(cli.json);
    ExitCode::from(report.exit_code())
}
