use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const GRAMMAR: &str = "\
Knot expressions:
  expr  := term (('#' | '+' | '-') term)*   binary '-' adds the mirror
  term  := '-' term | count? atom           leading '-' mirrors
  count := INT ('*' | '·')?
  atom  := NAME | 'T(' p ',' q ')' | '(' expr ')'
  NAME  := a table name such as 3_1, 10_132, 11n6, unknot

Examples:
  tristram bounds \"-5_1 # -10_132\"
  tristram gordian \"T(3,10)\" \"T(2,15) # T(5,6)\"
  tristram signature 8_20 --format svg --output 8_20.svg
  tristram oracle-check --range 16";

/// Levine-Tristram signatures and the lower bounds they give on unknotting
/// number, Gordian distance, clasp number and four-genus.
#[derive(Debug, Parser)]
#[command(name = "tristram", version, after_help = GRAMMAR)]
pub struct Cli {
    /// key = value file with oracle_range, table_path, precision, out_dir
    #[arg(long, global = true, env = "TRISTRAM_CONFIG", value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Worker threads (default: all cores)
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,

    /// Directory for output files when --output is not given
    #[arg(long, global = true, env = "TRISTRAM_OUT_DIR", value_name = "DIR")]
    pub out_dir: Option<PathBuf>,

    /// JSON file of named Seifert matrices added to the knot table
    #[arg(long, global = true, value_name = "FILE")]
    pub seifert_file: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Step function of the signature: plateaus, jumps and values at breakpoints
    Signature {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        out: Output,
    },
    /// Lower bounds for one knot
    Bounds {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        out: Output,
    },
    /// Lower bound on the Gordian distance between two knots
    Gordian {
        #[arg(allow_hyphen_values = true)]
        k: String,
        #[arg(allow_hyphen_values = true)]
        j: String,
        #[command(flatten)]
        out: Output,
    },
    /// Lower bound on the clasp distance between two knots
    Clasp {
        #[arg(allow_hyphen_values = true)]
        k: String,
        #[arg(allow_hyphen_values = true)]
        j: String,
        #[command(flatten)]
        out: Output,
    },
    /// Compare the closed bound formulas with an exact search of the move lattice
    OracleCheck {
        /// Largest absolute coordinate checked
        #[arg(long)]
        range: Option<u32>,
        #[command(flatten)]
        out: Output,
    },
    /// List the knot table with Alexander polynomials and signatures
    Table {
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Args, Clone)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Decimal digits for roots that are not rational multiples of 2π
    #[arg(long, value_name = "DIGITS")]
    pub precision: Option<u32>,
    /// Only show this factor of the Alexander polynomial (1-based)
    #[arg(long, value_name = "K")]
    pub factor: Option<usize>,
    /// Write to FILE instead of standard output
    #[arg(long, short, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Text => "txt",
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Svg => "svg",
        }
    }
}
