use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "zcp", version, about = "Binary Z-complementary pairs: construct, analyze, search, PMEPR")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV instead of text.
    #[arg(long, global = true)]
    pub csv: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl Cli {
    pub fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else if self.csv {
            Format::Csv
        } else {
            Format::Text
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a pair with one of the constructions.
    #[command(alias = "generate")]
    Gen {
        #[command(subcommand)]
        construction: Construction,
    },
    /// Correlation profile, ZCZ widths and optimality of a pair.
    Analyze {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
        #[arg(long = "type", value_enum, default_value_t = ZczType::Both)]
        zcz_type: ZczType,
    },
    /// Exhaustive search for seed pairs meeting the correlation floor.
    Search(SearchArgs),
    /// PMEPR of a sequence or pair.
    Pmepr(PmeprArgs),
    /// Regenerate and verify a reference table.
    Table(TableArgs),
    /// Seeded randomized self-checks.
    Check {
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZczType {
    #[value(name = "I")]
    One,
    #[value(name = "II")]
    Two,
    Both,
}

#[derive(Args, Debug, Clone)]
pub struct SeedArgs {
    /// Seed of length N.
    #[arg(long, allow_hyphen_values = true)]
    pub seed_a: String,
    /// Seed of length N+1.
    #[arg(long, allow_hyphen_values = true)]
    pub seed_b: String,
}

#[derive(Subcommand, Debug)]
pub enum Construction {
    /// Recursive tree pair at a given depth and index.
    Construct1 {
        #[command(flatten)]
        seeds: SeedArgs,
        #[arg(long)]
        depth: u32,
        #[arg(long, default_value_t = 0)]
        index: u64,
    },
    /// Depth-1 pair of length 2N+1.
    Theorem1 {
        #[command(flatten)]
        seeds: SeedArgs,
        #[arg(long, default_value_t = 0)]
        index: u64,
    },
    /// Depth-k pair, k >= 2.
    Theorem2 {
        #[command(flatten)]
        seeds: SeedArgs,
        #[arg(long)]
        depth: u32,
        #[arg(long, default_value_t = 0)]
        index: u64,
    },
    /// Product of a Type-II ZCP with a GCP.
    Turyn {
        /// First member of the ZCP.
        #[arg(long, allow_hyphen_values = true)]
        first: String,
        /// Second member of the ZCP.
        #[arg(long, allow_hyphen_values = true)]
        second: String,
        /// Length of the factory GCP to multiply by.
        #[arg(long)]
        gcp_length: u64,
        /// Use the factory GCP as is instead of `(e, -rev f)`.
        #[arg(long)]
        plain: bool,
    },
    /// GCP of length 2^a 10^b 26^c.
    Gcp {
        #[arg(long)]
        length: u64,
    },
    /// Optimal pair of length 2N-1 from a GCP of length N.
    Tcp1 {
        #[arg(long)]
        n: u64,
    },
    /// Optimal pair of length 2N+1 from a GCP of length N.
    Tcp2 {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        lambda: String,
    },
    /// Optimal Type-I pair of length 2N+1 from a GCP of length N.
    #[command(name = "type1-obzcp")]
    Type1Obzcp {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        lambda: String,
    },
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    /// Length of the shorter seed.
    #[arg(long)]
    pub n: usize,
    /// Stop at the first pair.
    #[arg(long, conflicts_with = "count")]
    pub first: bool,
    /// Only count pairs.
    #[arg(long)]
    pub count: bool,
    /// Report every pair instead of one per symmetry class.
    #[arg(long)]
    pub all_signs: bool,
    #[arg(long)]
    pub max_results: Option<usize>,
    #[arg(long)]
    pub node_budget: Option<u64>,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    pub time_budget: Option<f64>,
    /// Where to write the remaining work if a budget runs out.
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Continue from a checkpoint file.
    #[arg(long)]
    pub resume: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct PmeprArgs {
    /// A single sequence.
    #[arg(long = "seq", conflicts_with = "pair", required_unless_present = "pair", allow_hyphen_values = true)]
    pub sequence: Option<String>,
    /// A pair of equal-length sequences.
    #[arg(long, num_args = 2, value_names = ["FIRST", "SECOND"], allow_hyphen_values = true)]
    pub pair: Option<Vec<String>>,
    #[arg(long, default_value_t = 128)]
    pub oversample: usize,
    /// Plain grid maximum without refinement.
    #[arg(long)]
    pub grid: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    #[value(name = "I")]
    One,
    #[value(name = "II")]
    Two,
    #[value(name = "III")]
    Three,
    #[value(name = "IV")]
    Four,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub which: Which,
    /// Table III: rerun the search for every row up to this length.
    #[arg(long, default_value_t = 12)]
    pub search_up_to: usize,
    /// Table IV: oversampling factor.
    #[arg(long, default_value_t = 8)]
    pub oversample: usize,
    /// Table IV: refine the grid peaks instead of using the plain grid.
    #[arg(long)]
    pub refined: bool,
}
