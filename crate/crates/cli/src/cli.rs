use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "eccentric", version, about = "Eccentric connectivity index toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format for report records.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Worker threads (default: all cores, or ECCENTRIC_JOBS when set).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Seed for randomized operations.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,

    /// Allow exhaustive work at order 9.
    #[arg(long, global = true)]
    pub include_n9: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Index, diameter and vertex metrics of graph6 input.
    Eci {
        /// graph6 file, or `-` for standard input (the default).
        #[arg(long, default_value = "-")]
        g6: PathBuf,
    },
    /// Build a named family member.
    Construct {
        /// e.g. `extremal:8,4,3`, `lollipop:7,4`, `matching-deleted:6`, `h2`.
        #[arg(long)]
        family: String,
        /// Include the graph6 encoding.
        #[arg(long)]
        emit_g6: bool,
        /// Apply a random relabeling drawn from `--seed`.
        #[arg(long)]
        relabel: bool,
    },
    /// Evaluate a closed form.
    Formula {
        name: FormulaName,
        #[command(flatten)]
        params: Params,
    },
    /// Check a claim against exhaustive enumeration or closed-form sweeps.
    Verify {
        claim: Claim,
        #[command(flatten)]
        params: Params,
        /// Last order of a range starting at `--n`.
        #[arg(long)]
        to: Option<usize>,
        /// Every feasible size (conjecture only).
        #[arg(long, conflicts_with = "m")]
        all_m: bool,
        /// Read the graphs to scan from a graph6 file or `-` instead of
        /// enumerating them.
        #[arg(long)]
        g6: Option<PathBuf>,
    },
    /// List connected graphs of one order, one per isomorphism class.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "size")]
        diameter: Option<u32>,
        #[arg(long)]
        size: Option<usize>,
        /// Print bare graph6 lines instead of records.
        #[arg(long, conflicts_with = "count")]
        emit_g6: bool,
        /// Print only the number of graphs.
        #[arg(long)]
        count: bool,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Params {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormulaName {
    /// Index of G(n,d,k) in closed form.
    Closed,
    /// Maximum index at order n and diameter d.
    F,
    /// The k values attaining that maximum.
    OptimalK,
    /// Every graph attaining it.
    Class,
    /// Maximum index at diameter 2.
    Diameter2,
    /// Index of the path.
    Path,
    /// Advantage of G(n,d+1,n-d-2) over the lollipop L(n,d).
    LollipopGap,
    /// Maximum index at order n.
    G,
    /// The same maximum found by sweeping the diameter.
    GSweep,
    /// Diameter attaining it.
    DStar,
    /// Maximum index at order n with its maximizers.
    Best,
    /// Predicted diameter and k at order n and size m.
    Conjecture,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    Theorem2,
    Theorem5,
    Table1,
    Corollaries,
    Lollipop,
    Conjecture,
    Lemma1,
}
