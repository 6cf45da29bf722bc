use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "supersinglet",
    version,
    about = "Kochen-Specker sets, supersinglet games and self-testing certificates"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Built-in vector sets.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Kochen-Specker checks on a vector set.
    #[command(subcommand)]
    Ks(KsCommand),
    /// The supersinglet state.
    #[command(subcommand)]
    State(StateCommand),
    /// The nonlocal game built from a vector set.
    #[command(subcommand)]
    Game(GameCommand),
    /// Solve the self-testing constraint system.
    Selftest(SelftestArgs),
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// List the built-in sets.
    List,
    /// Print a built-in set in the JSON interchange format.
    Export {
        #[arg(long)]
        builtin: String,
    },
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct SetSource {
    /// Vector set in the JSON interchange format.
    #[arg(long)]
    pub set: Option<PathBuf>,
    /// Name of a built-in set (see `catalog list`).
    #[arg(long)]
    pub builtin: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
pub enum Edges {
    /// Every orthogonal pair of the set.
    #[default]
    All,
    /// Only pairs sharing a context.
    Context,
}

#[derive(Debug, Subcommand)]
pub enum KsCommand {
    /// Decide whether the set admits a 0/1 assignment.
    Verify {
        #[command(flatten)]
        source: SetSource,
        #[arg(long, value_enum, default_value_t = Edges::All)]
        edges: Edges,
        /// Ignore contexts stored with the set and enumerate all of them.
        #[arg(long)]
        enumerate: bool,
    },
    /// Extend the set until every orthogonal pair lies in a context.
    Complete {
        #[command(flatten)]
        source: SetSource,
    },
    /// List every context (d mutually orthogonal vectors) of the set.
    Contexts {
        #[command(flatten)]
        source: SetSource,
    },
}

#[derive(Debug, Subcommand)]
pub enum StateCommand {
    /// Re-expand the supersinglet in the basis of one context.
    Expand {
        #[command(flatten)]
        source: SetSource,
        /// Index into the set's context list.
        #[arg(long)]
        context: usize,
    },
    /// Apply U^{⊗d} for random unitaries and compare with the state.
    Invariance {
        /// Dimension, also the number of parties.
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        samples: u64,
        #[arg(long, default_value_t = supersinglet_core::supersinglet::DEFAULT_TOLERANCE)]
        tolerance: f64,
        /// Multiply each special unitary by this global phase (radians).
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        phase: f64,
    },
}

#[derive(Debug, Subcommand)]
pub enum GameCommand {
    /// Exact success probability of the supersinglet strategy on every input.
    QuantumVerify {
        #[command(flatten)]
        source: SetSource,
    },
    /// Exact optimal classical winning probability.
    ClassicalBound {
        #[command(flatten)]
        source: SetSource,
        /// Worker threads for the scan; never changes the result.
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    /// Merged construction in dimension d (4..=6).
    #[arg(long, conflicts_with_all = ["set", "builtin"])]
    pub d: Option<usize>,
    /// With --d, add the rows of every context of the merged set.
    #[arg(long, requires = "d")]
    pub all_contexts: bool,
    /// Vector set in the JSON interchange format.
    #[arg(long)]
    pub set: Option<PathBuf>,
    /// Name of a built-in set.
    #[arg(long)]
    pub builtin: Option<String>,
    /// Comma-separated indices into the set's context list.
    #[arg(long, value_delimiter = ',')]
    pub contexts: Vec<usize>,
    /// A context given by its member vertices, e.g. `0,3,4`; repeatable.
    #[arg(long = "basis")]
    pub bases: Vec<String>,
}
