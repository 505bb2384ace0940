use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "rminor",
    version,
    about = "Rooted minors, local connectivity and X-spanning structures"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Seed for randomized commands
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Run every search sequentially in a fixed order
    #[arg(long, global = true)]
    pub deterministic: bool,
    /// Omit timing fields from reports
    #[arg(long, global = true)]
    pub no_timing: bool,
    /// Print results as JSON
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a generated rooted graph in the text format
    Generate {
        #[command(subcommand)]
        family: FamilyArg,
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
    },
    /// Local connectivity of the root set
    Kappa { file: PathBuf },
    /// A minimum X-separator and a pair of roots it separates
    Separator { file: PathBuf },
    /// Extract a k-connected rooted minor as a JSON certificate
    Minor {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        k: u8,
        /// Produce a topological minor with a subdivision embedding (k <= 3)
        #[arg(long)]
        topological: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Lift a bounded-degree spanning tree of the minor
    LiftTree {
        graph: PathBuf,
        cert: PathBuf,
        #[arg(long)]
        bound: usize,
        /// Tree of the minor; searched for when absent
        #[arg(long)]
        tree: Option<PathBuf>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Lift an X-spanning path of the minor
    LiftPath {
        graph: PathBuf,
        cert: PathBuf,
        /// Path of the minor; searched for when absent
        #[arg(long)]
        path: Option<PathBuf>,
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Lift an X-spanning cycle of the minor
    LiftCycle {
        graph: PathBuf,
        cert: PathBuf,
        /// Cycle of the minor; searched for when absent
        #[arg(long)]
        cycle: Option<PathBuf>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive searches on small graphs
    Oracle {
        kind: OracleKind,
        file: PathBuf,
        #[command(flatten)]
        flags: OracleFlags,
    },
    /// Run a theorem pipeline and print a JSON report
    Pipeline {
        theorem: Theorem,
        file: PathBuf,
        #[arg(long, default_value = "i")]
        variant: String,
        /// Degree parameter t for variant iii
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
        /// Forced root edge `u,v`
        #[arg(long)]
        force: Option<String>,
        /// Vertices to avoid, comma separated
        #[arg(long, value_delimiter = ',')]
        avoid: Vec<String>,
        /// Where to write the resulting structure
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Re-check a certificate or structure against a graph
    Verify {
        graph: PathBuf,
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: VerifyKind,
    },
}

#[derive(Subcommand, Debug)]
pub enum FamilyArg {
    /// Sector graph with t sectors
    Gt {
        #[arg(long)]
        t: usize,
    },
    /// Doubled-column gadget
    Fl {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        whites: Option<usize>,
    },
    /// Nested gadget
    Hl {
        #[arg(long)]
        l: usize,
    },
    /// Random planar triangulation
    Planar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Sample this many roots greedily by local connectivity
        #[arg(long)]
        roots: Option<usize>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleKind {
    Tree,
    Path,
    Cycle,
    Minor,
    Tutte,
}

#[derive(Args, Debug, Default)]
pub struct OracleFlags {
    /// Degree bound for trees
    #[arg(long)]
    pub maxdeg: Option<usize>,
    #[arg(long)]
    pub from: Option<String>,
    #[arg(long)]
    pub to: Option<String>,
    /// Forced edge `u,v`
    #[arg(long)]
    pub force: Option<String>,
    /// Vertices to avoid, comma separated
    #[arg(long, value_delimiter = ',')]
    pub avoid: Vec<String>,
    /// `K5`, `K3,3`, `C4` or a graph file
    #[arg(long)]
    pub pattern: Option<String>,
    /// Anchor cycle for Tutte paths, comma separated
    #[arg(long, value_delimiter = ',')]
    pub anchor: Vec<String>,
    /// Require the two given roots `u,v` to be leaves of the tree
    #[arg(long)]
    pub leaves: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    Thm1,
    Thm3,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyKind {
    Certificate,
    Structure,
    Tree,
    TuttePath,
}
