use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod input;

use input::GraphInput;

/// Exact perfect-divisibility toolkit for small graphs.
#[derive(Debug, Parser)]
#[command(name = "pdiv", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub output: OutputOpts,
}

#[derive(Debug, Args)]
pub struct OutputOpts {
    /// Pretty, human-oriented output instead of JSON.
    #[arg(long, global = true, conflicts_with = "quiet")]
    pub human: bool,
    /// Print only the verdict line.
    #[arg(long, short, global = true)]
    pub quiet: bool,
    /// Keep wall-clock fields in certificates and reports.
    #[arg(long, global = true)]
    pub timings: bool,
    /// Worker threads for verify and hunt.
    #[arg(long, short, global = true, env = "PDIV_JOBS")]
    pub jobs: Option<usize>,
    /// Vertex cap for the exhaustive subset searches.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..=25))]
    pub max_n: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, size, ω, α, χ and degree statistics.
    Info(GraphInput),
    /// Perfection verdict with a minimum odd hole / antihole witness.
    Perfect {
        #[command(flatten)]
        graph: GraphInput,
        /// Restrict to an induced subgraph, e.g. `0,1,2,5`.
        #[arg(long)]
        subset: Option<String>,
    },
    /// Find a perfect division or a 2-division.
    Divide {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum, default_value_t = KindArg::Perfect)]
        kind: KindArg,
        /// Whitespace-separated positive vertex weights.
        #[arg(long)]
        weights: Option<PathBuf>,
        /// Require this vertex on the perfect side.
        #[arg(long)]
        through: Option<usize>,
        /// Divide an induced subgraph instead of the whole graph.
        #[arg(long)]
        subset: Option<String>,
    },
    /// Certify a divisibility or minimality claim.
    Certify {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum)]
        claim: ClaimArg,
        /// Largest weight for `--claim pwd`.
        #[arg(long, default_value_t = 3)]
        weight_bound: u32,
        /// Weights for `--claim hpd`.
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Structural searches.
    Structure {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum)]
        find: FindArg,
        /// `all`, `any`/`minimum`, or `two-clique` where it applies.
        #[arg(long)]
        mode: Option<String>,
        /// Largest basin size.
        #[arg(long)]
        max_size: Option<usize>,
        /// Pattern for `--find free`.
        #[arg(long)]
        free_of: Option<String>,
        /// The set X for `--find peeling`, e.g. `0,2`.
        #[arg(long)]
        subset: Option<String>,
    },
    /// Build a graph and emit it as graph6.
    Construct {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum)]
        op: ConstructArg,
        #[arg(long)]
        vertex: Option<usize>,
        /// graph6 of the graph substituted in.
        #[arg(long)]
        with_graph6: Option<String>,
        /// Named pattern substituted in.
        #[arg(long)]
        with_pattern: Option<String>,
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        /// TOML suite config, or `default` for the built-in one.
        #[arg(long, default_value = "default")]
        config: PathBuf,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Search a corpus for counterexamples to an open problem.
    Hunt {
        #[arg(long, value_enum)]
        problem: ProblemArg,
        /// Generate every graph up to this order.
        #[arg(long, default_value_t = 6, conflicts_with = "corpus")]
        up_to: usize,
        /// Use a graph6 corpus file instead.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        weight_bound: u32,
        /// Directory for hit artifacts.
        #[arg(long, default_value = "hits")]
        out_dir: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    Perfect,
    Two,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ClaimArg {
    Pd,
    Hpd,
    H2pd,
    Pwd,
    #[value(name = "2div")]
    TwoDiv,
    Mnpd,
    Mn2d,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FindArg {
    Homogeneous,
    Cutsets,
    Peeling,
    Basins,
    Simplicial,
    Free,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ConstructArg {
    Substitute,
    Mycielski,
    WeightExpand,
    Complement,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ProblemArg {
    PdVsPwd,
    VertexInA,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
