//! ctrord: batch queries against the contraction order.
//!
//! Exit codes: 0 verified/true, 1 refuted/false, 2 input error, 3 search
//! budget exhausted.

mod commands;
mod input;
mod pool;
mod report;

use clap::{Parser, Subcommand, ValueEnum};
use ctrord_core::search::SearchConfig;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ctrord",
    version,
    about = "Exact tooling for the edge-contraction order on small graphs",
    after_help = "Graphs are given as graph6 strings, paths to graph6 files, or family \
                  specs (K2R:4, DR:2, STAR:3, ANTIHOLE:7, W:3,5, I0:3,2, I1:3,2)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Node budget per containment search; exceeding it exits with 3.
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// Worker threads for per-graph and per-pair work.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,

    /// Also write the JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether H is a contraction of G and print a model.
    Check { h: String, g: String },
    /// Rooted variant; arguments look like GRAPH@ROOT, e.g. Ch@0.
    CheckRooted { h: String, g: String },
    /// Recognize clique-cactus structure and report the blocks.
    Recognize { g: String },
    /// Is the class of connected H-contraction-free graphs a wqo?
    Dichotomy { h: String },
    /// Antichain family checks.
    Antichain {
        #[command(subcommand)]
        action: AntichainAction,
    },
    /// Verify the canonical-antichain premises at desk scale.
    DingPremises {
        /// Range of i values, e.g. 3..5 (inclusive).
        #[arg(long, default_value = "3..5")]
        i: String,
        /// Range of q values, e.g. 3..5 (inclusive).
        #[arg(long, default_value = "3..5")]
        q: String,
        /// Cap on contraction depth for the down-set evidence
        /// (default: full down-sets).
        #[arg(long)]
        downset_steps: Option<usize>,
    },
    /// Emit one representative per isomorphism class of connected graphs.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        filter: Option<CorpusFilter>,
    },
    /// Pairwise comparability matrix of the graphs in a graph6 file.
    Matrix { file: PathBuf },
    /// Exhaustively check one of the named lemmas on a small corpus.
    VerifyLemma {
        #[arg(value_enum)]
        lemma: Lemma,
        /// Corpus bound for the per-graph lemmas (dec, cycles, 2c,
        /// recons, imctr).
        #[arg(long)]
        max_n: Option<usize>,
        /// Trial count for the randomized constructor-monotonicity check.
        #[arg(long, default_value_t = 500)]
        trials: usize,
        /// Seed for randomized checks.
        #[arg(long, default_value_t = 0x9e3779b97f4a7c15)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum AntichainAction {
    /// Verify pairwise incomparability of FAMILY over an inclusive RANGE
    /// (grid over both parameters for W).
    Verify { family: String, range: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum CorpusFilter {
    CliqueCactus,
    DiamondFree,
}

#[derive(Clone, Copy, ValueEnum)]
enum Lemma {
    Dec,
    Cycles,
    #[value(name = "2c")]
    TwoC,
    Kpp1,
    Comp,
    Ctr,
    Dpgraph,
    Cycleclique,
    Recons,
    Imctr,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let search = SearchConfig {
        budget: cli.budget,
        ..SearchConfig::default()
    };
    let ctx = commands::Context { search, workers: cli.workers.max(1) };
    let result = match cli.command {
        Command::Check { ref h, ref g } => commands::check::run(&ctx, h, g),
        Command::CheckRooted { ref h, ref g } => commands::check::run_rooted(&ctx, h, g),
        Command::Recognize { ref g } => commands::recognize::run(g),
        Command::Dichotomy { ref h } => commands::dichotomy::run(&ctx, h),
        Command::Antichain { action: AntichainAction::Verify { ref family, ref range } } => {
            commands::antichain::verify(&ctx, family, range)
        }
        Command::DingPremises { ref i, ref q, downset_steps } => {
            commands::antichain::ding(&ctx, i, q, downset_steps)
        }
        Command::Enumerate { n, filter } => commands::enumerate::run(n, filter),
        Command::Matrix { ref file } => commands::matrix::run(&ctx, file),
        Command::VerifyLemma { lemma, max_n, trials, seed } => {
            commands::lemmas::run(&ctx, lemma, max_n, trials, seed)
        }
    };
    match result {
        Ok(rep) => match report::emit(&rep, cli.json.as_deref()) {
            Ok(()) => ExitCode::from(rep.exit),
            Err(err) => {
                eprintln!("error: {err}");
                ExitCode::from(2)
            }
        },
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
