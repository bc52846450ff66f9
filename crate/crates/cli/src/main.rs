//! `frcode`: inspect, check, build and simulate fractional repetition codes.
//!
//! Exit status is 0 on success, 1 when a reported check fails and 2 on
//! malformed input or usage errors.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use report::Format;

#[derive(Parser)]
#[command(name = "frcode", version, about = "Fractional repetition codes for distributed storage")]
struct Cli {
    /// Report layout.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a code file and check its invariants.
    Validate { file: PathBuf },
    /// Parameters, dimension, rates, reconstruction and surviving sets.
    Analyze {
        file: PathBuf,
        /// Number of contacted nodes [default: ceil(n/2)].
        #[arg(long)]
        k: Option<usize>,
        /// File size in packets [default: D_C(k)].
        #[arg(long = "B", short = 'B')]
        b: Option<usize>,
        #[arg(long, value_enum, default_value_t = SurvivingArg::Choice)]
        surviving: SurvivingArg,
    },
    /// Evaluate every dimension and rate bound.
    Bounds {
        file: PathBuf,
        /// Restrict to one k [default: every k].
        #[arg(long)]
        k: Option<usize>,
    },
    /// Universally-good verdict per k.
    Ugood {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = UgoodArg::Asymmetric)]
        mode: UgoodArg,
    },
    /// Build a code and emit it as a code file.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
        /// Write the code file here instead of stdout.
        #[arg(short = 'o', long = "output", global = true)]
        output: Option<PathBuf>,
    },
    /// Storage-rate table: k, R_DSS, R_C and their difference.
    Rates { file: PathBuf },
    /// Replay a failure schedule.
    Simulate {
        file: PathBuf,
        #[arg(long)]
        schedule: PathBuf,
        #[arg(long, value_enum, default_value_t = PolicyArg::MinDegree)]
        policy: PolicyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check the concatenation rate relations.
    ConcatReport {
        first: PathBuf,
        second: PathBuf,
        /// Restrict to one k [default: every 1 <= k < n1 + n2].
        #[arg(long)]
        k: Option<usize>,
    },
    /// Check the m-fold concatenation rate identities.
    MfoldReport {
        file: PathBuf,
        #[arg(long)]
        m: usize,
        /// Total contacted nodes [default: every 1 <= K < m n].
        #[arg(long = "K", short = 'K')]
        k_total: Option<usize>,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Nodes are the vertices of the complete graph on alpha + 1 vertices, packets its edges.
    CompleteGraph {
        #[arg(long)]
        alpha: usize,
    },
    /// n nodes on a cycle, adjacent nodes sharing one packet.
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// Block-diagonal concatenation of two codes.
    Concat { first: PathBuf, second: PathBuf },
    /// m copies of one code, concatenated.
    Mfold {
        file: PathBuf,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SurvivingArg {
    Choice,
    Minimal,
}

#[derive(Clone, Copy, ValueEnum)]
enum UgoodArg {
    Symmetric,
    Asymmetric,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    MinDegree,
    MaxDegree,
    Lexicographic,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command, cli.format) {
        Ok(commands::Status::Ok) => ExitCode::SUCCESS,
        Ok(commands::Status::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
    }
}
