mod commands;
mod formats;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

/// A command failure carrying the process exit code to report.
///
/// Exit code policy, uniform across subcommands: 0 success (or property
/// true), 1 property false, 2 usage or malformed input, 3 precondition
/// violation (e.g. a graph that is not 4-regular where the operation
/// requires one).
#[derive(Debug)]
pub(crate) struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<hampair::Error> for Failure {
    fn from(e: hampair::Error) -> Failure {
        use hampair::Error;
        let code = match &e {
            Error::NotKRegular { .. }
            | Error::EulerNoEdges
            | Error::EulerOddDegree { .. }
            | Error::EulerDisconnected
            | Error::SourceHasLoop { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "hampair",
    version,
    about = "Subdivided doubles of 4-regular multigraphs: construction, Euler-tour lifting, and Hamiltonian pairing checks"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a named graph family, e.g. `complete:5` or `circulant:18,1,8`.
    Gen {
        /// Family spec: `<family>` or `<family>:<p1>,<p2>,...`
        spec: String,
        /// Output file (stdout if omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Build the subdivided double of a 4-regular multigraph.
    Sd {
        /// Input graph file.
        input: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a graph is a subdivided double and name the witness.
    Recognize {
        input: PathBuf,
        /// Print the full certificate instead of a summary.
        #[arg(long)]
        emit_cert: bool,
        /// Machine-readable JSON report.
        #[arg(long)]
        json: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Compute an Euler tour (or enumerate all of them with --all).
    Euler {
        input: PathBuf,
        /// Enumerate every tour instead of producing one.
        #[arg(long)]
        all: bool,
        /// Stop the enumeration after this many tours.
        #[arg(long, requires = "all")]
        limit: Option<usize>,
        #[arg(long)]
        json: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Lift an Euler tour of the source graph to a Hamiltonian cycle of its
    /// subdivided double.
    Lift {
        /// Subdivided-double graph file (labels required).
        input: PathBuf,
        /// One bit per source vertex, e.g. `01101`.
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        bits: Option<String>,
        /// Lift every bit vector.
        #[arg(long)]
        all: bool,
        /// Euler tour file for the source graph (computed if omitted).
        #[arg(long)]
        tour: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Enumerate all Hamiltonian cycles.
    Enum {
        input: PathBuf,
        /// Worker threads for the enumeration.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        json: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check that the complement of every Hamiltonian cycle is again one.
    VerifyPaired {
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        json: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Count unordered Hamiltonian decompositions.
    Decomp {
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        json: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Partition the edges into two linear forests, if possible.
    Linarb2 {
        input: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Emit Graphviz DOT, optionally styling a cycle bold and its complement
    /// thin.
    ExportDot {
        input: PathBuf,
        /// Cycle file to highlight.
        #[arg(long)]
        cycle: Option<PathBuf>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn run(cmd: Cmd) -> Result<u8, Failure> {
    match cmd {
        Cmd::Gen { spec, out } => commands::gen(&spec, out.as_deref()),
        Cmd::Sd { input, out } => commands::sd(&input, out.as_deref()),
        Cmd::Recognize {
            input,
            emit_cert,
            json,
            out,
        } => commands::recognize(&input, emit_cert, json, out.as_deref()),
        Cmd::Euler {
            input,
            all,
            limit,
            json,
            out,
        } => commands::euler(&input, all, limit, json, out.as_deref()),
        Cmd::Lift {
            input,
            bits,
            all,
            tour,
            json,
            out,
        } => commands::lift(&input, bits.as_deref(), all, tour.as_deref(), json, out.as_deref()),
        Cmd::Enum {
            input,
            threads,
            json,
            out,
        } => commands::enumerate(&input, threads, json, out.as_deref()),
        Cmd::VerifyPaired {
            input,
            threads,
            json,
            out,
        } => commands::verify_paired(&input, threads, json, out.as_deref()),
        Cmd::Decomp {
            input,
            threads,
            json,
            out,
        } => commands::decomp(&input, threads, json, out.as_deref()),
        Cmd::Linarb2 { input, json, out } => commands::linarb2(&input, json, out.as_deref()),
        Cmd::ExportDot { input, cycle, out } => {
            commands::export_dot(&input, cycle.as_deref(), out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
