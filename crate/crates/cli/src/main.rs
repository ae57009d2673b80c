//! `braidsig` command-line tool.
//!
//! Exit status: 0 on success, 1 on a usage error, 2 when a computation fails.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use braidsig::walks::DEFAULT_BUDGET;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use output::{Format, Report};

#[derive(Debug, Parser)]
#[command(name = "braidsig", version, about = "Burau images, signatures, random walks and Lissajous knots")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Write the rendered output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for stochastic commands; recorded in every CSV header.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (defaults to one per core).
    #[arg(long, global = true, env = "BRAIDSIG_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reduced Burau image of a braid word.
    Burau {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 3)]
        strands: usize,
        /// `-1` for the integral specialisation, `t` for the generic image.
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        at: String,
        /// Pass to the symplectic quotient (even strand counts).
        #[arg(long)]
        symplectic: bool,
    },
    /// Alexander polynomial of a knotted closure.
    Alexander {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 3)]
        strands: usize,
    },
    /// Signature of the closure.
    Signature {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 3)]
        strands: usize,
        /// Use the Seifert-matrix computation instead of the Meyer recursion.
        #[arg(long)]
        oracle: bool,
    },
    /// Meyer cocycle of two SL(2, Z) matrices given row-major as "a b c d".
    Meyer {
        #[arg(long, allow_hyphen_values = true)]
        g1: String,
        #[arg(long, allow_hyphen_values = true)]
        g2: String,
    },
    /// Hitting probabilities of the random walk on the integral Burau image.
    Walk {
        #[arg(long, default_value_t = 3)]
        strands: usize,
        /// `uniform`, `uniform4` or `words:W1;W2;...`.
        #[arg(long, default_value = "uniform")]
        measure: String,
        /// `z11`, `big-entries`, `entry:R,C>B`, `zero:<poly>`, `always`, `never`.
        #[arg(long, default_value = "z11")]
        predicate: String,
        #[arg(long, default_value_t = 12)]
        steps: usize,
        /// Exact convolution (the default).
        #[arg(long, conflicts_with = "monte_carlo")]
        exact: bool,
        #[arg(long)]
        monte_carlo: bool,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
    },
    /// Fraction of Sp(2l, F_p) on which an entry polynomial vanishes.
    Density {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        l: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Total-variation distance to uniform of the walk on Sp or PSp over F_p.
    FiniteWalk {
        #[arg(long, default_value_t = 3)]
        strands: usize,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        projective: bool,
        #[arg(long, default_value_t = 50)]
        steps: usize,
    },
    /// Lissajous toric knots K(3, q, p).
    Lissajous {
        #[command(subcommand)]
        action: Lissajous,
    },
    /// Regenerate stored tables.
    Reproduce {
        #[command(subcommand)]
        target: Reproduce,
    },
}

#[derive(Debug, Subcommand)]
enum Lissajous {
    Classify {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        p: u64,
    },
    /// Share of zero-signature knots per q.
    Table {
        #[arg(long, default_value_t = 101)]
        qmax: u64,
        /// `literal`, `full-range` or `both`.
        #[arg(long, default_value = "both")]
        mode: String,
        /// Every admissible q up to qmax rather than the reference list.
        #[arg(long)]
        all: bool,
    },
    /// 3D polyline of the curve.
    Sample {
        #[arg(long = "N", default_value_t = 3)]
        n: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, default_value_t = 2000)]
        samples: usize,
    },
}

#[derive(Debug, Subcommand)]
enum Reproduce {
    /// The walk hitting table and the percentage table, as CSV.
    PaperTables {
        #[arg(long, default_value = "tables")]
        out_dir: PathBuf,
    },
}

fn dispatch(cli: &Cli) -> anyhow::Result<Report> {
    match &cli.command {
        Command::Burau { word, strands, at, symplectic } => commands::burau(word, *strands, at, *symplectic),
        Command::Alexander { word, strands } => commands::alexander(word, *strands),
        Command::Signature { word, strands, oracle } => commands::signature(word, *strands, *oracle),
        Command::Meyer { g1, g2 } => commands::meyer(g1, g2),
        Command::Walk { strands, measure, predicate, steps, exact: _, monte_carlo, trials } => {
            commands::walk(commands::WalkArgs {
                strands: *strands,
                measure,
                predicate,
                steps: *steps,
                monte_carlo: *monte_carlo,
                trials: *trials,
                seed: cli.seed,
            })
        }
        Command::Density { poly, p, l, budget } => commands::density(poly, *p, *l, *budget),
        Command::FiniteWalk { strands, p, projective, steps } => {
            commands::finite_walk(*strands, *p, *projective, *steps)
        }
        Command::Lissajous { action } => match action {
            Lissajous::Classify { q, p } => commands::lissajous_classify(*q, *p),
            Lissajous::Table { qmax, mode, all } => commands::lissajous_table(*qmax, mode, *all),
            Lissajous::Sample { n, q, p, alpha, samples } => commands::lissajous_sample(*n, *q, *p, *alpha, *samples),
        },
        Command::Reproduce { target: Reproduce::PaperTables { out_dir } } => {
            commands::reproduce_paper_tables(out_dir, cli.seed)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("configuring the thread pool")?;
    }
    let rendered = dispatch(cli)?.render(cli.format, cli.seed)?;
    match &cli.out {
        Some(path) => std::fs::write(path, rendered).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
