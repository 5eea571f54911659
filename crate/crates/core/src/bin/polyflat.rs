use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use polyflat::certificate::{batch_exit_code, Certificate};
use polyflat::cli::{cmd_classify, cmd_refute, cmd_search, cmd_verify, summarize};

#[derive(Parser)]
#[command(
    name = "polyflat",
    version,
    about = "Exact certificates for rational-distance points on unit polygons"
)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Print certificates as JSON lines instead of summaries.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide flatness of Q(cot(pi/n)) for 3 <= n <= MAX_N.
    Classify {
        #[arg(long)]
        max_n: usize,
    },
    /// Check a single claim: cot-multiple, sign-flip, cyclic-quartic,
    /// real-cyclotomic, lemma, area-formula, area-identity, area-degree, heron.
    Verify {
        claim: String,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Search for the polygon area as a signed sum of square roots.
    Refute {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        terms: usize,
        #[arg(long)]
        bound: u64,
    },
    /// Search for points at rational distance from every vertex (n = 3, 4, 6).
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = cli.workers {
        if w == 0 {
            eprintln!("error: --workers must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(w).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    }
    let certs: Vec<Certificate> = match &cli.command {
        Command::Classify { max_n } => {
            eprintln!("classifying n = 3..={max_n}");
            cmd_classify(*max_n)
        }
        Command::Verify { claim, args } => vec![cmd_verify(claim, args)],
        Command::Refute { n, terms, bound } => {
            eprintln!("searching {terms}-term sums with radicands bounded by {bound}");
            vec![cmd_refute(*n, *terms, *bound)]
        }
        Command::Search { n, bound, out } => {
            eprintln!("searching the unit {n}-gon with parameter bound {bound}");
            vec![cmd_search(*n, *bound, out.as_deref())]
        }
    };
    for c in &certs {
        if cli.json {
            println!("{}", c.to_json());
        } else {
            println!("{}", summarize(c));
        }
    }
    ExitCode::from(batch_exit_code(&certs) as u8)
}
