mod certificate;
mod commands;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::json;

use romaneq_core::{Solver, SolverConfig};

use commands::{Method, Outcome};

/// Roman and weak Roman domination on trees.
///
/// Results go to stdout as JSON; progress lines go to stderr. Exit status is
/// 0 for success or a positive decision, 1 for a negative decision and 2 for
/// any error.
#[derive(Parser)]
#[command(name = "romaneq", version)]
struct Cli {
    /// Worker threads for the exhaustive solver.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Domination numbers of a graph given as an edge list.
    Solve {
        file: PathBuf,
        /// Constrained vertices: `all`, `none` or a comma list such as `0,3,4`.
        #[arg(long, default_value = "all")]
        x: String,
        #[arg(long, value_enum, default_value = "oracle")]
        method: Method,
    },
    /// Decide whether the Roman and weak Roman numbers of a tree are strongly
    /// equal (exit 0) or not (exit 1).
    Recognize { file: PathBuf },
    /// Grow a random member of the generated family.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Every generated triple up to an order, one per isomorphism class.
    Enumerate {
        #[arg(long)]
        max: usize,
    },
    /// Build the reduction graph of a DIMACS CNF formula.
    Gadget {
        file: PathBuf,
        /// Also compute both domination numbers and check the weight claims.
        #[arg(long)]
        verify: bool,
    },
    /// Re-check a certificate produced by another subcommand (exit 0 if it
    /// holds, 1 if not).
    Verify { file: PathBuf },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn run(cli: Cli) -> Result<Outcome> {
    let solver = Solver::new(SolverConfig {
        threads: cli.threads.max(1),
        ..SolverConfig::default()
    });
    match cli.command {
        Command::Solve { file, x, method } => commands::solve(read(&file)?, &x, method, &solver),
        Command::Recognize { file } => commands::recognize(read(&file)?),
        Command::Generate { n, seed } => commands::generate(n, seed),
        Command::Enumerate { max } => commands::enumerate(max),
        Command::Gadget { file, verify } => commands::gadget(read(&file)?, verify, &solver),
        Command::Verify { file } => commands::verify(&read(&file)?, &solver),
    }
}

fn emit(value: &serde_json::Value) {
    let text = serde_json::to_string_pretty(value).expect("values serialize");
    // A closed pipe downstream is not our error.
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn fail(kind: &str, message: String) -> ExitCode {
    eprintln!("romaneq: {message}");
    emit(&json!({ "error": { "kind": kind, "message": message } }));
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(std::io::stdout(), "{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail("usage", e.render().to_string().trim_end().to_string()),
    };
    let start = Instant::now();
    match run(cli) {
        Ok(outcome) => {
            emit(&outcome.output);
            eprintln!("romaneq: done in {:.3}s", start.elapsed().as_secs_f64());
            ExitCode::from(outcome.exit)
        }
        Err(e) => fail("failure", format!("{e:#}")),
    }
}
