//! `scx`: evaluate state-dependent choice rules, check them against
//! axioms, verify the structural claims behind the library, and search for
//! counterexamples. Exit codes: 0 pass, 1 violation or claim failure,
//! 2 usage/parse/domain error.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use scx_cli::commands::{self, CheckArgs, EvalArgs, SearchArgs, VerifyArgs};

#[derive(Parser)]
#[command(
    name = "scx",
    version,
    about = "State-dependent choice: rules, axiom checks, and claim verification"
)]
struct Cli {
    /// Emit the machine-readable JSON report (timing excluded)
    #[arg(long, global = true)]
    json: bool,
    /// Ceiling on profiles visited by exhaustive enumeration
    #[arg(long, global = true, default_value_t = scx_core::DEFAULT_MAX_VISITS)]
    max_visits: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a rule on profile documents
    Eval(EvalArgs),
    /// Check a rule against an axiom, exhaustively or on random samples
    Check(CheckArgs),
    /// Verify a named structural claim
    Verify(VerifyArgs),
    /// Seeded randomized counterexample search (exit 1 when one is found)
    Search(SearchArgs),
    /// Replay the built-in example corpus
    Examples,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let started = Instant::now();
    let result = match &cli.command {
        Command::Eval(args) => commands::run_eval(args, echo),
        Command::Check(args) => commands::run_check(args, echo, cli.max_visits),
        Command::Verify(args) => commands::run_verify(args, echo, cli.max_visits),
        Command::Search(args) => commands::run_search(args, echo, cli.max_visits),
        Command::Examples => commands::run_examples(echo, cli.max_visits),
    };
    match result {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text(started.elapsed().as_millis()));
            }
            ExitCode::from(report.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
