//! `vardesign`: verify design files, evaluate bounds, sweep bound tables,
//! run exhaustive searches and two-point sampling experiments.
//!
//! Exit codes: 0 ok/valid/satisfied/found, 1 invalid/violated/none found,
//! 2 usage, parse or domain error, 3 search budget exhausted, 4 sampling
//! invariant violated.

mod bound;
mod render;
mod sample;
mod search;
mod table;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "vardesign", version, about = "Exact checks of variance-method design bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a design or orthogonal array file
    Verify(verify::Args),
    /// Evaluate one named bound
    Bound(bound::Args),
    /// Sweep a bound over parameter ranges
    Table(table::Args),
    /// Exhaustive search for small designs and codes
    Search(search::Args),
    /// Two-point sampling experiment
    Sample(sample::Args),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => verify::run(a),
        Command::Bound(a) => bound::run(a),
        Command::Table(a) => table::run(a),
        Command::Search(a) => search::run(a),
        Command::Sample(a) => sample::run(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
