//! `sumsetlab`: build extremal sets, run saturation procedures on set files,
//! and run seeded verification suites that write CSV and JSON reports.

mod construct;
mod error;
mod io;
mod report;
mod saturate;
mod suite;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use error::{EXIT_PASS, EXIT_VERDICT};

#[derive(Parser, Debug)]
#[command(name = "sumsetlab", version = io::VERSION, about = "Sumset saturation workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a construction and write it as a set file with a metadata sidecar.
    Construct(construct::ConstructArgs),
    /// Run a selection procedure on set files and check the matching bound.
    Saturate(saturate::SaturateArgs),
    /// Run a seeded verification suite.
    Suite(suite::SuiteArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Construct(args) => construct::run(args).map(|_| true),
        Command::Saturate(args) => saturate::run(args),
        Command::Suite(args) => suite::run(args),
    };
    let code = match outcome {
        Ok(true) => EXIT_PASS,
        Ok(false) => EXIT_VERDICT,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
