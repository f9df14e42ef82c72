use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod check;
mod error;
mod reduce;
mod selftest;

use error::CliError;

#[derive(Parser)]
#[command(
    name = "bezout-reduce",
    version,
    about = "Exact diagonal reduction over Bézout rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Diagonal,
    MspecLoop,
    ModJacobson,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Condition {
    StableRange,
    Adequate,
    PmSplit,
    PmWitness,
    FecklyClean,
    Lam,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a JSON matrix to diagonal form and print the transforms.
    Reduce {
        /// Ring descriptor: int, poly:p, zloc23, mod:n or quat. Defaults to the file's ring.
        #[arg(long)]
        ring: Option<String>,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "diagonal")]
        algorithm: Algorithm,
        /// Append the elementary operations to the output.
        #[arg(long)]
        emit_transcript: bool,
    },
    /// Certify an element-level condition.
    Check {
        #[arg(value_enum)]
        condition: Condition,
        args: Vec<String>,
        #[arg(long)]
        ring: Option<String>,
    },
    /// Run the bundled invariant suites.
    Selftest {
        #[arg(long)]
        suite: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Reduce {
            ring,
            input,
            algorithm,
            emit_transcript,
        } => reduce::run(ring.as_deref(), &input, algorithm, emit_transcript),
        Command::Check {
            condition,
            args,
            ring,
        } => check::run(condition, &args, ring.as_deref()),
        Command::Selftest { suite, seed } => selftest::run(suite.as_deref(), seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Verdict(out)) => {
            println!("{out}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
