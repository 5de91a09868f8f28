//! `fracinv`: batch driver over the fracinv-core library.
//!
//! Exit codes: 0 success, 2 configuration error (including inadmissible
//! model parameters), 3 numerical failure, 1 file-system error.

mod commands;
mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::Run;

#[derive(Parser)]
#[command(name = "fracinv", version, about = "Forward runs, transform scans, residue checks and reconstructions")]
struct Cli {
    /// Output directory, created if missing
    #[arg(long, global = true, default_value = "fracinv-out")]
    out: PathBuf,
    /// Noise seed; overrides `data.seed`
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Only errors on stderr, nothing on stdout
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the forward problem; writes state.csv and flux.csv (and field.csv with disc.x)
    Forward { config: PathBuf },
    /// Flux transform at task.s; writes transforms.csv
    LaplaceScan { config: PathBuf },
    /// Jump across the negative axis at task.rho; writes jump.csv
    JumpScan { config: PathBuf },
    /// Contour residues at the modes in task.modes; writes residues.json
    Residues { config: PathBuf },
    /// Least-squares reconstruction from a flux file; writes result.json
    Invert { config: PathBuf, data: PathBuf },
    /// Admissibility and separation report; writes validate.json
    Validate { config: PathBuf },
    /// Special-function identity suite; writes specfun_check.json
    SpecfunCheck,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(if cli.quiet { "error" } else { "warn" }))
        .init();
    let run = Run {
        out: cli.out,
        seed: cli.seed,
        quiet: cli.quiet,
    };
    let result = match &cli.command {
        Command::Forward { config } => commands::forward(&run, config),
        Command::LaplaceScan { config } => commands::laplace_scan(&run, config),
        Command::JumpScan { config } => commands::jump_scan(&run, config),
        Command::Residues { config } => commands::residues(&run, config),
        Command::Invert { config, data } => commands::invert(&run, config, data),
        Command::Validate { config } => commands::validate(&run, config),
        Command::SpecfunCheck => commands::specfun_check(&run),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fracinv: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
