//! `bcs` — config-driven runner for the gap-equation solver, transition
//! temperature, thermodynamics, and near-zero asymptotics.
//!
//! Exit codes: 0 success, 2 configuration error, 3 solver non-convergence,
//! 4 numerical failure.

mod commands;
mod config;
mod output;
mod svg;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use thiserror::Error;

#[derive(Parser)]
#[command(
    name = "bcs",
    version,
    about = "Gap-equation solver: spectra, thermodynamics, and near-zero asymptotics of a superconducting band"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Solve the gap profile at a single temperature
    Solve {
        #[arg(long)]
        config: PathBuf,
        /// Temperature of the solve (k_B = 1 units)
        #[arg(long, default_value_t = 0.0)]
        temperature: f64,
        /// Override the configured output directory
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve along the configured temperature ladder with warm starts
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Locate the transition temperature by its spectral-radius crossing
    Tc {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Entropy and specific heat along the ladder, by both derivative routes
    Thermo {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the near-zero approximations against full numerics
    Asympt {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Critical-field ratio and its universal weak-coupling limit
    Ratio {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Full pipeline: everything above plus a summary
    Report {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("non-convergence: {0}")]
    NonConvergence(String),
    #[error("numerical error: {0}")]
    Numerical(String),
    #[error("io error: {0}")]
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::NonConvergence(_) => 3,
            CliError::Numerical(_) => 4,
            CliError::Io(_) => 1,
        }
    }
}

impl From<bcs_core::Error> for CliError {
    fn from(e: bcs_core::Error) -> Self {
        use bcs_core::Error::*;
        match e {
            InvalidParameter { .. } | OutOfBand { .. } | NonPositiveKernel { .. }
            | TableFormat(_) => CliError::Config(e.to_string()),
            NotConverged { .. } => CliError::NonConvergence(e.to_string()),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match commands::dispatch(cli.command) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("bcs: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
