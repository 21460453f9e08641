//! Command-line front end: thin argument parsing over the report module.
//! Exit codes: 0 success, 2 validation/parse error, 3 infeasible pair,
//! 4 convergence failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qroc::report::{
    cmd_bhatta_scan, cmd_classical, cmd_general, cmd_pure, cmd_unambiguous, OutputFormat,
    RunConfig,
};

#[derive(Parser)]
#[command(
    name = "qroc",
    about = "ROC analysis of two-hypothesis discrimination, classical and quantum",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for all randomized sampling
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,

    /// Prior-grid size for Helstrom sweeps
    #[arg(long = "lambda-grid", global = true, default_value_t = 201)]
    lambda_grid: usize,

    /// Haar samples per measurement rank in region scatters
    #[arg(long = "samples-per-rank", global = true, default_value_t = 160)]
    samples_per_rank: usize,

    /// Convergence tolerance for refinement and quadrature
    #[arg(long, global = true, default_value_t = 1e-6)]
    tol: f64,

    /// Output directory (created if missing)
    #[arg(long, global = true, default_value = ".")]
    out: PathBuf,

    /// Artifact families to write
    #[arg(long, global = true, value_enum, default_value_t = Format::All)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Svg,
    All,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
            Format::Svg => OutputFormat::Svg,
            Format::All => OutputFormat::All,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Feasible region and optimal ROC curve of two finite distributions
    Classical {
        /// Positive-hypothesis distribution (JSON array of probabilities)
        p_file: PathBuf,
        /// Negative-hypothesis distribution (JSON array of probabilities)
        q_file: PathBuf,
    },
    /// ROC ellipse and Helstrom arc of two pure states
    Pure {
        /// Polar angle of the positive state (radians)
        theta_p: f64,
        /// Polar angle of the negative state (radians)
        theta_q: f64,
    },
    /// Bhattacharyya coefficient and square-root fidelity over pure-state
    /// angle separations
    BhattaScan {
        /// Number of grid points over [0, pi]
        #[arg(default_value_t = 101)]
        n_points: usize,
    },
    /// Feasible region, Helstrom curve, and similarity scalars of two
    /// density operators
    General {
        /// Positive-hypothesis state file (JSON)
        rho_p_file: PathBuf,
        /// Negative-hypothesis state file (JSON)
        rho_n_file: PathBuf,
    },
    /// Unambiguous-discrimination feasibility, POVM, and success rates
    Unambiguous {
        /// Positive-hypothesis state file (JSON)
        rho_p_file: PathBuf,
        /// Negative-hypothesis state file (JSON)
        rho_n_file: PathBuf,
        /// Weight on the positive-conclusive effect
        #[arg(default_value_t = 0.5)]
        lambda1: f64,
        /// Weight on the negative-conclusive effect
        #[arg(default_value_t = 0.5)]
        lambda2: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig {
        seed: cli.seed,
        lambda_grid_size: cli.lambda_grid,
        samples_per_rank: cli.samples_per_rank,
        tol_b: cli.tol,
        eig_tol: 1e-9,
        output_dir: cli.out,
        format: cli.format.into(),
    };
    let result = match cli.command {
        Command::Classical { p_file, q_file } => cmd_classical(&p_file, &q_file, &cfg),
        Command::Pure { theta_p, theta_q } => cmd_pure(theta_p, theta_q, &cfg),
        Command::BhattaScan { n_points } => cmd_bhatta_scan(n_points, &cfg),
        Command::General {
            rho_p_file,
            rho_n_file,
        } => cmd_general(&rho_p_file, &rho_n_file, &cfg),
        Command::Unambiguous {
            rho_p_file,
            rho_n_file,
            lambda1,
            lambda2,
        } => cmd_unambiguous(&rho_p_file, &rho_n_file, lambda1, lambda2, &cfg),
    };
    match result {
        Ok(artifacts) => {
            for path in artifacts {
                println!("{}", path.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
