//! `hbayes` — fit Bayesian journal h-index models, compare them by mean
//! posterior deviance, and run covariate sensitivity analyses.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod cmd;
mod manifest;
mod svg;

/// Command failure carrying the process exit code: user errors exit 1,
/// internal errors exit 2.
#[derive(Debug)]
pub enum Failure {
    User(String),
    Internal(String),
}

impl From<hbayes::Error> for Failure {
    fn from(e: hbayes::Error) -> Self {
        Failure::User(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "hbayes",
    version,
    about = "Bayesian models of the journal h-index: MCMC fitting, deviance \
             comparison, and covariate sensitivity analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit a model to journal data by adaptive MCMC
    Fit(FitArgs),
    /// Rank fitted models by mean posterior deviance (smaller is better)
    Compare(CompareArgs),
    /// Propagate a fitted posterior over a covariate grid and report SI
    Sensitivity(SensitivityArgs),
    /// Percentile table (min, 5%, 10%, 25%, median, 75%, 90%, 95%, max)
    Summary(SummaryArgs),
    /// Write a synthetic dataset drawn from known parameters
    Simulate(SimulateArgs),
    /// Render SVG figures from previously written artifacts
    Plot(PlotArgs),
}

#[derive(Args)]
pub struct FitArgs {
    /// Input CSV with header `journal,h,P,C`
    #[arg(long)]
    pub data: PathBuf,
    /// Model: er (Egghe-Rousseau), gs (Glänzel-Schubert), h (Hirsch)
    #[arg(long)]
    pub model: String,
    /// Observation model: gaussian or nb
    #[arg(long)]
    pub likelihood: String,
    /// Post-burn-in iterations
    #[arg(long, default_value_t = 50_000)]
    pub iters: usize,
    /// Adaptive burn-in iterations (discarded)
    #[arg(long, default_value_t = 5_000)]
    pub burnin: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Keep every k-th draw
    #[arg(long, default_value_t = 1)]
    pub thin: usize,
    /// Independent chains (seeded seed, seed+1, ...); >1 enables split R-hat
    #[arg(long, default_value_t = 1)]
    pub chains: usize,
    /// Output directory
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Permit model/likelihood pairings outside the reference analysis
    #[arg(long)]
    pub allow_nonpaper: bool,
}

#[derive(Args)]
pub struct CompareArgs {
    /// Fit summary JSON files (from `hbayes fit`)
    #[arg(required = true, num_args = 1..)]
    pub summaries: Vec<PathBuf>,
    /// Allow comparing a single fit
    #[arg(long)]
    pub force: bool,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Args)]
pub struct SensitivityArgs {
    /// Chain CSV written by `hbayes fit`
    #[arg(long)]
    pub chain: PathBuf,
    /// The dataset the chain was fitted on (supplies the grids)
    #[arg(long)]
    pub data: PathBuf,
    /// Covariate to vary: P or C
    #[arg(long)]
    pub vary: String,
    /// Grid: global (5th-95th percentiles) or local (median ±30%)
    #[arg(long)]
    pub mode: String,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Propagate every kept draw instead of subsampling to 5000
    #[arg(long)]
    pub no_thin: bool,
}

#[derive(Args)]
pub struct SummaryArgs {
    #[arg(long)]
    pub data: PathBuf,
    /// Also write the table as CSV to this path
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Args)]
pub struct SimulateArgs {
    /// Generating model: er, gs, or h
    #[arg(long)]
    pub model: String,
    /// Observation model: gaussian or nb
    #[arg(long)]
    pub likelihood: String,
    #[arg(long)]
    pub alpha: f64,
    /// Glänzel-Schubert scale (gs only)
    #[arg(long)]
    pub c: Option<f64>,
    /// Hirsch exponent a (h only)
    #[arg(long)]
    pub a: Option<f64>,
    /// Hirsch exponent b (h only)
    #[arg(long)]
    pub b: Option<f64>,
    /// Gaussian observation sd
    #[arg(long, default_value_t = 5.0)]
    pub sigma: f64,
    /// Negative-binomial dispersion
    #[arg(long, default_value_t = 5.0)]
    pub r: f64,
    #[arg(long, default_value_t = 130)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Publication-count range, log-uniform: lo,hi
    #[arg(long, value_parser = cmd::parse_range, default_value = "48,8678")]
    pub p_range: (f64, f64),
    /// Citation-count range, log-uniform: lo,hi
    #[arg(long, value_parser = cmd::parse_range, default_value = "19,456498")]
    pub c_range: (f64, f64),
    /// Output CSV path
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Args)]
pub struct PlotArgs {
    /// Chain CSV: render parameter trace plots
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// Parameter for --trace (default: every sampled parameter)
    #[arg(long)]
    pub param: Option<String>,
    /// Chain CSVs: render a deviance violin per chain
    #[arg(long, num_args = 1..)]
    pub violin: Vec<PathBuf>,
    /// Sensitivity curve CSV: render the curve with its credible band
    #[arg(long)]
    pub curve: Option<PathBuf>,
    /// SI JSON: render the progressive sensitivity index
    #[arg(long)]
    pub progressive: Option<PathBuf>,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{e}");
                    ExitCode::from(1)
                }
            };
        }
    };
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let result = match cli.command {
        Command::Fit(args) => cmd::fit(&args, &argv),
        Command::Compare(args) => cmd::compare(&args, &argv),
        Command::Sensitivity(args) => cmd::sensitivity(&args, &argv),
        Command::Summary(args) => cmd::summary(&args, &argv),
        Command::Simulate(args) => cmd::simulate(&args, &argv),
        Command::Plot(args) => cmd::plot(&args, &argv),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::User(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
    }
}
