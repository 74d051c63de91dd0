//! Command-line front end: parameter sweeps over `(x, y)` grids, time
//! series, Monte Carlo tallies, and single-point optimization for the
//! bosonic-vs-fermionic bath discrimination problem. Emits figure-ready
//! CSV; identical inputs produce byte-identical output regardless of the
//! worker count.

mod config;
mod error;
mod output;
mod run;

use clap::Parser;

use crate::error::{CliError, Result};
use crate::output::Sink;

#[derive(Debug, Parser)]
#[command(
    name = "bathtag",
    version,
    about = "Discriminating bosonic vs fermionic thermal baths with a qubit probe: \
             grids, time series, and Monte Carlo tallies as CSV"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, clap::Subcommand)]
enum Cmd {
    /// Map a quantity over an (x, y) grid; x = tanh(beta_f omega / 2),
    /// y = tanh(beta_b omega / 2).
    Sweep(config::SweepArgs),
    /// Tabulate a quantity against the dimensionless time for one bath pair.
    Timeseries(config::TimeSeriesArgs),
    /// Tabulate the boundary x_c(y) separating finite-time from
    /// steady-state optima.
    CriticalCurve(config::CriticalCurveArgs),
    /// Jointly optimize the input state and the interaction time for one
    /// bath pair (human-readable summary + JSON record).
    Optimize(config::OptimizeArgs),
    /// Monte Carlo identification tallies over a time grid.
    BayesRun(config::BayesArgs),
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = dispatch(cli) {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}

fn dispatch(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::Sweep(args) => {
            let cfg = config::SweepConfig::resolve(&args)?;
            if let Some(jobs) = args.jobs {
                if jobs == 0 {
                    return Err(CliError::Config("--jobs must be at least 1".into()));
                }
                rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build_global()
                    .map_err(|e| CliError::Config(format!("cannot size worker pool: {e}")))?;
            }
            let csv = run::run_sweep(&cfg)?;
            Sink::new(cfg.out.clone()).write(&csv)
        }
        Cmd::Timeseries(args) => {
            let cfg = config::TimeSeriesConfig::resolve(&args)?;
            let csv = run::run_timeseries(&cfg)?;
            Sink::new(cfg.out.clone()).write(&csv)
        }
        Cmd::CriticalCurve(args) => {
            args.validate()?;
            let csv = run::run_critical_curve(&args)?;
            Sink::new(args.out.clone()).write(&csv)
        }
        Cmd::Optimize(args) => {
            let (human, json) = run::run_optimize(&args)?;
            print!("{human}");
            Sink::new(args.out.clone()).write(&json)
        }
        Cmd::BayesRun(args) => {
            args.validate()?;
            let csv = run::run_bayes(&args)?;
            Sink::new(args.out.clone()).write(&csv)
        }
    }
}
