//! Subcommand flags, JSON config files, and their resolution into validated
//! run configurations.
//!
//! Every subcommand takes its parameters from CLI flags; `sweep` and
//! `timeseries` additionally accept `--config FILE` pointing at a single
//! JSON document. Explicit flags always override config-file fields.

use std::path::PathBuf;

use serde::Deserialize;

use crate::error::{CliError, Result};

/// Quantity mapped over an `(x, y)` grid by `sweep`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[value(rename_all = "verbatim")]
pub enum SweepQuantity {
    /// Minimal error probability for the excited input, optimized over time.
    HelstromExcited,
    /// Chernoff quantity for the excited input, minimized over time.
    Chernoff,
    /// Rescaled ideal Bayesian error for the excited input, minimized over
    /// time.
    BayesRescaled,
    /// Joint optimization over time and pure input state.
    FullOptimize,
}

/// Quantity tabulated against time by `timeseries`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[value(rename_all = "verbatim")]
pub enum SeriesQuantity {
    /// Longitudinal expectation value under each bath.
    SigmaZ,
    /// Minimal error probability at fixed input.
    Helstrom,
    /// Ideal Bayesian error probability for each requested copy number.
    Delta,
}

/// How the bath pair is specified.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PairSpec {
    /// Directly via `x = tanh(beta_f omega / 2)`, `y = tanh(beta_b omega / 2)`.
    Xy { x: f64, y: f64 },
    /// Via inverse temperatures and the common gap.
    Betas { beta_f_omega: f64, beta_b_omega: f64 },
}

impl PairSpec {
    /// Build the bath pair, deferring domain checks to the library.
    pub fn to_pair(self) -> Result<bathtag::DiscriminationPair> {
        let pair = match self {
            PairSpec::Xy { x, y } => bathtag::DiscriminationPair::from_xy(x, y)?,
            PairSpec::Betas {
                beta_f_omega,
                beta_b_omega,
            } => bathtag::DiscriminationPair::from_betas(beta_f_omega, beta_b_omega)?,
        };
        Ok(pair)
    }
}

fn config_err(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

fn read_config_file<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| config_err(format!("cannot read config file {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| config_err(format!("invalid config file {}: {e}", path.display())))
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

/// Flags of the `sweep` subcommand.
#[derive(Debug, clap::Args)]
pub struct SweepArgs {
    /// JSON config file; explicit flags override its fields.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Quantity mapped over the grid.
    #[arg(long, value_enum)]
    pub quantity: Option<SweepQuantity>,
    /// Grid points per axis.
    #[arg(long)]
    pub grid: Option<usize>,
    /// Lower end of the x range.
    #[arg(long)]
    pub x_min: Option<f64>,
    /// Upper end of the x range.
    #[arg(long)]
    pub x_max: Option<f64>,
    /// Lower end of the y range.
    #[arg(long)]
    pub y_min: Option<f64>,
    /// Upper end of the y range.
    #[arg(long)]
    pub y_max: Option<f64>,
    /// Copies per Bayesian experiment (single value; used by BayesRescaled).
    #[arg(long, value_delimiter = ',')]
    pub copies: Option<Vec<u32>>,
    /// Seed recorded with the run (reserved for stochastic quantities).
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output CSV path (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads for the grid (defaults to one per CPU).
    #[arg(long)]
    pub jobs: Option<usize>,
}

/// JSON config document of the `sweep` subcommand.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct SweepFile {
    grid_n: Option<usize>,
    x_range: Option<[f64; 2]>,
    y_range: Option<[f64; 2]>,
    quantity: Option<SweepQuantity>,
    n_copies: Option<u32>,
    seed: Option<u64>,
    out: Option<String>,
}

/// Validated `sweep` run configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub grid_n: usize,
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    pub quantity: SweepQuantity,
    pub n_copies: u32,
    pub seed: u64,
    pub out: Option<PathBuf>,
}

impl SweepConfig {
    /// Merge defaults, config file, and flags, then validate.
    pub fn resolve(args: &SweepArgs) -> Result<Self> {
        let file: SweepFile = match &args.config {
            Some(path) => read_config_file(path)?,
            None => SweepFile::default(),
        };
        let (x_lo, x_hi) = file.x_range.map_or((0.05, 0.95), |r| (r[0], r[1]));
        let (y_lo, y_hi) = file.y_range.map_or((0.05, 0.95), |r| (r[0], r[1]));
        let n_copies = match &args.copies {
            Some(list) => match list.as_slice() {
                [single] => *single,
                _ => {
                    return Err(config_err(
                        "--copies accepts a single value for sweeps",
                    ))
                }
            },
            None => file.n_copies.unwrap_or(100),
        };
        let cfg = SweepConfig {
            grid_n: args.grid.or(file.grid_n).unwrap_or(101),
            x_range: (args.x_min.unwrap_or(x_lo), args.x_max.unwrap_or(x_hi)),
            y_range: (args.y_min.unwrap_or(y_lo), args.y_max.unwrap_or(y_hi)),
            quantity: args.quantity.or(file.quantity).unwrap_or(SweepQuantity::HelstromExcited),
            n_copies,
            seed: args.seed.or(file.seed).unwrap_or(0),
            out: args.out.clone().or(file.out.map(PathBuf::from)),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<()> {
        if self.grid_n < 2 {
            return Err(config_err(format!(
                "grid_n must be at least 2, got {}",
                self.grid_n
            )));
        }
        let check_range = |name: &str, (lo, hi): (f64, f64)| -> Result<()> {
            if !(lo.is_finite() && hi.is_finite() && 0.0 < lo && lo < hi && hi < 1.0) {
                return Err(config_err(format!(
                    "{name} range must satisfy 0 < lo < hi < 1, got [{lo}, {hi}]"
                )));
            }
            Ok(())
        };
        check_range("x", self.x_range)?;
        check_range("y", self.y_range)?;
        if self.y_range.1 > 0.99 {
            return Err(config_err(format!(
                "y range upper bound must not exceed 0.99 (degeneracy guard), got {}",
                self.y_range.1
            )));
        }
        if self.n_copies == 0 {
            return Err(config_err("n_copies must be at least 1"));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// timeseries
// ---------------------------------------------------------------------------

/// Flags of the `timeseries` subcommand.
#[derive(Debug, clap::Args)]
pub struct TimeSeriesArgs {
    /// JSON config file; explicit flags override its fields.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Quantity tabulated against time.
    #[arg(long, value_enum)]
    pub quantity: Option<SeriesQuantity>,
    /// Bosonic inverse temperature (together with --beta-f).
    #[arg(long, allow_hyphen_values = true)]
    pub beta_b: Option<f64>,
    /// Fermionic inverse temperature (together with --beta-b).
    #[arg(long, allow_hyphen_values = true)]
    pub beta_f: Option<f64>,
    /// Common gap multiplying both inverse temperatures.
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<f64>,
    /// Initial longitudinal components, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub az0: Option<Vec<f64>>,
    /// Largest time on the grid.
    #[arg(long)]
    pub tau_max: Option<f64>,
    /// Number of grid points between 0 (exclusive) and tau_max.
    #[arg(long)]
    pub tau_steps: Option<usize>,
    /// Copy numbers for the Delta quantity, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub copies: Option<Vec<u32>>,
    /// Seed recorded with the run (reserved for stochastic quantities).
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output CSV path (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// JSON config document of the `timeseries` subcommand.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct TimeSeriesFile {
    beta_b: Option<f64>,
    beta_f: Option<f64>,
    omega: Option<f64>,
    x: Option<f64>,
    y: Option<f64>,
    az0: Option<Vec<f64>>,
    tau_max: Option<f64>,
    tau_steps: Option<usize>,
    tau_grid: Option<Vec<f64>>,
    quantity: Option<SeriesQuantity>,
    copies: Option<Vec<u32>>,
    seed: Option<u64>,
    out: Option<String>,
}

/// Validated `timeseries` run configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeriesConfig {
    pub pair: PairSpec,
    pub az0: Vec<f64>,
    pub tau_grid: Vec<f64>,
    pub quantity: SeriesQuantity,
    pub copies: Vec<u32>,
    pub seed: u64,
    pub out: Option<PathBuf>,
}

impl TimeSeriesConfig {
    /// Merge defaults, config file, and flags, then validate.
    pub fn resolve(args: &TimeSeriesArgs) -> Result<Self> {
        let file: TimeSeriesFile = match &args.config {
            Some(path) => read_config_file(path)?,
            None => TimeSeriesFile::default(),
        };
        let pair = resolve_pair(
            args.beta_b,
            args.beta_f,
            args.omega,
            file.beta_b,
            file.beta_f,
            file.omega,
            file.x,
            file.y,
        )?;
        let tau_grid = resolve_tau_grid(
            args.tau_max,
            args.tau_steps,
            file.tau_max,
            file.tau_steps,
            file.tau_grid,
            400,
        )?;
        let cfg = TimeSeriesConfig {
            pair,
            az0: args.az0.clone().or(file.az0).unwrap_or_else(|| vec![1.0]),
            tau_grid,
            quantity: args.quantity.or(file.quantity).unwrap_or(SeriesQuantity::SigmaZ),
            copies: args.copies.clone().or(file.copies).unwrap_or_else(|| vec![100]),
            seed: args.seed.or(file.seed).unwrap_or(0),
            out: args.out.clone().or(file.out.map(PathBuf::from)),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<()> {
        if self.az0.is_empty() {
            return Err(config_err("az0 list must not be empty"));
        }
        for &a in &self.az0 {
            if !(a.is_finite() && (-1.0..=1.0).contains(&a)) {
                return Err(config_err(format!(
                    "az0 values must lie in [-1, 1], got {a}"
                )));
            }
        }
        if self.copies.is_empty() {
            return Err(config_err("copies list must not be empty"));
        }
        if self.copies.contains(&0) {
            return Err(config_err("copies must be at least 1"));
        }
        Ok(())
    }
}

/// Resolve the bath-pair parameters. Flags that specify inverse
/// temperatures take precedence over everything in the config file; a
/// config file may give either `x`/`y` or `beta_b`/`beta_f` (+ `omega`),
/// but not both.
#[allow(clippy::too_many_arguments)]
fn resolve_pair(
    flag_beta_b: Option<f64>,
    flag_beta_f: Option<f64>,
    flag_omega: Option<f64>,
    file_beta_b: Option<f64>,
    file_beta_f: Option<f64>,
    file_omega: Option<f64>,
    file_x: Option<f64>,
    file_y: Option<f64>,
) -> Result<PairSpec> {
    let omega = flag_omega.or(file_omega).unwrap_or(1.0);
    let betas_from = |beta_b: Option<f64>, beta_f: Option<f64>| -> Result<PairSpec> {
        match (beta_b, beta_f) {
            (Some(bb), Some(bf)) => Ok(PairSpec::Betas {
                beta_f_omega: bf * omega,
                beta_b_omega: bb * omega,
            }),
            _ => Err(config_err(
                "both inverse temperatures are required (set --beta-b and --beta-f, \
                 or beta_b and beta_f in the config file)",
            )),
        }
    };
    if flag_beta_b.is_some() || flag_beta_f.is_some() {
        // Flags override the pair wholesale; fall back to the file only for
        // the missing partner.
        return betas_from(flag_beta_b.or(file_beta_b), flag_beta_f.or(file_beta_f));
    }
    let file_has_xy = file_x.is_some() || file_y.is_some();
    let file_has_betas = file_beta_b.is_some() || file_beta_f.is_some();
    if file_has_xy && file_has_betas {
        return Err(config_err(
            "config file specifies both x/y and inverse temperatures; pick one",
        ));
    }
    if file_has_xy {
        return match (file_x, file_y) {
            (Some(x), Some(y)) => {
                if !(x.is_finite() && (0.0..1.0).contains(&x)) {
                    return Err(config_err(format!("x must lie in [0, 1), got {x}")));
                }
                if !(y.is_finite() && 0.0 < y && y < 1.0) {
                    return Err(config_err(format!("y must lie in (0, 1), got {y}")));
                }
                Ok(PairSpec::Xy { x, y })
            }
            _ => Err(config_err("config file must give both x and y")),
        };
    }
    if file_has_betas {
        return betas_from(file_beta_b, file_beta_f);
    }
    Err(config_err(
        "bath pair unspecified: give --beta-b/--beta-f, or x/y or beta_b/beta_f \
         in the config file",
    ))
}

/// Resolve the time grid: an explicit `tau_grid` list from the config file
/// wins unless time flags are given; otherwise the grid is the `tau_steps`
/// points `tau_max k / tau_steps`, k = 1..=tau_steps.
fn resolve_tau_grid(
    flag_tau_max: Option<f64>,
    flag_tau_steps: Option<usize>,
    file_tau_max: Option<f64>,
    file_tau_steps: Option<usize>,
    file_tau_grid: Option<Vec<f64>>,
    default_steps: usize,
) -> Result<Vec<f64>> {
    let flags_given = flag_tau_max.is_some() || flag_tau_steps.is_some();
    if let (Some(grid), false) = (file_tau_grid, flags_given) {
        if grid.is_empty() {
            return Err(config_err("tau_grid must not be empty"));
        }
        if grid.iter().any(|t| !t.is_finite() || *t < 0.0) {
            return Err(config_err("tau_grid entries must be finite and nonnegative"));
        }
        if grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(config_err("tau_grid must be strictly increasing"));
        }
        return Ok(grid);
    }
    let tau_max = flag_tau_max.or(file_tau_max).unwrap_or(5.0);
    let steps = flag_tau_steps.or(file_tau_steps).unwrap_or(default_steps);
    if !(tau_max.is_finite() && tau_max > 0.0) {
        return Err(config_err(format!("tau_max must be positive, got {tau_max}")));
    }
    if steps < 1 {
        return Err(config_err("tau_steps must be at least 1"));
    }
    Ok(uniform_tau_grid(tau_max, steps))
}

/// The `steps` times `tau_max k / steps`, k = 1..=steps (excludes zero,
/// ends exactly at `tau_max`).
fn uniform_tau_grid(tau_max: f64, steps: usize) -> Vec<f64> {
    (1..=steps)
        .map(|k| tau_max * (k as f64 / steps as f64))
        .collect()
}

// ---------------------------------------------------------------------------
// critical-curve
// ---------------------------------------------------------------------------

/// Flags of the `critical-curve` subcommand.
#[derive(Debug, clap::Args)]
pub struct CriticalCurveArgs {
    /// Number of y grid points.
    #[arg(long, default_value_t = 101)]
    pub grid: usize,
    /// Lower end of the y grid.
    #[arg(long, default_value_t = 0.05)]
    pub y_min: f64,
    /// Upper end of the y grid.
    #[arg(long, default_value_t = 0.95)]
    pub y_max: f64,
    /// Output CSV path (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl CriticalCurveArgs {
    /// Validate the flag values.
    pub fn validate(&self) -> Result<()> {
        if self.grid < 2 {
            return Err(config_err(format!(
                "--grid must be at least 2, got {}",
                self.grid
            )));
        }
        if !(self.y_min.is_finite()
            && self.y_max.is_finite()
            && 0.0 < self.y_min
            && self.y_min < self.y_max
            && self.y_max < 1.0)
        {
            return Err(config_err(format!(
                "y range must satisfy 0 < lo < hi < 1, got [{}, {}]",
                self.y_min, self.y_max
            )));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// optimize
// ---------------------------------------------------------------------------

/// Flags of the `optimize` subcommand.
#[derive(Debug, clap::Args)]
pub struct OptimizeArgs {
    /// Bosonic inverse temperature.
    #[arg(long, allow_hyphen_values = true)]
    pub beta_b: f64,
    /// Fermionic inverse temperature.
    #[arg(long, allow_hyphen_values = true)]
    pub beta_f: f64,
    /// Common gap multiplying both inverse temperatures.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub omega: f64,
    /// Coupling rate; converts the dimensionless time to physical time.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub gamma: f64,
    /// Path for the JSON result (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

// ---------------------------------------------------------------------------
// bayes-run
// ---------------------------------------------------------------------------

/// Flags of the `bayes-run` subcommand.
#[derive(Debug, clap::Args)]
pub struct BayesArgs {
    /// Bosonic inverse temperature.
    #[arg(long, allow_hyphen_values = true)]
    pub beta_b: f64,
    /// Fermionic inverse temperature.
    #[arg(long, allow_hyphen_values = true)]
    pub beta_f: f64,
    /// Common gap multiplying both inverse temperatures.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub omega: f64,
    /// Initial longitudinal component of the probe.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub az0: f64,
    /// Largest time on the grid.
    #[arg(long, default_value_t = 5.0)]
    pub tau_max: f64,
    /// Number of grid points between 0 (exclusive) and tau_max.
    #[arg(long, default_value_t = 50)]
    pub tau_steps: usize,
    /// Shots per simulated experiment (single value).
    #[arg(long, default_value_t = 100)]
    pub copies: u32,
    /// Simulated experiments per bath and time point.
    #[arg(long, default_value_t = 1000)]
    pub repetitions: u32,
    /// Base seed of the deterministic counter generator.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output CSV path (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl BayesArgs {
    /// Validate the flag values that the library does not check itself.
    pub fn validate(&self) -> Result<()> {
        if !(self.az0.is_finite() && (-1.0..=1.0).contains(&self.az0)) {
            return Err(config_err(format!(
                "--az0 must lie in [-1, 1], got {}",
                self.az0
            )));
        }
        if !(self.tau_max.is_finite() && self.tau_max > 0.0) {
            return Err(config_err(format!(
                "--tau-max must be positive, got {}",
                self.tau_max
            )));
        }
        if self.tau_steps < 1 {
            return Err(config_err("--tau-steps must be at least 1"));
        }
        if self.copies == 0 {
            return Err(config_err("--copies must be at least 1"));
        }
        if self.repetitions == 0 {
            return Err(config_err("--repetitions must be at least 1"));
        }
        Ok(())
    }

    /// The time grid `tau_max k / tau_steps`, k = 1..=tau_steps.
    pub fn tau_grid(&self) -> Vec<f64> {
        uniform_tau_grid(self.tau_max, self.tau_steps)
    }
}
