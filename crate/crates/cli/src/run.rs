//! Runners for the subcommands: each builds a complete report string
//! (CSV, or human text + JSON for `optimize`) from a validated
//! configuration. All computations are pure, so grid cells can be
//! dispatched to a worker pool and gathered back in order without
//! affecting the output bytes.

use rayon::prelude::*;

use bathtag::solve::{lin_grid, log_grid, scan_then_refine_max};
use bathtag::{
    chernoff_at, critical_point, evolve, full_optimize, helstrom, ideal_delta,
    optimal_time_excited, simulate_and_decide, BlochVector, DiscriminationPair,
};

use crate::config::{
    BayesArgs, CriticalCurveArgs, OptimizeArgs, SeriesQuantity, SweepConfig, SweepQuantity,
    TimeSeriesConfig,
};
use crate::error::Result;
use crate::output::fmt_g17;

/// Column header of `sweep` output.
pub const SWEEP_HEADER: &str = "x,y,tau_bar,exp_neg_tau_bar,az0_bar,value,branch";
/// Column header of `timeseries` output (Delta runs append an `N` column).
pub const TIMESERIES_HEADER: &str = "tau,quantity_label,value";
/// Column header of `critical-curve` output.
pub const CRITICAL_HEADER: &str = "y,x_c,tau_c";
/// Column header of `bayes-run` output.
pub const BAYES_HEADER: &str = "tau,n_correct,n_wrong";

/// Scan range used when minimizing a quantity over time; matches the range
/// used by the joint optimizer so the two kinds of sweep agree about what
/// "finite time" means.
const TAU_SCAN: (f64, f64, usize) = (1e-3, 50.0, 400);

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct SweepRow {
    x: f64,
    y: f64,
    tau_bar: f64,
    az0_bar: f64,
    value: f64,
    branch: &'static str,
}

impl SweepRow {
    fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            fmt_g17(self.x),
            fmt_g17(self.y),
            fmt_g17(self.tau_bar),
            fmt_g17((-self.tau_bar).exp()),
            fmt_g17(self.az0_bar),
            fmt_g17(self.value),
            self.branch
        )
    }
}

/// Minimize `f` over the time scan range, then compare against the steady
/// state; the finite candidate wins only when strictly smaller, so exact
/// ties report `tau = inf`.
fn minimize_over_time(f: impl Fn(f64) -> Result<f64>) -> Result<(f64, f64)> {
    let (lo, hi, n) = TAU_SCAN;
    let grid = log_grid(lo, hi, n);
    // Probe one point strictly so domain errors surface instead of being
    // absorbed by the refinement fallback below.
    f(grid[0])?;
    let neg = |t: f64| f(t).map_or(f64::NEG_INFINITY, |v| -v);
    let (tau_finite, neg_best) = scan_then_refine_max(neg, &grid, 1e-10);
    let value_finite = -neg_best;
    let value_steady = f(f64::INFINITY)?;
    if value_finite < value_steady {
        Ok((tau_finite, value_finite))
    } else {
        Ok((f64::INFINITY, value_steady))
    }
}

fn sweep_cell(quantity: SweepQuantity, x: f64, y: f64, n_copies: u32) -> Result<SweepRow> {
    let row = |tau_bar: f64, az0_bar: f64, value: f64, branch: &'static str| SweepRow {
        x,
        y,
        tau_bar,
        az0_bar,
        value,
        branch,
    };
    match quantity {
        SweepQuantity::HelstromExcited => {
            let (tau, h) = optimal_time_excited(x, y)?;
            Ok(row(tau, 1.0, h, "excited"))
        }
        SweepQuantity::Chernoff => {
            let pair = DiscriminationPair::from_xy(x, y)?;
            let (tau, q) = minimize_over_time(|t| {
                Ok(chernoff_at(&BlochVector::EXCITED, &pair, t)?.q_value)
            })?;
            Ok(row(tau, 1.0, q, "excited"))
        }
        SweepQuantity::BayesRescaled => {
            let pair = DiscriminationPair::from_xy(x, y)?;
            let shots = f64::from(n_copies);
            let (tau, d) = minimize_over_time(|t| {
                Ok(ideal_delta(&pair, &BlochVector::EXCITED, t, shots)?.1)
            })?;
            Ok(row(tau, 1.0, d, "excited"))
        }
        SweepQuantity::FullOptimize => {
            let r = full_optimize(x, y)?;
            Ok(row(r.tau_bar, r.az0_bar, r.h_bar, r.branch.label()))
        }
    }
}

/// Map the configured quantity over the `(x, y)` grid, row-major with `x`
/// as the outer (slow) axis.
pub fn run_sweep(cfg: &SweepConfig) -> Result<String> {
    let xs = lin_grid(cfg.x_range.0, cfg.x_range.1, cfg.grid_n);
    let ys = lin_grid(cfg.y_range.0, cfg.y_range.1, cfg.grid_n);
    let cells: Vec<(f64, f64)> = xs
        .iter()
        .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
        .collect();
    let rows: Vec<SweepRow> = cells
        .par_iter()
        .map(|&(x, y)| sweep_cell(cfg.quantity, x, y, cfg.n_copies))
        .collect::<Result<_>>()?;
    let mut csv = String::with_capacity(rows.len() * 96 + 64);
    csv.push_str(SWEEP_HEADER);
    csv.push('\n');
    for r in &rows {
        csv.push_str(&r.to_csv());
        csv.push('\n');
    }
    Ok(csv)
}

// ---------------------------------------------------------------------------
// timeseries
// ---------------------------------------------------------------------------

/// Tabulate the configured quantity against time, one contiguous block of
/// rows per curve.
pub fn run_timeseries(cfg: &TimeSeriesConfig) -> Result<String> {
    let pair = cfg.pair.to_pair()?;
    let mut csv = String::new();
    match cfg.quantity {
        SeriesQuantity::SigmaZ => {
            csv.push_str(TIMESERIES_HEADER);
            csv.push('\n');
            for &az0 in &cfg.az0 {
                let a0 = BlochVector::pure_z(az0)?;
                for (bath, name) in [(pair.bosonic(), "bosonic"), (pair.fermionic(), "fermionic")]
                {
                    for &tau in &cfg.tau_grid {
                        let v = evolve(&a0, bath, tau)?.az;
                        // Semicolon inside the label: fields must stay
                        // comma-free to keep the CSV parseable.
                        csv.push_str(&format!(
                            "{},sigma_z[{name};az0={az0}],{}\n",
                            fmt_g17(tau),
                            fmt_g17(v)
                        ));
                    }
                }
            }
        }
        SeriesQuantity::Helstrom => {
            csv.push_str(TIMESERIES_HEADER);
            csv.push('\n');
            for &az0 in &cfg.az0 {
                let a0 = BlochVector::pure_z(az0)?;
                for &tau in &cfg.tau_grid {
                    let v = helstrom(&a0, &pair, tau)?;
                    csv.push_str(&format!(
                        "{},helstrom[az0={az0}],{}\n",
                        fmt_g17(tau),
                        fmt_g17(v)
                    ));
                }
            }
        }
        SeriesQuantity::Delta => {
            csv.push_str(TIMESERIES_HEADER);
            csv.push_str(",N\n");
            for &az0 in &cfg.az0 {
                let a0 = BlochVector::pure_z(az0)?;
                for &n in &cfg.copies {
                    for &tau in &cfg.tau_grid {
                        let (delta, _) = ideal_delta(&pair, &a0, tau, f64::from(n))?;
                        csv.push_str(&format!(
                            "{},delta[az0={az0}],{},{n}\n",
                            fmt_g17(tau),
                            fmt_g17(delta)
                        ));
                    }
                }
            }
        }
    }
    Ok(csv)
}

// ---------------------------------------------------------------------------
// critical-curve
// ---------------------------------------------------------------------------

/// Tabulate the boundary `x_c(y)` (with its boundary time) over a `y` grid;
/// grid points where no boundary exists produce `nan` columns.
pub fn run_critical_curve(args: &CriticalCurveArgs) -> Result<String> {
    let ys = lin_grid(args.y_min, args.y_max, args.grid);
    let mut csv = String::with_capacity(ys.len() * 64 + 16);
    csv.push_str(CRITICAL_HEADER);
    csv.push('\n');
    for &y in &ys {
        let (x_c, tau_c) = match critical_point(y)? {
            Some(cp) => (cp.x_c, cp.tau_c),
            None => (f64::NAN, f64::NAN),
        };
        csv.push_str(&format!(
            "{},{},{}\n",
            fmt_g17(y),
            fmt_g17(x_c),
            fmt_g17(tau_c)
        ));
    }
    Ok(csv)
}

// ---------------------------------------------------------------------------
// optimize
// ---------------------------------------------------------------------------

fn json_number(v: f64) -> serde_json::Value {
    match serde_json::Number::from_f64(v) {
        Some(n) => serde_json::Value::Number(n),
        // JSON has no infinities; keep them readable and unambiguous.
        None => serde_json::Value::String(fmt_g17(v)),
    }
}

/// Jointly optimize input and time for one bath pair. Returns the
/// human-readable block and the JSON record.
pub fn run_optimize(args: &OptimizeArgs) -> Result<(String, String)> {
    let pair = DiscriminationPair::from_betas(
        args.beta_f * args.omega,
        args.beta_b * args.omega,
    )?
    .with_gamma(args.gamma)?;
    let r = full_optimize(pair.x(), pair.y())?;
    let t_bar = r.tau_bar / pair.gamma();
    let human = format!(
        "bath pair: x = {x:.6} (fermionic), y = {y:.6} (bosonic)\n\
         optimal input: az0_bar = {az0:.6}\n\
         optimal time: tau_bar = {tau:.6} (exp(-tau_bar) = {etau:.6}, t_bar = tau_bar / gamma = {t:.6})\n\
         error probability: h_bar = {h:.6}\n\
         branch: {branch}{degenerate}\n",
        x = pair.x(),
        y = pair.y(),
        az0 = r.az0_bar,
        tau = r.tau_bar,
        etau = (-r.tau_bar).exp(),
        t = t_bar,
        h = r.h_bar,
        branch = r.branch.label(),
        degenerate = if r.degenerate { " (degenerate)" } else { "" },
    );
    let json = serde_json::json!({
        "beta_f_omega": json_number(args.beta_f * args.omega),
        "beta_b_omega": json_number(args.beta_b * args.omega),
        "x": json_number(pair.x()),
        "y": json_number(pair.y()),
        "gamma": json_number(pair.gamma()),
        "tau_bar": json_number(r.tau_bar),
        "t_bar": json_number(t_bar),
        "exp_neg_tau_bar": json_number((-r.tau_bar).exp()),
        "az0_bar": json_number(r.az0_bar),
        "h_bar": json_number(r.h_bar),
        "branch": r.branch.label(),
        "degenerate": r.degenerate,
    });
    Ok((human, format!("{json}\n")))
}

// ---------------------------------------------------------------------------
// bayes-run
// ---------------------------------------------------------------------------

/// Seed offset separating the two simulated truths; an arbitrary odd
/// constant (the 64-bit golden ratio) so both runs draw unrelated streams.
const TRUTH_SEED_OFFSET: u64 = 0x9E37_79B9_7F4A_7C15;

/// Monte Carlo identification tallies over a time grid: at each time, run
/// `repetitions` simulated experiments under each true bath and total the
/// correct/wrong decisions.
pub fn run_bayes(args: &BayesArgs) -> Result<String> {
    let pair = DiscriminationPair::from_betas(
        args.beta_f * args.omega,
        args.beta_b * args.omega,
    )?;
    let a0 = BlochVector::pure_z(args.az0)?;
    let grid = args.tau_grid();
    let mut csv = String::with_capacity(grid.len() * 48 + 24);
    csv.push_str(BAYES_HEADER);
    csv.push('\n');
    for &tau in &grid {
        let (_, tally_b) = simulate_and_decide(
            &pair,
            &a0,
            tau,
            args.copies,
            args.repetitions,
            args.seed,
            0.5,
            true,
        )?;
        let (_, tally_f) = simulate_and_decide(
            &pair,
            &a0,
            tau,
            args.copies,
            args.repetitions,
            args.seed ^ TRUTH_SEED_OFFSET,
            0.5,
            false,
        )?;
        csv.push_str(&format!(
            "{},{},{}\n",
            fmt_g17(tau),
            tally_b.n_correct + tally_f.n_correct,
            tally_b.n_wrong + tally_f.n_wrong
        ));
    }
    Ok(csv)
}
