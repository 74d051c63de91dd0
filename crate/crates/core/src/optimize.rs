//! Optimal probing strategies: when to measure and how to prepare the probe.
//!
//! All quantities here are functions of the temperature variables
//! `x = tanh(beta_f omega / 2) in [0, 1)` and `y = tanh(beta_b omega / 2)
//! in (0, 1)` and of the dimensionless time `tau`. For the excited input the
//! signed gap between the two longitudinal relaxations is
//!
//! ```text
//!   d(tau) = (1 + x)(1 - e^-tau) - (1 + y)(1 - e^(-tau/y)),
//! ```
//!
//! whose absolute value is the trace distance of the evolved states. `d`
//! starts at 0, goes negative (the bosonic bath acts faster), reaches its
//! most negative value at `tau_2`, and relaxes to `x - y`; when `x > y` it
//! crosses zero at a time `tau_1 >= tau_2` and approaches the positive limit
//! from below. Whether the best finite-time distance `|d(tau_2)|` beats the
//! steady-state distance `|x - y|` decides between measuring at `tau_2` and
//! waiting forever; the boundary in the `(x, y)` plane is the critical curve
//! computed by [`critical_point`].
//!
//! For a general pure input with longitudinal component `a = az(0)`, the
//! squared trace distance is an explicit quadratic in `a`,
//!
//! ```text
//!   D^2(tau, a) = (f+ f- a + A)^2 + f-^2 (1 - a^2)
//!              = f-^2 (f+^2 - 1) a^2 + 2 A f+ f- a + (f-^2 + A^2),
//!   f+- = e^(-tau/2) +- e^(-tau/(2y)),
//!   A    = -x (1 - e^-tau) + y (1 - e^(-tau/y)),
//! ```
//!
//! so the best input at fixed `tau` is either the parabola vertex (when it
//! lies inside `[-1, 1]` and the parabola opens downward enough) or one of
//! the poles `a = +-1`. [`full_optimize`] maximizes over `tau` as well.

use crate::distinguishability::excited_distance;
use crate::dynamics::validate_tau;
use crate::error::Error;
use crate::solve::{bisect, golden_max, log_grid, lin_grid};
use crate::Result;

/// Time-scan window and resolution used by [`full_optimize`].
const TAU_SCAN_LO: f64 = 1e-3;
const TAU_SCAN_HI: f64 = 50.0;
const TAU_SCAN_POINTS: usize = 2000;

/// Bisection tolerance for characteristic times.
const TIME_TOL: f64 = 1e-12;

/// Validate the temperature variables.
fn validate_xy(x: f64, y: f64) -> Result<()> {
    if !x.is_finite() || !(0.0..1.0).contains(&x) {
        return Err(Error::XOutOfRange(x));
    }
    if !y.is_finite() || !(y > 0.0 && y < 1.0) {
        return Err(Error::YOutOfRange(y));
    }
    Ok(())
}

/// Signed longitudinal gap `d(tau)` for the excited input (see module docs);
/// `|d| = ` [`excited_distance`].
fn signed_excited_gap(tau: f64, x: f64, y: f64) -> f64 {
    let em = |t: f64| -(-t).exp_m1();
    (1.0 + x) * em(tau) - (1.0 + y) * em(tau / y)
}

/// The two characteristic times of the excited-input protocol.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharacteristicTimes {
    /// Zero crossing of the signed gap; exists iff `x > y`.
    pub tau_1: Option<f64>,
    /// Time of the most negative signed gap (the finite-time optimum).
    pub tau_2: f64,
}

/// Locate the characteristic times `tau_1` (zero crossing, iff `x > y`) and
/// `tau_2` (extremum of the gap) by bracketing and bisection to `1e-12`.
///
/// `tau_2` solves `d'(tau) = 0`, i.e.
/// `(1 + x) e^-tau = ((1 + y)/y) e^(-tau/y)`; the bracket is grown by
/// doubling from `[0, 1]`. `tau_1 > tau_2` whenever it exists.
pub fn characteristic_times(x: f64, y: f64) -> Result<CharacteristicTimes> {
    validate_xy(x, y)?;
    // d'(tau) up to the positive factor e^-tau: (1+x) - ((1+y)/y) e^(-tau(1/y-1)).
    // Increasing in tau from (1+x) - (1+y)/y < 0 toward (1+x) > 0.
    let dprime = |t: f64| (1.0 + x) - ((1.0 + y) / y) * (-t * (1.0 / y - 1.0)).exp();
    let mut hi = 1.0;
    while dprime(hi) <= 0.0 {
        hi *= 2.0;
        assert!(hi < 1e9, "tau_2 bracket failed to close");
    }
    let tau_2 = bisect(dprime, 0.0, hi, TIME_TOL).expect("tau_2 bracket holds a sign change");

    let tau_1 = if x > y {
        // d(tau_2) < 0 and d -> x - y > 0: bracket the crossing above tau_2.
        let d = |t: f64| signed_excited_gap(t, x, y);
        let mut hi = (2.0 * tau_2).max(1.0);
        while d(hi) <= 0.0 {
            hi *= 2.0;
            assert!(hi < 1e9, "tau_1 bracket failed to close");
        }
        Some(bisect(d, tau_2, hi, TIME_TOL).expect("tau_1 bracket holds a sign change"))
    } else {
        None
    };
    Ok(CharacteristicTimes { tau_1, tau_2 })
}

/// Best measurement time for the excited input: `(tau_opt, H(tau_opt))`.
///
/// Compares the finite-time optimum `D(tau_2)` with the steady-state value
/// `|x - y|` and returns whichever wins (ties go to the finite time);
/// `tau_opt = +inf` signals the steady-state branch. The comparison uses the
/// cancellation-free margin
///
/// ```text
///   D(tau_2) - |x - y| = (1 + x)(1 - y) e^(-tau_2) - 2 max(x - y, 0),
/// ```
///
/// exact by the stationarity condition at `tau_2` (for `x <= y` the identity
/// reduces to `D(tau_2) - (y - x) = (1+x)(1-y)e^(-tau_2) - 0` after sign
/// bookkeeping), so near-degenerate corners are classified reliably even
/// when the direct difference would lose all significant digits.
pub fn optimal_time_excited(x: f64, y: f64) -> Result<(f64, f64)> {
    let times = characteristic_times(x, y)?;
    let tau_2 = times.tau_2;
    let margin = (1.0 + x) * (1.0 - y) * (-tau_2).exp() - 2.0 * (x - y).max(0.0);
    if margin >= 0.0 {
        let d = excited_distance(tau_2, x, y)?;
        Ok((tau_2, 0.5 - 0.25 * d))
    } else {
        Ok((f64::INFINITY, 0.5 - 0.25 * (x - y).abs()))
    }
}

/// A point on the critical curve separating finite-time from steady-state
/// optima of the excited-input protocol.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalPoint {
    /// Fermionic temperature variable on the boundary.
    pub x_c: f64,
    /// The common optimum time at the boundary (where `D(tau_c) = x_c - y`).
    pub tau_c: f64,
}

/// Critical point for a given `y`: the `x` at which the finite-time optimum
/// exactly ties the steady-state distance.
///
/// At the boundary both the stationarity condition and the tie condition
/// hold; eliminating `x` via `1 + x = ((1 + y)/y) e^(-tau (1/y - 1))`
/// leaves a single equation in `tau`,
///
/// ```text
///   G(tau) = (2 - e^-tau) e^(-tau (1/y - 1)) / y - (2 - e^(-tau/y)) = 0,
/// ```
///
/// with `G(0+) = 1/y - 1 > 0` and `G(inf) = -2`: the sign change is scanned
/// on a log grid and bisected. Returns `None` if no admissible root with
/// `x_c in (0, 1)` and residuals below `1e-10` exists.
pub fn critical_point(y: f64) -> Result<Option<CriticalPoint>> {
    if !y.is_finite() || !(y > 0.0 && y < 1.0) {
        return Err(Error::YOutOfRange(y));
    }
    let g = |t: f64| {
        (2.0 - (-t).exp()) * (-t * (1.0 / y - 1.0)).exp() / y - (2.0 - (-t / y).exp())
    };
    let grid = log_grid(1e-8, 200.0, 400);
    let mut bracket = None;
    for w in grid.windows(2) {
        if g(w[0]) > 0.0 && g(w[1]) <= 0.0 {
            bracket = Some((w[0], w[1]));
            break;
        }
    }
    let Some((lo, hi)) = bracket else {
        return Ok(None);
    };
    let Some(tau_c) = bisect(g, lo, hi, 1e-13) else {
        return Ok(None);
    };
    let x_c = ((1.0 + y) / y) * (-tau_c * (1.0 / y - 1.0)).exp() - 1.0;
    if !(0.0 < x_c && x_c < 1.0) {
        return Ok(None);
    }
    // Defensive residual checks of both defining equations.
    let stationarity = (1.0 + x_c) * (-tau_c).exp() - ((1.0 + y) / y) * (-tau_c / y).exp();
    let tie = excited_distance(tau_c, x_c, y)? - (x_c - y);
    if stationarity.abs() > 1e-10 || tie.abs() > 1e-10 {
        return Ok(None);
    }
    Ok(Some(CriticalPoint { x_c, tau_c }))
}

/// Coefficients of the squared trace distance as a function of the
/// longitudinal input component `a = az(0)` at fixed `tau`:
/// `D^2(a) = (f_plus f_minus a + a_coeff)^2 + f_minus^2 (1 - a^2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParabolaCoeffs {
    /// `e^(-tau/2) - e^(-tau/(2y))`, the transverse decay difference.
    pub f_minus: f64,
    /// `e^(-tau/2) + e^(-tau/(2y))`.
    pub f_plus: f64,
    /// `A(tau) = -x (1 - e^-tau) + y (1 - e^(-tau/y))`, the longitudinal
    /// offset; its sign is the sign of the optimal input.
    pub a_coeff: f64,
}

/// Compute the input-parabola coefficients at time `tau` (`+inf` allowed,
/// where `f_minus = f_plus = 0` and `a_coeff = y - x`).
pub fn parabola_coeffs(tau: f64, x: f64, y: f64) -> Result<ParabolaCoeffs> {
    validate_tau(tau)?;
    validate_xy(x, y)?;
    if tau.is_infinite() {
        return Ok(ParabolaCoeffs {
            f_minus: 0.0,
            f_plus: 0.0,
            a_coeff: y - x,
        });
    }
    let em = |t: f64| -(-t).exp_m1();
    Ok(ParabolaCoeffs {
        f_minus: (-0.5 * tau).exp() - (-0.5 * tau / y).exp(),
        f_plus: (-0.5 * tau).exp() + (-0.5 * tau / y).exp(),
        a_coeff: -x * em(tau) + y * em(tau / y),
    })
}

/// Squared trace distance at time `tau` for the pure input with
/// longitudinal component `az0` (transverse on the xz great circle).
///
/// Evaluated in the manifestly nonnegative form
/// `(f+ f- a + A)^2 + f-^2 (1 - a^2)`; requires `|az0| <= 1`.
pub fn pure_input_distance_squared(tau: f64, x: f64, y: f64, az0: f64) -> Result<f64> {
    if !az0.is_finite() || az0.abs() > 1.0 {
        return Err(Error::UnphysicalBloch(az0 * az0));
    }
    let c = parabola_coeffs(tau, x, y)?;
    let lin = c.f_plus * c.f_minus * az0 + c.a_coeff;
    Ok(lin * lin + c.f_minus * c.f_minus * (1.0 - az0 * az0))
}

/// Which input/time configuration attained an optimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OptimalBranch {
    /// Interior vertex of the input parabola, `|az0| < 1`.
    Vertex,
    /// Pole input `az0 = +1` (excited).
    EndpointPlus,
    /// Pole input `az0 = -1` (ground).
    EndpointMinus,
    /// Waiting forever (`tau = +inf`); the input is then immaterial.
    SteadyState,
}

impl OptimalBranch {
    /// Stable lowercase label for serialization (`vertex`,
    /// `endpoint_plus`, `endpoint_minus`, `steady_state`).
    pub fn label(self) -> &'static str {
        match self {
            OptimalBranch::Vertex => "vertex",
            OptimalBranch::EndpointPlus => "endpoint_plus",
            OptimalBranch::EndpointMinus => "endpoint_minus",
            OptimalBranch::SteadyState => "steady_state",
        }
    }
}

/// Optimal pure input at a fixed time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InputOptimum {
    /// Longitudinal component of the best pure input.
    pub az0: f64,
    /// Squared trace distance it achieves.
    pub d_squared: f64,
    /// Vertex or pole classification.
    pub branch: OptimalBranch,
    /// True when the two pole inputs tie exactly (`A = 0`), in which case
    /// `az0 = +1` is reported by convention.
    pub degenerate: bool,
}

/// Best pure input at fixed finite `tau > 0`.
///
/// In `D^2(a) = f-^2 (f+^2 - 1) a^2 + 2 A f+ f- a + (f-^2 + A^2)` the
/// quadratic coefficient is negative exactly when `f+ < 1`. The maximum
/// over `a in [-1, 1]` is the interior vertex when the vertex condition
/// `(f-/f+)(1 - f+^2) > |A|` holds (this implies `f+ < 1`); the vertex is
///
/// ```text
///   a_bar = A f+ / (f- (1 - f+^2)),   D^2 = f-^2 + A^2/(1 - f+^2),
/// ```
///
/// otherwise it sits at the pole `a = sign(A)` with
/// `D^2 = (f+ f- + |A|)^2`. When `A = 0` and the vertex condition fails,
/// both poles tie exactly; `+1` is returned with the `degenerate` flag set.
///
/// Errors with [`Error::NonInteriorTime`] for `tau = 0` or `tau = inf`:
/// at `tau = 0` every input gives distance zero and at `tau = inf` every
/// input gives `|x - y|`, so "the" optimal input is undefined at both ends.
pub fn optimal_input_at_time(tau: f64, x: f64, y: f64) -> Result<InputOptimum> {
    validate_xy(x, y)?;
    validate_tau(tau)?;
    if tau == 0.0 || tau.is_infinite() {
        return Err(Error::NonInteriorTime(tau));
    }
    let c = parabola_coeffs(tau, x, y)?;
    let abs_a = c.a_coeff.abs();
    // f- > 0 for tau > 0 (the bosonic transverse decay is faster, so its
    // exponential is the smaller one); magnitudes keep the condition robust.
    let fm = c.f_minus.abs();
    let fp = c.f_plus;
    // 1 - f+^2 is negative at short times (f+ -> 2 as tau -> 0): the
    // parabola then opens upward and the condition below correctly fails.
    let open = 1.0 - fp * fp;
    if fm * open > fp * abs_a {
        let az0 = c.a_coeff * fp / (c.f_minus * open);
        let d_squared = fm * fm + c.a_coeff * c.a_coeff / open;
        Ok(InputOptimum {
            az0,
            d_squared,
            branch: OptimalBranch::Vertex,
            degenerate: false,
        })
    } else if c.a_coeff >= 0.0 {
        Ok(InputOptimum {
            az0: 1.0,
            d_squared: (fp * fm + abs_a).powi(2),
            branch: OptimalBranch::EndpointPlus,
            degenerate: c.a_coeff == 0.0,
        })
    } else {
        Ok(InputOptimum {
            az0: -1.0,
            d_squared: (fp * fm + abs_a).powi(2),
            branch: OptimalBranch::EndpointMinus,
            degenerate: false,
        })
    }
}

/// Jointly optimal probing strategy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizationResult {
    /// Optimal dimensionless interaction time (`+inf` for steady state).
    pub tau_bar: f64,
    /// Longitudinal component of the optimal pure input. On the
    /// steady-state branch the input is immaterial; the reported value is
    /// the pole toward which the limit `A(inf) = y - x` points.
    pub az0_bar: f64,
    /// Helstrom error probability achieved.
    pub h_bar: f64,
    /// Which configuration won.
    pub branch: OptimalBranch,
    /// True when finite-time and steady-state optima tie exactly, or when
    /// the winning input is degenerate (see [`InputOptimum::degenerate`]).
    pub degenerate: bool,
}

/// Maximize the trace distance jointly over the interaction time and the
/// pure input state.
///
/// Scans `tau` over 2000 log-spaced points in `[1e-3, 50]` of the inner
/// optimum [`optimal_input_at_time`], golden-refines the best bracket, and
/// compares against the steady-state limit `D = |x - y|`; a strictly larger
/// finite-time value wins, an exact tie reports the steady state with the
/// `degenerate` flag set.
pub fn full_optimize(x: f64, y: f64) -> Result<OptimizationResult> {
    validate_xy(x, y)?;
    let inner = |tau: f64| -> f64 {
        optimal_input_at_time(tau, x, y)
            .map(|o| o.d_squared)
            .unwrap_or(f64::NEG_INFINITY)
    };
    let grid = log_grid(TAU_SCAN_LO, TAU_SCAN_HI, TAU_SCAN_POINTS);
    let mut best_i = 0;
    let mut best_v = f64::NEG_INFINITY;
    for (i, &t) in grid.iter().enumerate() {
        let v = inner(t);
        if v > best_v {
            best_v = v;
            best_i = i;
        }
    }
    let lo = grid[best_i.saturating_sub(1)];
    let hi = grid[(best_i + 1).min(grid.len() - 1)];
    let (tau_ref, v_ref) = golden_max(inner, lo, hi, 1e-10);
    let (tau_fin, d2_fin) = if v_ref > best_v {
        (tau_ref, v_ref)
    } else {
        (grid[best_i], best_v)
    };

    let d2_inf = (x - y) * (x - y);
    if d2_fin > d2_inf {
        let opt = optimal_input_at_time(tau_fin, x, y)?;
        Ok(OptimizationResult {
            tau_bar: tau_fin,
            az0_bar: opt.az0,
            h_bar: 0.5 - 0.25 * opt.d_squared.sqrt(),
            branch: opt.branch,
            degenerate: opt.degenerate,
        })
    } else {
        Ok(OptimizationResult {
            tau_bar: f64::INFINITY,
            az0_bar: if y >= x { 1.0 } else { -1.0 },
            h_bar: 0.5 - 0.25 * (x - y).abs(),
            branch: OptimalBranch::SteadyState,
            degenerate: d2_fin == d2_inf,
        })
    }
}

/// Brute-force reference optimizer on an explicit product grid.
///
/// Evaluates `D^2` on `n_az >= 100` linear input points times
/// `n_tau >= 100` log-spaced times in `[1e-3, 50]` plus the steady-state
/// row, and returns the best cell (first maximum wins; the steady state
/// replaces a finite cell only when strictly better). Intended as an
/// independent cross-check of [`full_optimize`], accurate to one grid cell.
pub fn brute_force_optimize(x: f64, y: f64, n_az: usize, n_tau: usize) -> Result<OptimizationResult> {
    validate_xy(x, y)?;
    if n_az < 100 {
        return Err(Error::TooFewPoints {
            what: "input grid",
            min: 100,
            got: n_az,
        });
    }
    if n_tau < 100 {
        return Err(Error::TooFewPoints {
            what: "time grid",
            min: 100,
            got: n_tau,
        });
    }
    let az_grid = lin_grid(-1.0, 1.0, n_az);
    let tau_grid = log_grid(TAU_SCAN_LO, TAU_SCAN_HI, n_tau);
    let mut best = (f64::NEG_INFINITY, 0.0, 0.0); // (d2, tau, az)
    for &tau in &tau_grid {
        let c = parabola_coeffs(tau, x, y)?;
        let fpfm = c.f_plus * c.f_minus;
        let fm2 = c.f_minus * c.f_minus;
        for &a in &az_grid {
            let lin = fpfm * a + c.a_coeff;
            let d2 = lin * lin + fm2 * (1.0 - a * a);
            if d2 > best.0 {
                best = (d2, tau, a);
            }
        }
    }
    let d2_inf = (x - y) * (x - y);
    if d2_inf > best.0 {
        return Ok(OptimizationResult {
            tau_bar: f64::INFINITY,
            az0_bar: if y >= x { 1.0 } else { -1.0 },
            h_bar: 0.5 - 0.25 * (x - y).abs(),
            branch: OptimalBranch::SteadyState,
            degenerate: false,
        });
    }
    let (d2, tau_bar, az0_bar) = best;
    let branch = if az0_bar == 1.0 {
        OptimalBranch::EndpointPlus
    } else if az0_bar == -1.0 {
        OptimalBranch::EndpointMinus
    } else {
        OptimalBranch::Vertex
    };
    Ok(OptimizationResult {
        tau_bar,
        az0_bar,
        h_bar: 0.5 - 0.25 * d2.sqrt(),
        branch,
        degenerate: false,
    })
}

#[cfg(test)]
// Reference values below are written with every computed digit on purpose.
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn characteristic_times_reference_pair() {
        // x = 0.68, y = 0.41.
        let t = characteristic_times(0.68, 0.41).unwrap();
        assert_abs_diff_eq!(t.tau_2, 0.49783313967129508, epsilon = 1e-9);
        assert_abs_diff_eq!(t.tau_1.unwrap(), 1.7590219612587378, epsilon = 1e-9);
        assert!(t.tau_1.unwrap() > t.tau_2);
        // Distance and error probability at the extremum.
        let d = excited_distance(t.tau_2, 0.68, 0.41).unwrap();
        assert_abs_diff_eq!(d, 0.33249730398652556, epsilon = 1e-10);
        assert_abs_diff_eq!(0.5 - 0.25 * d, 0.41687567400336861, epsilon = 1e-10);
    }

    #[test]
    fn tau_2_matches_closed_form() {
        // tau_2 = y ln((1+y)/(y(1+x))) / (1-y), an independent closed form.
        for (x, y) in [(0.68, 0.41), (0.2, 0.5), (0.9, 0.5), (0.3, 0.7), (0.05, 0.95)] {
            let t = characteristic_times(x, y).unwrap();
            let closed = y * (((1.0 + y) / (y * (1.0 + x))).ln()) / (1.0 - y);
            assert_abs_diff_eq!(t.tau_2, closed, epsilon = 1e-10);
        }
    }

    #[test]
    fn crossing_time_exists_iff_hotter_fermionic_signal() {
        assert!(characteristic_times(0.2, 0.5).unwrap().tau_1.is_none());
        assert!(characteristic_times(0.5, 0.5).unwrap().tau_1.is_none());
        assert!(characteristic_times(0.51, 0.5).unwrap().tau_1.is_some());
        // Bath-pair presets (beta_b, beta_f, tau_1) at omega = 1.
        for (bb, bf, expect_t1) in [
            (0.5, 1.0, 1.9044258710693144),
            (0.5, 2.0, 1.2094354441617635),
            (1.0, 2.0, 1.6407635738507221),
        ] {
            let x = (bf / 2.0f64).tanh();
            let y = (bb / 2.0f64).tanh();
            let t = characteristic_times(x, y).unwrap();
            assert_abs_diff_eq!(t.tau_1.unwrap(), expect_t1, epsilon = 1e-9);
        }
    }

    #[test]
    fn characteristic_times_rejects_bad_domain() {
        assert!(matches!(characteristic_times(-0.1, 0.5), Err(Error::XOutOfRange(_))));
        assert!(matches!(characteristic_times(0.5, 1.0), Err(Error::YOutOfRange(_))));
        assert!(matches!(characteristic_times(0.5, 0.0), Err(Error::YOutOfRange(_))));
    }

    #[test]
    fn optimal_time_finite_branch() {
        // x = 0.6, y = 0.5: finite-time optimum wins.
        let (tau, h) = optimal_time_excited(0.6, 0.5).unwrap();
        assert!(tau.is_finite());
        assert_abs_diff_eq!(tau, 0.62860865942237414, epsilon = 1e-9);
        assert_abs_diff_eq!(h, 0.41833333333333333, epsilon = 1e-12);
    }

    #[test]
    fn optimal_time_steady_branch() {
        // x = 0.9, y = 0.5: waiting forever wins.
        let (tau, h) = optimal_time_excited(0.9, 0.5).unwrap();
        assert!(tau.is_infinite());
        assert_abs_diff_eq!(h, 0.4, epsilon = 1e-15);
    }

    #[test]
    fn optimal_time_equal_temperatures_is_finite() {
        // x = y: steady state is useless (D -> 0), finite time always wins.
        let (tau, h) = optimal_time_excited(0.46211715726000976, 0.46211715726000976).unwrap();
        assert!(tau.is_finite());
        assert!(h < 0.5);
    }

    #[test]
    fn critical_point_closed_form_y_half() {
        // y = 1/2: x_c = 5 - 3 sqrt(2) and tau_c = ln((sqrt(2)+1)/sqrt(2)).
        let cp = critical_point(0.5).unwrap().unwrap();
        let s = std::f64::consts::SQRT_2;
        assert_abs_diff_eq!(cp.x_c, 5.0 - 3.0 * s, epsilon = 1e-9);
        assert_abs_diff_eq!(cp.x_c, 0.75735931288071485, epsilon = 1e-9);
        assert_abs_diff_eq!(cp.tau_c, ((s + 1.0) / s).ln(), epsilon = 1e-9);
        assert_abs_diff_eq!(cp.tau_c, 0.53479999673957037, epsilon = 1e-9);
    }

    #[test]
    fn critical_point_reference_values() {
        let cp = critical_point(0.3).unwrap().unwrap();
        assert_abs_diff_eq!(cp.x_c, 0.69764698992885017, epsilon = 1e-9);
        assert_abs_diff_eq!(cp.tau_c, 0.40161167146558737, epsilon = 1e-9);
        let cp = critical_point(0.2).unwrap().unwrap();
        assert_abs_diff_eq!(cp.x_c, 0.69388722823789237, epsilon = 1e-9);
        assert_abs_diff_eq!(cp.tau_c, 0.31618336162557450, epsilon = 1e-9);
    }

    #[test]
    fn critical_point_separates_the_branches() {
        let y = 0.5;
        let cp = critical_point(y).unwrap().unwrap();
        // Just below the curve the finite branch wins; just above, steady.
        let (t_lo, _) = optimal_time_excited(cp.x_c - 1e-4, y).unwrap();
        let (t_hi, _) = optimal_time_excited(cp.x_c + 1e-4, y).unwrap();
        assert!(t_lo.is_finite());
        assert!(t_hi.is_infinite());
    }

    #[test]
    fn critical_point_rejects_bad_domain() {
        assert!(critical_point(0.0).is_err());
        assert!(critical_point(1.0).is_err());
    }

    #[test]
    fn parabola_coefficients_reference_values() {
        // tau = 1, x = 0.68, y = 0.41.
        let c = parabola_coeffs(1.0, 0.68, 0.41).unwrap();
        assert_abs_diff_eq!(c.f_minus, 0.31115644294179397, epsilon = 1e-12);
        assert_abs_diff_eq!(c.f_plus, 0.90190487648347287, epsilon = 1e-12);
        assert_abs_diff_eq!(c.a_coeff, -0.055612810455943831, epsilon = 1e-12);
    }

    #[test]
    fn parabola_coefficients_limits() {
        let c0 = parabola_coeffs(0.0, 0.68, 0.41).unwrap();
        assert_eq!((c0.f_minus, c0.f_plus, c0.a_coeff), (0.0, 2.0, 0.0));
        let ci = parabola_coeffs(f64::INFINITY, 0.68, 0.41).unwrap();
        assert_eq!((ci.f_minus, ci.f_plus), (0.0, 0.0));
        assert_abs_diff_eq!(ci.a_coeff, 0.41 - 0.68, epsilon = 1e-15);
    }

    #[test]
    fn distance_squared_consistency_with_excited_closed_form() {
        for tau in [0.1, 0.5, 1.0, 3.0, 10.0, f64::INFINITY] {
            let d2 = pure_input_distance_squared(tau, 0.68, 0.41, 1.0).unwrap();
            let d = excited_distance(tau, 0.68, 0.41).unwrap();
            assert_abs_diff_eq!(d2, d * d, epsilon = 1e-14);
        }
    }

    #[test]
    fn optimal_input_vertex_reference_value() {
        // tau = 1, x = 0.68, y = 0.41: interior vertex.
        let o = optimal_input_at_time(1.0, 0.68, 0.41).unwrap();
        assert_eq!(o.branch, OptimalBranch::Vertex);
        assert!(!o.degenerate);
        assert_abs_diff_eq!(o.az0, -0.86401358273648094, epsilon = 1e-9);
        assert_abs_diff_eq!(o.d_squared, 0.11339561973402885, epsilon = 1e-12);
    }

    #[test]
    fn optimal_input_vertex_beats_dense_scan() {
        // Independent check: the reported optimum dominates a dense scan.
        let o = optimal_input_at_time(1.0, 0.68, 0.41).unwrap();
        let mut best = (f64::NEG_INFINITY, 0.0);
        for &a in lin_grid(-1.0, 1.0, 2001).iter() {
            let d2 = pure_input_distance_squared(1.0, 0.68, 0.41, a).unwrap();
            if d2 > best.0 {
                best = (d2, a);
            }
        }
        assert!(o.d_squared >= best.0 - 1e-12);
        assert_abs_diff_eq!(o.az0, best.1, epsilon = 2e-3); // within one grid cell
    }

    #[test]
    fn optimal_input_endpoint_at_short_times() {
        // Short times leave the vertex outside [-1, 1]: pole input wins.
        let o = optimal_input_at_time(0.05, 0.3, 0.5).unwrap();
        assert_eq!(o.branch, OptimalBranch::EndpointPlus);
        assert_eq!(o.az0, 1.0);
        // Confirm by scan.
        let mut best = f64::NEG_INFINITY;
        for &a in lin_grid(-1.0, 1.0, 2001).iter() {
            best = best.max(pure_input_distance_squared(0.05, 0.3, 0.5, a).unwrap());
        }
        assert_abs_diff_eq!(o.d_squared, best, epsilon = 1e-12);
    }

    #[test]
    fn optimal_input_rejects_non_interior_times() {
        assert!(matches!(
            optimal_input_at_time(0.0, 0.3, 0.5),
            Err(Error::NonInteriorTime(_))
        ));
        assert!(matches!(
            optimal_input_at_time(f64::INFINITY, 0.3, 0.5),
            Err(Error::NonInteriorTime(_))
        ));
    }

    #[test]
    fn full_optimize_reference_point() {
        // x = 0.68, y = 0.41.
        let r = full_optimize(0.68, 0.41).unwrap();
        assert_eq!(r.branch, OptimalBranch::Vertex);
        assert_abs_diff_eq!(r.tau_bar, 1.5535944699218710, epsilon = 1e-6);
        assert_abs_diff_eq!(r.az0_bar, -0.42557701905875475, epsilon = 1e-6);
        assert_abs_diff_eq!(r.h_bar, 0.41160123745079473, epsilon = 1e-12);
    }

    #[test]
    fn full_optimize_prefers_finite_time_where_excited_does_not() {
        // x = 0.9, y = 0.5: the excited protocol waits forever, but input
        // optimization recovers a finite-time optimum.
        let r = full_optimize(0.9, 0.5).unwrap();
        assert_eq!(r.branch, OptimalBranch::Vertex);
        assert_abs_diff_eq!(r.tau_bar, 2.7051898744772987, epsilon = 1e-5);
        assert_abs_diff_eq!(r.az0_bar, -0.64942188053240821, epsilon = 1e-6);
        assert_abs_diff_eq!(r.h_bar, 0.39764669014982616, epsilon = 1e-12);
        let (tau_exc, h_exc) = optimal_time_excited(0.9, 0.5).unwrap();
        assert!(tau_exc.is_infinite());
        assert!(r.h_bar < h_exc);
    }

    #[test]
    fn full_optimize_endpoint_branch() {
        // x = 0.2, y = 0.8: excited pole input is optimal.
        let r = full_optimize(0.2, 0.8).unwrap();
        assert_eq!(r.branch, OptimalBranch::EndpointPlus);
        assert_eq!(r.az0_bar, 1.0);
        assert_abs_diff_eq!(r.tau_bar, 2.5144346376894966, epsilon = 1e-5);
        assert_abs_diff_eq!(r.h_bar, 0.34514548148148148, epsilon = 1e-12);
    }

    #[test]
    fn full_optimize_equal_temperatures_reduces_to_excited_protocol() {
        let x = 0.24491866240370913; // tanh(0.25)
        let r = full_optimize(x, x).unwrap();
        assert_eq!(r.branch, OptimalBranch::EndpointPlus);
        assert_eq!(r.az0_bar, 1.0);
        let (tau_exc, h_exc) = optimal_time_excited(x, x).unwrap();
        assert_abs_diff_eq!(r.tau_bar, tau_exc, epsilon = 1e-6);
        assert_abs_diff_eq!(r.tau_bar, 0.45631998516404025, epsilon = 1e-6);
        assert_abs_diff_eq!(r.h_bar, h_exc, epsilon = 1e-12);
        assert_abs_diff_eq!(r.h_bar, 0.35109904915612076, epsilon = 1e-12);
    }

    #[test]
    fn full_optimize_sign_rule() {
        // Optimal input points along the sign of A(tau_bar).
        for (x, y) in [(0.3, 0.6), (0.68, 0.41), (0.1, 0.9), (0.85, 0.3)] {
            let r = full_optimize(x, y).unwrap();
            if r.branch == OptimalBranch::SteadyState {
                continue;
            }
            let a = parabola_coeffs(r.tau_bar, x, y).unwrap().a_coeff;
            if a != 0.0 {
                assert_eq!(r.az0_bar.signum(), a.signum(), "at ({x}, {y})");
            }
        }
    }

    #[test]
    fn brute_force_agrees_with_full_optimize() {
        for (x, y) in [(0.68, 0.41), (0.2, 0.8), (0.9, 0.5)] {
            let full = full_optimize(x, y).unwrap();
            let brute = brute_force_optimize(x, y, 201, 400).unwrap();
            assert_eq!(full.branch == OptimalBranch::SteadyState,
                       brute.branch == OptimalBranch::SteadyState);
            assert_abs_diff_eq!(full.h_bar, brute.h_bar, epsilon = 1e-4);
            if full.tau_bar.is_finite() {
                assert_abs_diff_eq!(full.tau_bar, brute.tau_bar, epsilon = 0.1);
                assert_abs_diff_eq!(full.az0_bar, brute.az0_bar, epsilon = 0.02);
            }
        }
    }

    #[test]
    fn brute_force_rejects_small_grids() {
        assert!(matches!(
            brute_force_optimize(0.5, 0.5, 99, 400),
            Err(Error::TooFewPoints { .. })
        ));
        assert!(matches!(
            brute_force_optimize(0.5, 0.5, 201, 99),
            Err(Error::TooFewPoints { .. })
        ));
    }
}
