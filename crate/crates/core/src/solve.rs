//! Scalar root bracketing/bisection and golden-section line search.
//!
//! These are deliberately simple, derivative-free routines: every caller in
//! this crate has cheap objectives and known bracket structure, so robustness
//! beats sophistication.

/// Inverse golden ratio, `(sqrt(5) - 1) / 2`.
const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Find a root of `f` on `[lo, hi]` by bisection.
///
/// Requires `f(lo)` and `f(hi)` to have opposite signs (a zero at either end
/// is returned immediately). Shrinks the bracket until its width is at most
/// `tol` or float resolution is reached, then returns the bracket midpoint.
/// Returns `None` when the endpoints do not bracket a sign change.
pub fn bisect<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Option<f64> {
    let (mut lo, mut hi) = (lo, hi);
    let flo = f(lo);
    if flo == 0.0 {
        return Some(lo);
    }
    let fhi = f(hi);
    if fhi == 0.0 {
        return Some(hi);
    }
    if !(flo.is_finite() && fhi.is_finite()) || flo.signum() == fhi.signum() {
        return None;
    }
    let neg_lo = flo < 0.0;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // bracket already at float resolution
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Some(mid);
        }
        if (fm < 0.0) == neg_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Minimize a unimodal `f` on `[a, b]` by golden-section search.
///
/// The bracket is narrowed until its width is at most `tol`; the midpoint of
/// the final bracket is returned (function values near a smooth minimum are
/// too flat to compare more finely than `sqrt(eps)`, but the bracket itself
/// localizes the minimizer to `tol`). As a guard against mild
/// non-unimodality, the best point evaluated along the way wins when it is
/// strictly better than the midpoint. Returns `(x, f(x))`.
pub fn golden_min<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> (f64, f64) {
    let (mut a, mut b) = (a, b);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    let mut best = if fc <= fd { (c, fc) } else { (d, fd) };
    // 2000 iterations shrink any bracket below f64 resolution; the width test
    // is the real stopping rule.
    for _ in 0..2000 {
        if (b - a).abs() <= tol {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
        let (x, fx) = if fc <= fd { (c, fc) } else { (d, fd) };
        if fx < best.1 {
            best = (x, fx);
        }
    }
    let mid = 0.5 * (a + b);
    let fmid = f(mid);
    if fmid <= best.1 {
        (mid, fmid)
    } else {
        best
    }
}

/// Maximize a unimodal `f` on `[a, b]`; returns `(x, f(x))`.
pub fn golden_max<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> (f64, f64) {
    let (x, neg) = golden_min(|t| -f(t), a, b, tol);
    (x, -neg)
}

/// `n` logarithmically spaced points from `lo` to `hi` inclusive.
///
/// Requires `0 < lo <= hi` and `n >= 2`; endpoints are exact.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2 && lo > 0.0 && hi >= lo);
    let (llo, lhi) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| {
            if i == 0 {
                lo
            } else if i == n - 1 {
                hi
            } else {
                (llo + (lhi - llo) * i as f64 / (n - 1) as f64).exp()
            }
        })
        .collect()
}

/// `n` linearly spaced points from `lo` to `hi` inclusive; endpoints exact.
pub fn lin_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2 && hi >= lo);
    (0..n)
        .map(|i| {
            if i == n - 1 {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

/// Maximize `f` by scanning `grid` and then golden-refining around the best
/// grid cell. Returns `(x, f(x))` for the best point found overall.
///
/// `grid` must be sorted ascending with at least two points.
pub fn scan_then_refine_max<F: Fn(f64) -> f64>(f: F, grid: &[f64], tol: f64) -> (f64, f64) {
    assert!(grid.len() >= 2);
    let mut best_i = 0;
    let mut best_v = f64::NEG_INFINITY;
    for (i, &t) in grid.iter().enumerate() {
        let v = f(t);
        if v > best_v {
            best_v = v;
            best_i = i;
        }
    }
    let lo = grid[best_i.saturating_sub(1)];
    let hi = grid[(best_i + 1).min(grid.len() - 1)];
    let (x, v) = golden_max(&f, lo, hi, tol);
    if v > best_v {
        (x, v)
    } else {
        (grid[best_i], best_v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn bisect_finds_cosine_root() {
        let r = bisect(|t| t.cos(), 0.0, 3.0, 1e-14).unwrap();
        assert_abs_diff_eq!(r, std::f64::consts::FRAC_PI_2, epsilon = 1e-12);
    }

    #[test]
    fn bisect_handles_decreasing_functions() {
        let r = bisect(|t| 1.0 - t, 0.0, 5.0, 1e-13).unwrap();
        assert_abs_diff_eq!(r, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn bisect_rejects_unbracketed_interval() {
        assert!(bisect(|t| t * t + 1.0, -1.0, 1.0, 1e-12).is_none());
    }

    #[test]
    fn bisect_returns_exact_endpoint_roots() {
        assert_eq!(bisect(|t| t, 0.0, 1.0, 1e-12), Some(0.0));
    }

    #[test]
    fn golden_min_quadratic() {
        // Localization of a smooth minimum is limited to ~sqrt(ulp(f)/f''):
        // test to 1e-7, far inside every downstream tolerance.
        let (x, fx) = golden_min(|t| (t - 1.3).powi(2) + 0.25, -4.0, 6.0, 1e-11);
        assert_abs_diff_eq!(x, 1.3, epsilon = 1e-7);
        assert_abs_diff_eq!(fx, 0.25, epsilon = 1e-14);
    }

    #[test]
    fn golden_max_concave() {
        let (x, fx) = golden_max(|t| -(t + 0.5).powi(2) + 2.0, -3.0, 3.0, 1e-11);
        assert_abs_diff_eq!(x, -0.5, epsilon = 1e-7);
        assert_abs_diff_eq!(fx, 2.0, epsilon = 1e-14);
    }

    #[test]
    fn grids_have_exact_endpoints_and_order() {
        let g = log_grid(1e-3, 50.0, 2000);
        assert_eq!(g.len(), 2000);
        assert_eq!(g[0], 1e-3);
        assert_eq!(g[1999], 50.0);
        assert!(g.windows(2).all(|w| w[1] > w[0]));

        let l = lin_grid(-1.0, 1.0, 101);
        assert_eq!(l[0], -1.0);
        assert_eq!(l[100], 1.0);
        assert_abs_diff_eq!(l[50], 0.0, epsilon = 1e-15);
        assert!(l.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn scan_then_refine_max_beats_plain_scan() {
        let f = |t: f64| -(t - 0.777).powi(2);
        let grid = lin_grid(0.0, 2.0, 21);
        let (x, _) = scan_then_refine_max(f, &grid, 1e-12);
        assert_abs_diff_eq!(x, 0.777, epsilon = 1e-9);
    }
}
