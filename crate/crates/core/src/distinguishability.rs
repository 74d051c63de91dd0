//! State distinguishability measures for the bath-discrimination problem.
//!
//! Given the two candidate baths (bosonic at `beta_b`, fermionic at
//! `beta_f`), preparing the probe in `a0` and letting it relax for `tau`
//! yields one of two qubit states. With equal priors, the best single-shot
//! measurement errs with the Helstrom probability
//!
//! ```text
//!   H = 1/2 - |rho_b - rho_f|_1 / 4,
//! ```
//!
//! and for qubits the trace norm is simply the Euclidean distance of Bloch
//! vectors. The quantum Chernoff bound `Q = min_{r in [0,1]} Tr[rho_b^r
//! rho_f^(1-r)]` governs the large-copy-number error exponent, and the
//! multi-copy Helstrom error uses `n`-fold tensor powers directly.

use crate::density::{kron_power, trace_norm_hermitian, DensityMatrix2};
use crate::dynamics::{evolve, validate_tau, BathSpec, BlochVector};
use crate::error::Error;
use crate::solve::{golden_min, lin_grid};
use crate::Result;

/// Largest tensor power supported by [`multi_copy_helstrom`]; the dense
/// embedded eigenproblem is `2^(n+1) x 2^(n+1)`.
pub const MAX_COPIES: usize = 8;

/// Eigenvalues below this are treated as exact zeros in the Chernoff
/// objective (support convention: `0^r = 0` for all `r`, including `r = 0`).
const EIGENVALUE_FLOOR: f64 = 1e-14;

/// Trace distance between two qubit states, `|rho1 - rho2|_1`, computed as
/// the Euclidean distance of their Bloch vectors.
pub fn bloch_trace_distance(a1: &BlochVector, a2: &BlochVector) -> f64 {
    a1.distance(a2)
}

/// The discrimination problem: a fermionic and a bosonic candidate bath at
/// the same probe frequency, plus the bare coupling rate `gamma`.
///
/// The temperature variables `x = tanh(beta_f omega / 2) in [0, 1)` and
/// `y = tanh(beta_b omega / 2) in (0, 1)` determine every dimensionless
/// quantity; `gamma` only sets the physical time unit `tau = gamma t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscriminationPair {
    fermionic: BathSpec,
    bosonic: BathSpec,
    gamma: f64,
    x: f64,
    y: f64,
}

impl DiscriminationPair {
    /// Build from the inverse-temperature combinations
    /// `beta_f_omega = beta_f * omega` and `beta_b_omega = beta_b * omega`.
    ///
    /// `beta_f_omega` may be zero (infinite fermionic temperature, `x = 0`);
    /// `beta_b_omega` must be positive. `gamma` defaults to 1.
    pub fn from_betas(beta_f_omega: f64, beta_b_omega: f64) -> Result<Self> {
        let fermionic = BathSpec::fermionic(beta_f_omega)?;
        let bosonic = BathSpec::bosonic(beta_b_omega)?;
        let x = fermionic.tanh_half();
        let y = bosonic.tanh_half();
        if !(0.0..1.0).contains(&x) {
            return Err(Error::XOutOfRange(x));
        }
        if !(y > 0.0 && y < 1.0) {
            return Err(Error::YOutOfRange(y));
        }
        Ok(Self {
            fermionic,
            bosonic,
            gamma: 1.0,
            x,
            y,
        })
    }

    /// Build directly from the temperature variables `x in [0, 1)` and
    /// `y in (0, 1)`.
    pub fn from_xy(x: f64, y: f64) -> Result<Self> {
        if !x.is_finite() || !(0.0..1.0).contains(&x) {
            return Err(Error::XOutOfRange(x));
        }
        if !y.is_finite() || !(y > 0.0 && y < 1.0) {
            return Err(Error::YOutOfRange(y));
        }
        let fermionic = BathSpec::fermionic(2.0 * x.atanh())?;
        let bosonic = BathSpec::bosonic(2.0 * y.atanh())?;
        Ok(Self {
            fermionic,
            bosonic,
            gamma: 1.0,
            x,
            y,
        })
    }

    /// Replace the coupling rate (positive and finite).
    pub fn with_gamma(mut self, gamma: f64) -> Result<Self> {
        if !gamma.is_finite() || gamma <= 0.0 {
            return Err(Error::InvalidGamma(gamma));
        }
        self.gamma = gamma;
        Ok(self)
    }

    /// The fermionic candidate bath.
    pub fn fermionic(&self) -> &BathSpec {
        &self.fermionic
    }

    /// The bosonic candidate bath.
    pub fn bosonic(&self) -> &BathSpec {
        &self.bosonic
    }

    /// Bare coupling rate `gamma`.
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Fermionic temperature variable `x = tanh(beta_f omega / 2)`.
    pub fn x(&self) -> f64 {
        self.x
    }

    /// Bosonic temperature variable `y = tanh(beta_b omega / 2)`.
    pub fn y(&self) -> f64 {
        self.y
    }

    /// The pair of evolved states at dimensionless time `tau` from input
    /// `a0`: `(under bosonic, under fermionic)`.
    pub fn evolved(&self, a0: &BlochVector, tau: f64) -> Result<(BlochVector, BlochVector)> {
        Ok((evolve(a0, &self.bosonic, tau)?, evolve(a0, &self.fermionic, tau)?))
    }
}

/// Helstrom minimal error probability for equal priors after preparing `a0`
/// and waiting a dimensionless time `tau`:
/// `H = 1/2 - |rho_b(tau) - rho_f(tau)|_1 / 4 in [1/4, 1/2]` for qubit pairs
/// (and `>= 0` in general).
pub fn helstrom(a0: &BlochVector, pair: &DiscriminationPair, tau: f64) -> Result<f64> {
    let (ab, af) = pair.evolved(a0, tau)?;
    Ok(0.5 - 0.25 * bloch_trace_distance(&ab, &af))
}

/// Trace distance of the two evolved states for the excited input, in the
/// closed form
/// `D(tau) = |(1 + x)(1 - e^-tau) - (1 + y)(1 - e^(-tau/y))|`.
///
/// Accepts `tau = +inf`, where `D = |x - y|`.
pub fn excited_distance(tau: f64, x: f64, y: f64) -> Result<f64> {
    validate_tau(tau)?;
    if !x.is_finite() || !(0.0..1.0).contains(&x) {
        return Err(Error::XOutOfRange(x));
    }
    if !y.is_finite() || !(y > 0.0 && y < 1.0) {
        return Err(Error::YOutOfRange(y));
    }
    // -expm1(-t) = 1 - e^-t, exact at t = inf and accurate for small t.
    let em = |t: f64| -(-t).exp_m1();
    Ok(((1.0 + x) * em(tau) - (1.0 + y) * em(tau / y)).abs())
}

/// Result of the quantum Chernoff minimization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChernoffResult {
    /// `Q = min_r Tr[rho_b^r rho_f^(1-r)]`, clamped to `[0, 1]`.
    pub q_value: f64,
    /// Minimizing exponent `r in [0, 1]`.
    pub r_star: f64,
}

/// Quantum Chernoff quantity `Q = min_{r in [0,1]} Tr[rho_b^r rho_f^(1-r)]`.
///
/// Works in the spectral decompositions: with `rho_b = sum_i bi |ui><ui|`
/// and `rho_f = sum_j fj |vj><vj|`,
/// `Tr[rho_b^r rho_f^(1-r)] = sum_ij bi^r fj^(1-r) |<ui|vj>|^2`.
/// Eigenvalues below `1e-14` are set to zero and contribute nothing for any
/// `r` (support convention), which makes the objective continuous at the
/// boundary `r in {0, 1}` for non-full-rank states.
///
/// The minimization scans 1001 equally spaced exponents and golden-refines
/// the best bracket to `1e-10`.
pub fn chernoff(rho_b: &DensityMatrix2, rho_f: &DensityMatrix2) -> ChernoffResult {
    let eb = rho_b.eigen_system();
    let ef = rho_f.eigen_system();
    let clean = |v: f64| if v < EIGENVALUE_FLOOR { 0.0 } else { v };
    let b = [clean(eb.values[0]), clean(eb.values[1])];
    let f = [clean(ef.values[0]), clean(ef.values[1])];
    let mut w = [[0.0; 2]; 2];
    for (i, ub) in eb.vectors.iter().enumerate() {
        for (j, vf) in ef.vectors.iter().enumerate() {
            let dot = ub[0].conj() * vf[0] + ub[1].conj() * vf[1];
            w[i][j] = dot.norm_sqr();
        }
    }
    let pw = |lam: f64, e: f64| if lam == 0.0 { 0.0 } else { lam.powf(e) };
    let objective = |r: f64| {
        let mut s = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                if w[i][j] != 0.0 {
                    s += w[i][j] * pw(b[i], r) * pw(f[j], 1.0 - r);
                }
            }
        }
        s
    };

    let grid = lin_grid(0.0, 1.0, 1001);
    let mut best_i = 0;
    let mut best_v = f64::INFINITY;
    for (i, &r) in grid.iter().enumerate() {
        let v = objective(r);
        if v < best_v {
            best_v = v;
            best_i = i;
        }
    }
    let lo = grid[best_i.saturating_sub(1)];
    let hi = grid[(best_i + 1).min(grid.len() - 1)];
    let (mut r_star, mut q) = golden_min(objective, lo, hi, 1e-10);
    if best_v < q {
        r_star = grid[best_i];
        q = best_v;
    }
    ChernoffResult {
        q_value: q.clamp(0.0, 1.0),
        r_star: r_star.clamp(0.0, 1.0),
    }
}

/// Chernoff quantity for the bath pair at time `tau` from input `a0`.
pub fn chernoff_at(a0: &BlochVector, pair: &DiscriminationPair, tau: f64) -> Result<ChernoffResult> {
    let (ab, af) = pair.evolved(a0, tau)?;
    Ok(chernoff(
        &DensityMatrix2::from_bloch(&ab),
        &DensityMatrix2::from_bloch(&af),
    ))
}

/// Helstrom error probability when `n` identically prepared probes are
/// measured jointly: `H_n = 1/2 - |rho_b^(x n) - rho_f^(x n)|_1 / 4`.
///
/// `n` must lie in `1..=8` (the embedded eigenproblem is dense,
/// `2^(n+1) x 2^(n+1)`). Satisfies `H_1 = ` [`helstrom`] and the Chernoff
/// bound `H_n <= Q^n / 2`.
pub fn multi_copy_helstrom(
    a0: &BlochVector,
    pair: &DiscriminationPair,
    tau: f64,
    n: usize,
) -> Result<f64> {
    if n == 0 || n > MAX_COPIES {
        return Err(Error::CopyCountOutOfRange {
            got: n,
            max: MAX_COPIES,
        });
    }
    let (ab, af) = pair.evolved(a0, tau)?;
    let rb = DensityMatrix2::from_bloch(&ab).to_dmatrix();
    let rf = DensityMatrix2::from_bloch(&af).to_dmatrix();
    let diff = kron_power(&rb, n) - kron_power(&rf, n);
    Ok(0.5 - 0.25 * trace_norm_hermitian(&diff))
}
