//! Discrimination of bosonic vs fermionic thermal baths with a single-qubit probe.
//!
//! A qubit coupled to a thermal bath relaxes toward the bath's Gibbs state at a
//! rate set by the bath statistics. Because a bosonic and a fermionic bath at
//! given (generally different) temperatures drive the probe differently, reading
//! the probe out after a finite interaction time reveals which bath it touched.
//! This crate computes how well that works and how to do it best:
//!
//! - [`dynamics`]: bath occupation numbers, relaxation rates, the closed-form
//!   Bloch-vector relaxation, a fixed-step integrator used as an independent
//!   cross-check, and the equivalent generalized-amplitude-damping channel.
//! - [`density`]: 2x2 density matrices, their spectral decomposition, and
//!   trace norms of Hermitian matrices (any dimension).
//! - [`distinguishability`]: trace distance, Helstrom minimal error probability,
//!   the quantum Chernoff bound, and multi-copy Helstrom error.
//! - [`optimize`]: characteristic times of the excited-probe protocol, the
//!   critical curve separating finite-time from infinite-time optima, and the
//!   joint optimization of interaction time and initial probe state.
//! - [`bayes`]: Bayesian two-hypothesis discrimination from repeated probe
//!   readouts, both in expectation (ideal error probability) and by seeded
//!   Monte Carlo simulation.
//! - [`solve`]: bisection and golden-section search used throughout.
//! - [`rng`]: a counter-based deterministic uniform generator for simulations.
//!
//! Working variables throughout: `x = tanh(beta_f * omega / 2)` and
//! `y = tanh(beta_b * omega / 2)` encode the fermionic/bosonic inverse
//! temperatures; time is measured in units of the bare coupling rate `gamma`
//! (i.e. `tau = gamma * t`), so `gamma` never appears in dimensionless results.

pub mod bayes;
pub mod density;
pub mod distinguishability;
pub mod dynamics;
mod error;
pub mod optimize;
pub mod rng;
pub mod solve;

pub use bayes::{
    ideal_delta, outcome_probabilities, posteriors, simulate_and_decide, Counts, Decision,
    OutcomeModel, Tally, TrialRecord,
};
pub use density::{DensityMatrix2, Eigen2};
pub use distinguishability::{
    bloch_trace_distance, chernoff, chernoff_at, excited_distance, helstrom,
    multi_copy_helstrom, ChernoffResult, DiscriminationPair,
};
pub use dynamics::{
    evolve, gad_channel, ode_evolve, BathSpec, BathStatistics, BlochVector, GadChannelParams,
    RelaxationParams,
};
pub use error::Error;
pub use optimize::{
    brute_force_optimize, characteristic_times, critical_point, full_optimize,
    optimal_input_at_time, optimal_time_excited, parabola_coeffs, pure_input_distance_squared,
    CharacteristicTimes, CriticalPoint, InputOptimum, OptimalBranch, OptimizationResult,
    ParabolaCoeffs,
};

/// Convenient result alias for fallible operations in this crate.
pub type Result<T> = std::result::Result<T, Error>;
