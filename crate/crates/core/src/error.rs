use thiserror::Error;

/// Errors raised by domain validation and numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// `beta * omega` must be finite and nonnegative.
    #[error("beta*omega must be a finite nonnegative number (got {0})")]
    InvalidBetaOmega(f64),

    /// A bosonic bath at infinite temperature has a divergent occupation
    /// number, so `beta * omega = 0` is rejected for bosonic baths.
    #[error("bosonic bath requires beta*omega > 0 (got {0}); occupation diverges at zero")]
    BosonicInfiniteTemperature(f64),

    /// A Bloch vector must fit inside the unit ball.
    #[error("Bloch vector of squared length {0} lies outside the unit ball")]
    UnphysicalBloch(f64),

    /// Interaction times must be nonnegative (NaN is rejected; +infinity is
    /// accepted where documented).
    #[error("time must be a nonnegative number (got {0})")]
    InvalidTime(f64),

    /// The fixed-step integrator needs enough steps to be meaningful.
    #[error("integrator requires at least 10 steps (got {0})")]
    TooFewSteps(usize),

    /// A matrix handed in as a density matrix failed validation.
    #[error("not a valid density matrix: {0}")]
    InvalidDensityMatrix(&'static str),

    /// The fermionic temperature variable `x = tanh(beta_f*omega/2)` must lie
    /// in `[0, 1)`.
    #[error("x must lie in [0, 1) (got {0})")]
    XOutOfRange(f64),

    /// The bosonic temperature variable `y = tanh(beta_b*omega/2)` must lie in
    /// `(0, 1)`; `y = 0` means infinite bosonic temperature (divergent rates)
    /// and `y = 1` makes both relaxation rates coincide.
    #[error("y must lie in (0, 1) (got {0})")]
    YOutOfRange(f64),

    /// Coupling rates must be positive and finite.
    #[error("gamma must be a positive finite number (got {0})")]
    InvalidGamma(f64),

    /// Tensor powers are capped to keep the dense matrices tractable.
    #[error("copy count must lie in 1..={max} (got {got})")]
    CopyCountOutOfRange { got: usize, max: usize },

    /// Optimizing the input state needs an interior time `0 < tau < inf`.
    #[error("input optimization needs a finite positive time (got {0})")]
    NonInteriorTime(f64),

    /// Measurement counts must be nonnegative, finite, and not all zero.
    #[error("counts must be finite, nonnegative, and of positive total")]
    InvalidCounts,

    /// A prior probability must lie in `[0, 1]`.
    #[error("prior must lie in [0, 1] (got {0})")]
    InvalidPrior(f64),

    /// A two-outcome model must consist of nonnegative probabilities
    /// summing to one.
    #[error("outcome probabilities must be nonnegative and sum to 1 (got {p0}, {p1})")]
    InvalidOutcomeModel { p0: f64, p1: f64 },

    /// The observed data has zero likelihood under both hypotheses, so the
    /// posterior is undefined.
    #[error("data impossible under both hypotheses; posterior undefined")]
    UndecidablePosterior,

    /// A grid or repetition count was too small for the requested routine.
    #[error("{what} must be at least {min} (got {got})")]
    TooFewPoints {
        what: &'static str,
        min: usize,
        got: usize,
    },
}
