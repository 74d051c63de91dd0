//! Bayesian discrimination of the two baths from repeated probe readouts.
//!
//! Protocol: prepare the probe in `a0`, let it relax for `tau`, measure in
//! the energy basis, repeat `N` times, and pick the bath with the larger
//! posterior given the observed excited/ground counts. Because both
//! hypotheses produce Bernoulli outcomes, the whole experiment reduces to
//! two-outcome statistics: `P(excited) = (1 + az(tau))/2` under each bath.
//!
//! Two companion quantities are computed without sampling:
//!
//! - [`ideal_delta`]: the error probability of the Bayesian decision when
//!   the observed counts equal their exact expectations under the true bath
//!   (evaluated at fractional counts), averaged over the two hypotheses.
//! - its rescaled form `1/2 (2 delta)^(1/N)`, which stays resolvable at
//!   large `N` where `delta` itself underflows any fixed color scale.
//!
//! [`simulate_and_decide`] runs the actual Monte Carlo experiment with the
//! deterministic counter generator from [`crate::rng`].

use crate::distinguishability::DiscriminationPair;
use crate::dynamics::{evolve, BlochVector};
use crate::error::Error;
use crate::rng::counter_uniform;
use crate::Result;

/// Two-outcome measurement statistics of the relaxed probe under one bath.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutcomeModel {
    /// Probability of the ground outcome.
    pub p_ground: f64,
    /// Probability of the excited outcome.
    pub p_excited: f64,
}

impl OutcomeModel {
    /// Build from explicit probabilities; they must be nonnegative and sum
    /// to 1 within `1e-12` (the pair is renormalized exactly afterwards).
    pub fn new(p_ground: f64, p_excited: f64) -> Result<Self> {
        if !p_ground.is_finite()
            || !p_excited.is_finite()
            || p_ground < 0.0
            || p_excited < 0.0
            || (p_ground + p_excited - 1.0).abs() > 1e-12
        {
            return Err(Error::InvalidOutcomeModel {
                p0: p_ground,
                p1: p_excited,
            });
        }
        let total = p_ground + p_excited;
        Ok(Self {
            p_ground: p_ground / total,
            p_excited: p_excited / total,
        })
    }
}

/// Measurement statistics after preparing `a0` and relaxing for `tau` in
/// the given bath: `P(excited) = (1 + az(tau))/2`.
pub fn outcome_probabilities(
    bath: &crate::dynamics::BathSpec,
    a0: &BlochVector,
    tau: f64,
) -> Result<OutcomeModel> {
    let a = evolve(a0, bath, tau)?;
    let p_excited = 0.5 * (1.0 + a.az);
    OutcomeModel::new(1.0 - p_excited, p_excited)
}

/// Observed (possibly fractional) outcome counts.
///
/// Fractional counts arise when evaluating the decision rule at exact
/// expectations; simulated experiments produce integers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Counts {
    /// Ground-outcome count.
    pub n_ground: f64,
    /// Excited-outcome count.
    pub n_excited: f64,
}

impl Counts {
    /// Build counts; both must be finite and nonnegative with positive sum.
    pub fn new(n_ground: f64, n_excited: f64) -> Result<Self> {
        if !n_ground.is_finite()
            || !n_excited.is_finite()
            || n_ground < 0.0
            || n_excited < 0.0
            || n_ground + n_excited <= 0.0
        {
            return Err(Error::InvalidCounts);
        }
        Ok(Self { n_ground, n_excited })
    }

    /// Total number of shots.
    pub fn total(&self) -> f64 {
        self.n_ground + self.n_excited
    }
}

/// Log-likelihood of the counts under a model, with the convention
/// `0 * ln 0 = 0`; returns `-inf` when the data is impossible under the
/// model (a zero-probability outcome was observed).
fn log_likelihood(counts: &Counts, model: &OutcomeModel) -> f64 {
    let term = |n: f64, p: f64| {
        if n == 0.0 {
            0.0
        } else if p == 0.0 {
            f64::NEG_INFINITY
        } else {
            n * p.ln()
        }
    };
    term(counts.n_ground, model.p_ground) + term(counts.n_excited, model.p_excited)
}

/// Posterior probabilities `(P(bosonic | counts), P(fermionic | counts))`.
///
/// `prior_bosonic` is the prior weight of the bosonic hypothesis (default
/// choice elsewhere: 1/2). Likelihoods are combined in the log domain with
/// the larger one subtracted before exponentiation, so the normalization
/// never overflows; multinomial factors cancel between the hypotheses.
/// Errors with [`Error::UndecidablePosterior`] when the counts are
/// impossible under both hypotheses.
pub fn posteriors(
    counts: &Counts,
    model_bosonic: &OutcomeModel,
    model_fermionic: &OutcomeModel,
    prior_bosonic: f64,
) -> Result<(f64, f64)> {
    if !prior_bosonic.is_finite() || !(0.0..=1.0).contains(&prior_bosonic) {
        return Err(Error::InvalidPrior(prior_bosonic));
    }
    let ll_b = log_likelihood(counts, model_bosonic);
    let ll_f = log_likelihood(counts, model_fermionic);
    let (w_b, w_f) = (prior_bosonic, 1.0 - prior_bosonic);
    // Degenerate priors decide outright (the other hypothesis is excluded),
    // provided the data is possible under the surviving one.
    if ll_b == f64::NEG_INFINITY && ll_f == f64::NEG_INFINITY {
        return Err(Error::UndecidablePosterior);
    }
    let m = ll_b.max(ll_f);
    let u_b = if ll_b == f64::NEG_INFINITY {
        0.0
    } else {
        w_b * (ll_b - m).exp()
    };
    let u_f = if ll_f == f64::NEG_INFINITY {
        0.0
    } else {
        w_f * (ll_f - m).exp()
    };
    let z = u_b + u_f;
    if z == 0.0 {
        // Possible only with a zero prior on the only viable hypothesis.
        return Err(Error::UndecidablePosterior);
    }
    Ok((u_b / z, u_f / z))
}

/// Which bath the decision rule picked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    /// Bosonic posterior won.
    Bosonic,
    /// Fermionic posterior won (ties resolve here by convention).
    Fermionic,
}

/// Ideal (expectation-level) error probability of the Bayesian decision.
///
/// Under the true bath `q`, the expected counts after `n_shots` shots are
/// `n_i = p_i^(q) n_shots`. Feeding those fractional counts to the
/// posterior machinery gives the wrong-hypothesis posterior mass; the
/// returned `delta` is the equal-weight average of the two error terms,
///
/// ```text
///   delta = 1/2 [ P(bosonic | expected fermionic data)
///               + P(fermionic | expected bosonic data) ],
/// ```
///
/// together with its rescaled companion `1/2 (2 delta)^(1/n_shots)`.
/// `delta` lies in `[0, 1/2]` and decreases monotonically in `n_shots`
/// (flat exactly when the models coincide).
pub fn ideal_delta(
    pair: &DiscriminationPair,
    a0: &BlochVector,
    tau: f64,
    n_shots: f64,
) -> Result<(f64, f64)> {
    if !n_shots.is_finite() || n_shots <= 0.0 {
        return Err(Error::InvalidCounts);
    }
    let model_b = outcome_probabilities(pair.bosonic(), a0, tau)?;
    let model_f = outcome_probabilities(pair.fermionic(), a0, tau)?;
    let expected = |m: &OutcomeModel| Counts::new(m.p_ground * n_shots, m.p_excited * n_shots);
    let (wrong_given_f, _) = posteriors(&expected(&model_f)?, &model_b, &model_f, 0.5)?;
    let (_, wrong_given_b) = posteriors(&expected(&model_b)?, &model_b, &model_f, 0.5)?;
    let delta = 0.5 * (wrong_given_f + wrong_given_b);
    let rescaled = 0.5 * (2.0 * delta).powf(1.0 / n_shots);
    Ok((delta, rescaled))
}

/// One simulated repetition: the counts it produced, the bosonic posterior,
/// and the decision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialRecord {
    /// Integer ground count (stored as `f64` to share the [`Counts`] type).
    pub counts: Counts,
    /// Posterior probability of the bosonic hypothesis.
    pub posterior_bosonic: f64,
    /// The decision taken.
    pub decision: Decision,
}

/// Tally of correct and wrong decisions across repetitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Tally {
    /// Repetitions whose decision matched the true bath.
    pub n_correct: u32,
    /// Repetitions whose decision was wrong.
    pub n_wrong: u32,
}

/// Simulate the full Bayesian experiment with the true bath fixed.
///
/// For each repetition `rep in 0..repetitions`, draws `n_shots` Bernoulli
/// outcomes `u < P(excited | true bath)` with `u = counter_uniform(seed,
/// rep, shot)`, forms the counts, computes posteriors with the given
/// bosonic prior, and decides for the hypothesis with the larger posterior
/// (exact ties go to fermionic). Returns the per-repetition records and the
/// tally; the result is a pure function of the arguments.
///
/// `true_is_bosonic` selects which bath generates the data (decision
/// correctness is judged against it).
#[allow(clippy::too_many_arguments)]
pub fn simulate_and_decide(
    pair: &DiscriminationPair,
    a0: &BlochVector,
    tau: f64,
    n_shots: u32,
    repetitions: u32,
    seed: u64,
    prior_bosonic: f64,
    true_is_bosonic: bool,
) -> Result<(Vec<TrialRecord>, Tally)> {
    if n_shots == 0 || repetitions == 0 {
        return Err(Error::InvalidCounts);
    }
    let model_b = outcome_probabilities(pair.bosonic(), a0, tau)?;
    let model_f = outcome_probabilities(pair.fermionic(), a0, tau)?;
    let p_excited_true = if true_is_bosonic {
        model_b.p_excited
    } else {
        model_f.p_excited
    };
    let mut records = Vec::with_capacity(repetitions as usize);
    let mut tally = Tally::default();
    for rep in 0..repetitions {
        let mut n_excited = 0u32;
        for shot in 0..n_shots {
            if counter_uniform(seed, rep, shot) < p_excited_true {
                n_excited += 1;
            }
        }
        let counts = Counts::new((n_shots - n_excited) as f64, n_excited as f64)?;
        let (post_b, post_f) = posteriors(&counts, &model_b, &model_f, prior_bosonic)?;
        let decision = if post_b > post_f {
            Decision::Bosonic
        } else {
            Decision::Fermionic
        };
        let correct = (decision == Decision::Bosonic) == true_is_bosonic;
        if correct {
            tally.n_correct += 1;
        } else {
            tally.n_wrong += 1;
        }
        records.push(TrialRecord {
            counts,
            posterior_bosonic: post_b,
            decision,
        });
    }
    Ok((records, tally))
}
