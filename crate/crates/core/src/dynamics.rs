//! Relaxation of a single-qubit probe in contact with a thermal bath.
//!
//! The probe's state is tracked as a Bloch vector `(ax, ay, az)`. Weak
//! resonant coupling to a thermal bath of harmonic oscillators (bosonic) or
//! two-level systems (fermionic) produces a Markovian relaxation
//!
//! ```text
//!   d az / d tau = -(gamma_q/gamma) az - (xi_q/gamma)
//!   d ax,ay / d tau = -(gamma_q/gamma)/2 ax,ay
//! ```
//!
//! in dimensionless time `tau = gamma * t`, with bath-dependent rates
//!
//! ```text
//!   bosonic : gamma_b/gamma = coth(bw/2),  xi_b/gamma = 1
//!   fermionic: gamma_f/gamma = 1,          xi_f/gamma = tanh(bw/2)
//! ```
//!
//! where `bw = beta * omega`. Both flows share the fixed point
//! `az(inf) = -tanh(bw/2)` (the Gibbs state of the probe at the bath
//! temperature), but reach it at different rates: that rate difference is
//! the entire signal the discrimination protocols in this crate exploit.
//!
//! Conventions: `az = +1` is the excited state (`P(excited) = (1 + az)/2`);
//! the bath occupation is `N = 1 / (exp(bw) - s)` with `s = +1` bosonic,
//! `s = -1` fermionic.

use crate::error::Error;
use crate::Result;

/// Tolerance band for accepting Bloch vectors that stick out of the unit
/// ball by floating-point rounding only; such vectors are rescaled back in.
const BLOCH_NORM_SLACK: f64 = 1e-12;

/// Exchange statistics of the bath constituents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BathStatistics {
    /// Harmonic-oscillator bath (occupation unbounded, `s = +1`).
    Bosonic,
    /// Two-level-system bath (occupation at most 1, `s = -1`).
    Fermionic,
}

impl BathStatistics {
    /// Sign `s` in the occupation formula `N = 1/(exp(bw) - s)`.
    pub fn occupation_sign(self) -> f64 {
        match self {
            BathStatistics::Bosonic => 1.0,
            BathStatistics::Fermionic => -1.0,
        }
    }
}

/// A thermal bath: exchange statistics plus the dimensionless combination
/// `beta_omega = beta * omega` of inverse temperature and probe frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BathSpec {
    statistics: BathStatistics,
    beta_omega: f64,
}

impl BathSpec {
    /// Create a bath, validating `beta_omega`.
    ///
    /// `beta_omega` must be finite and nonnegative; for bosonic baths it must
    /// be strictly positive (the bosonic occupation diverges at infinite
    /// temperature).
    pub fn new(statistics: BathStatistics, beta_omega: f64) -> Result<Self> {
        if !beta_omega.is_finite() || beta_omega < 0.0 {
            return Err(Error::InvalidBetaOmega(beta_omega));
        }
        if statistics == BathStatistics::Bosonic && beta_omega == 0.0 {
            return Err(Error::BosonicInfiniteTemperature(beta_omega));
        }
        Ok(Self {
            statistics,
            beta_omega,
        })
    }

    /// Bosonic bath at `beta * omega = beta_omega`.
    pub fn bosonic(beta_omega: f64) -> Result<Self> {
        Self::new(BathStatistics::Bosonic, beta_omega)
    }

    /// Fermionic bath at `beta * omega = beta_omega`.
    pub fn fermionic(beta_omega: f64) -> Result<Self> {
        Self::new(BathStatistics::Fermionic, beta_omega)
    }

    /// The bath's exchange statistics.
    pub fn statistics(&self) -> BathStatistics {
        self.statistics
    }

    /// The dimensionless `beta * omega`.
    pub fn beta_omega(&self) -> f64 {
        self.beta_omega
    }

    /// Mean occupation of the resonant bath mode, `N = 1/(exp(bw) - s)`.
    ///
    /// Decreases with `bw`; bosonic values are unbounded as `bw -> 0+`,
    /// fermionic values live in `(0, 1/2]`. Underflows cleanly to `0.0`
    /// for very large `bw`.
    pub fn occupation(&self) -> f64 {
        let e = self.beta_omega.exp();
        if e.is_infinite() {
            return 0.0;
        }
        1.0 / (e - self.statistics.occupation_sign())
    }

    /// `tanh(beta * omega / 2)`, the temperature variable used throughout
    /// (`x` for the fermionic bath, `y` for the bosonic bath).
    pub fn tanh_half(&self) -> f64 {
        (0.5 * self.beta_omega).tanh()
    }

    /// Dimensionless relaxation parameters of the probe in this bath.
    pub fn relaxation(&self) -> RelaxationParams {
        let th = self.tanh_half();
        match self.statistics {
            // coth(bw/2) = 1/tanh(bw/2); bw > 0 is guaranteed by `new`.
            BathStatistics::Bosonic => RelaxationParams {
                gamma_ratio: 1.0 / th,
                xi_ratio: 1.0,
                az_infinity: -th,
            },
            BathStatistics::Fermionic => RelaxationParams {
                gamma_ratio: 1.0,
                xi_ratio: th,
                az_infinity: -th,
            },
        }
    }
}

/// Dimensionless relaxation parameters: longitudinal decay rate
/// `gamma_ratio = gamma_q/gamma >= 1`, pump term `xi_ratio = xi_q/gamma`,
/// and fixed point `az_infinity = -xi_ratio/gamma_ratio` in `(-1, 0]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelaxationParams {
    /// `gamma_q / gamma`: 1 for fermionic baths, `coth(bw/2) >= 1` bosonic.
    pub gamma_ratio: f64,
    /// `xi_q / gamma`: `tanh(bw/2)` fermionic, 1 bosonic.
    pub xi_ratio: f64,
    /// Stationary value of `az`, equal to `-tanh(bw/2)`.
    pub az_infinity: f64,
}

/// A qubit state as a Bloch vector; invariant: `ax^2 + ay^2 + az^2 <= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    /// Transverse component along x.
    pub ax: f64,
    /// Transverse component along y.
    pub ay: f64,
    /// Longitudinal component; `+1` is the excited state.
    pub az: f64,
}

impl BlochVector {
    /// The excited state, `az = +1`.
    pub const EXCITED: Self = Self {
        ax: 0.0,
        ay: 0.0,
        az: 1.0,
    };

    /// The ground state, `az = -1`.
    pub const GROUND: Self = Self {
        ax: 0.0,
        ay: 0.0,
        az: -1.0,
    };

    /// Build a Bloch vector, enforcing the unit-ball invariant.
    ///
    /// Components must be finite. A squared norm in `(1, 1 + 1e-12]` is
    /// treated as rounding and rescaled onto the sphere; beyond that the
    /// vector is rejected as unphysical.
    pub fn new(ax: f64, ay: f64, az: f64) -> Result<Self> {
        if !(ax.is_finite() && ay.is_finite() && az.is_finite()) {
            return Err(Error::UnphysicalBloch(f64::NAN));
        }
        let n2 = ax * ax + ay * ay + az * az;
        if n2 <= 1.0 {
            Ok(Self { ax, ay, az })
        } else if n2 <= 1.0 + BLOCH_NORM_SLACK {
            let s = 1.0 / n2.sqrt();
            Ok(Self {
                ax: ax * s,
                ay: ay * s,
                az: az * s,
            })
        } else {
            Err(Error::UnphysicalBloch(n2))
        }
    }

    /// Pure state on the xz great circle with the given `az` (so
    /// `ax = sqrt(1 - az^2) >= 0`, `ay = 0`). Requires `|az| <= 1`.
    ///
    /// By azimuthal symmetry of the relaxation, every protocol quantity
    /// depends on the transverse components only through `ax^2 + ay^2`,
    /// so this parametrization loses no generality for pure inputs.
    pub fn pure_z(az: f64) -> Result<Self> {
        if !az.is_finite() || az.abs() > 1.0 {
            return Err(Error::UnphysicalBloch(az * az));
        }
        // (1 - az)(1 + az) avoids cancellation near |az| = 1.
        let t = ((1.0 - az) * (1.0 + az)).max(0.0);
        Ok(Self {
            ax: t.sqrt(),
            ay: 0.0,
            az,
        })
    }

    /// Euclidean norm of the vector.
    pub fn norm(&self) -> f64 {
        (self.ax * self.ax + self.ay * self.ay + self.az * self.az).sqrt()
    }

    /// Euclidean distance to another Bloch vector.
    pub fn distance(&self, other: &Self) -> f64 {
        let dx = self.ax - other.ax;
        let dy = self.ay - other.ay;
        let dz = self.az - other.az;
        (dx * dx + dy * dy + dz * dz).sqrt()
    }
}

/// Validate an interaction time: nonnegative, not NaN (+infinity allowed).
pub(crate) fn validate_tau(tau: f64) -> Result<()> {
    if tau.is_nan() || tau < 0.0 {
        return Err(Error::InvalidTime(tau));
    }
    Ok(())
}

/// Closed-form relaxation of a Bloch vector for a dimensionless time `tau`.
///
/// ```text
///   az(tau)    = e^(-r tau) (az(0) - az_inf) + az_inf
///   ax,ay(tau) = e^(-r tau / 2) ax,ay(0)
/// ```
///
/// with `r = gamma_q/gamma` and `az_inf` from [`BathSpec::relaxation`].
/// `tau = +inf` returns the fixed point exactly. Errors on negative or NaN
/// `tau`.
pub fn evolve(a0: &BlochVector, bath: &BathSpec, tau: f64) -> Result<BlochVector> {
    validate_tau(tau)?;
    if tau == 0.0 {
        return Ok(*a0); // exact identity, no roundtrip through az_infinity
    }
    let r = bath.relaxation();
    if tau.is_infinite() {
        return BlochVector::new(0.0, 0.0, r.az_infinity);
    }
    let eta = (-r.gamma_ratio * tau).exp();
    let coh = eta.sqrt();
    BlochVector::new(
        coh * a0.ax,
        coh * a0.ay,
        eta * (a0.az - r.az_infinity) + r.az_infinity,
    )
}

/// Fixed-step classical Runge-Kutta (RK4) integration of the relaxation ODE.
///
/// This exists as an independent numerical cross-check of [`evolve`]; the
/// closed form is always preferable in production use. Requires at least 10
/// steps; `tau = +inf` returns the fixed point like [`evolve`] (a fixed-step
/// scheme cannot integrate to infinity).
pub fn ode_evolve(a0: &BlochVector, bath: &BathSpec, tau: f64, steps: usize) -> Result<BlochVector> {
    validate_tau(tau)?;
    if steps < 10 {
        return Err(Error::TooFewSteps(steps));
    }
    let r = bath.relaxation();
    if tau.is_infinite() {
        return BlochVector::new(0.0, 0.0, r.az_infinity);
    }
    let deriv = |v: [f64; 3]| {
        [
            -0.5 * r.gamma_ratio * v[0],
            -0.5 * r.gamma_ratio * v[1],
            -r.gamma_ratio * v[2] - r.xi_ratio,
        ]
    };
    let h = tau / steps as f64;
    let mut v = [a0.ax, a0.ay, a0.az];
    for _ in 0..steps {
        let k1 = deriv(v);
        let k2 = deriv([
            v[0] + 0.5 * h * k1[0],
            v[1] + 0.5 * h * k1[1],
            v[2] + 0.5 * h * k1[2],
        ]);
        let k3 = deriv([
            v[0] + 0.5 * h * k2[0],
            v[1] + 0.5 * h * k2[1],
            v[2] + 0.5 * h * k2[2],
        ]);
        let k4 = deriv([v[0] + h * k3[0], v[1] + h * k3[1], v[2] + h * k3[2]]);
        for i in 0..3 {
            v[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
    }
    BlochVector::new(v[0], v[1], v[2])
}

/// The relaxation for time `tau`, packaged as a generalized amplitude
/// damping channel.
///
/// `eta = e^(-r tau)` is the surviving fraction of the longitudinal
/// deviation from equilibrium; `p_excited = (1 + az_inf)/2 in [0, 1/2]` is
/// the excited-state population of the fixed point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GadChannelParams {
    /// Longitudinal survival factor `e^(-gamma_q tau / gamma)` in `[0, 1]`.
    pub eta: f64,
    /// Equilibrium excited-state population `(1 + az_infinity)/2`.
    pub p_excited: f64,
}

impl GadChannelParams {
    /// Apply the channel to a Bloch vector.
    ///
    /// Agrees with [`evolve`] for the `(bath, tau)` this was built from:
    /// `z' = eta (z - az_inf) + az_inf`, transverse components scaled by
    /// `sqrt(eta)`.
    pub fn apply(&self, a: &BlochVector) -> Result<BlochVector> {
        if self.eta == 1.0 {
            return Ok(*a); // exact identity channel (tau = 0)
        }
        let az_inf = 2.0 * self.p_excited - 1.0;
        let coh = self.eta.sqrt();
        BlochVector::new(
            coh * a.ax,
            coh * a.ay,
            self.eta * (a.az - az_inf) + az_inf,
        )
    }
}

/// Channel parameters of the relaxation for time `tau` in the given bath.
///
/// `tau = 0` gives the identity channel (`eta = 1`); `tau = +inf` gives the
/// completely thermalizing channel (`eta = 0`). Errors on negative/NaN `tau`.
pub fn gad_channel(bath: &BathSpec, tau: f64) -> Result<GadChannelParams> {
    validate_tau(tau)?;
    let r = bath.relaxation();
    let eta = if tau.is_infinite() {
        0.0
    } else {
        (-r.gamma_ratio * tau).exp()
    };
    Ok(GadChannelParams {
        eta,
        p_excited: 0.5 * (1.0 + r.az_infinity),
    })
}

#[cfg(test)]
// Reference values below are written with every computed digit on purpose.
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn occupation_reference_values() {
        // 1/(e - 1) and 1/(e + 1) at beta*omega = 1.
        let b = BathSpec::bosonic(1.0).unwrap();
        let f = BathSpec::fermionic(1.0).unwrap();
        assert_abs_diff_eq!(b.occupation(), 0.58197670686932642, epsilon = 1e-15);
        assert_abs_diff_eq!(f.occupation(), 0.26894142136999512, epsilon = 1e-15);
        // Fermionic occupation at infinite temperature is exactly 1/2.
        assert_eq!(BathSpec::fermionic(0.0).unwrap().occupation(), 0.5);
    }

    #[test]
    fn occupation_underflows_cleanly_at_low_temperature() {
        let b = BathSpec::bosonic(700.0).unwrap();
        assert!(b.occupation() > 0.0 && b.occupation() < 1e-300);
        let f = BathSpec::fermionic(800.0).unwrap(); // exp overflows to inf
        assert_eq!(f.occupation(), 0.0);
    }

    #[test]
    fn occupation_decreases_with_beta_omega() {
        for stat in [BathStatistics::Bosonic, BathStatistics::Fermionic] {
            let mut prev = f64::INFINITY;
            for bw in [0.1, 0.5, 1.0, 2.0, 5.0, 20.0] {
                let n = BathSpec::new(stat, bw).unwrap().occupation();
                assert!(n < prev, "occupation not decreasing at bw = {bw}");
                prev = n;
            }
        }
    }

    #[test]
    fn bath_spec_rejects_bad_parameters() {
        assert!(matches!(
            BathSpec::bosonic(0.0),
            Err(Error::BosonicInfiniteTemperature(_))
        ));
        assert!(matches!(
            BathSpec::fermionic(-1.0),
            Err(Error::InvalidBetaOmega(_))
        ));
        assert!(matches!(
            BathSpec::bosonic(f64::INFINITY),
            Err(Error::InvalidBetaOmega(_))
        ));
        assert!(matches!(
            BathSpec::fermionic(f64::NAN),
            Err(Error::InvalidBetaOmega(_))
        ));
    }

    #[test]
    fn relaxation_reference_values() {
        let th = 0.46211715726000976; // tanh(1/2)
        let f = BathSpec::fermionic(1.0).unwrap().relaxation();
        assert_eq!(f.gamma_ratio, 1.0);
        assert_abs_diff_eq!(f.xi_ratio, th, epsilon = 1e-15);
        assert_abs_diff_eq!(f.az_infinity, -th, epsilon = 1e-15);

        let b = BathSpec::bosonic(1.0).unwrap().relaxation();
        assert_abs_diff_eq!(b.gamma_ratio, 2.1639534137386528, epsilon = 1e-15);
        assert_eq!(b.xi_ratio, 1.0);
        assert_abs_diff_eq!(b.az_infinity, -th, epsilon = 1e-15);
    }

    #[test]
    fn relaxation_invariants_hold_across_temperatures() {
        for bw in [1e-6, 0.3, 1.0, 4.0, 50.0, 700.0] {
            for spec in [BathSpec::bosonic(bw).unwrap(), BathSpec::fermionic(bw).unwrap()] {
                let r = spec.relaxation();
                assert!(r.gamma_ratio >= 1.0);
                assert!(r.az_infinity > -1.0 - 1e-15 && r.az_infinity <= 0.0);
                // Fixed point consistency: az_inf = -xi/gamma_ratio.
                assert_abs_diff_eq!(
                    r.az_infinity,
                    -r.xi_ratio / r.gamma_ratio,
                    epsilon = 1e-14
                );
            }
        }
        // Bosonic baths relax strictly faster at equal temperature.
        let rb = BathSpec::bosonic(1.0).unwrap().relaxation();
        let rf = BathSpec::fermionic(1.0).unwrap().relaxation();
        assert!(rb.gamma_ratio > rf.gamma_ratio);
    }

    #[test]
    fn bloch_vector_enforces_unit_ball() {
        assert!(BlochVector::new(0.3, -0.4, 0.5).is_ok());
        assert!(matches!(
            BlochVector::new(1.0, 0.0, 0.1),
            Err(Error::UnphysicalBloch(_))
        ));
        assert!(matches!(
            BlochVector::new(f64::NAN, 0.0, 0.0),
            Err(Error::UnphysicalBloch(_))
        ));
        // Rounding-level overshoot is rescaled onto the sphere.
        let v = BlochVector::new(0.0, 0.0, 1.0 + 4e-13).unwrap();
        assert!(v.az <= 1.0 && v.az > 1.0 - 1e-12);
    }

    #[test]
    fn pure_z_lies_on_the_sphere() {
        for az in [-1.0, -0.42, 0.0, 0.9999999, 1.0] {
            let v = BlochVector::pure_z(az).unwrap();
            assert_abs_diff_eq!(v.norm(), 1.0, epsilon = 1e-15);
            assert_eq!(v.az, az);
            assert!(v.ax >= 0.0);
        }
        assert!(BlochVector::pure_z(1.0000001).is_err());
    }

    #[test]
    fn evolve_at_zero_time_is_identity() {
        let a0 = BlochVector::new(0.2, -0.3, 0.4).unwrap();
        let b = BathSpec::bosonic(0.7).unwrap();
        let a = evolve(&a0, &b, 0.0).unwrap();
        assert_eq!((a.ax, a.ay, a.az), (a0.ax, a0.ay, a0.az));
    }

    #[test]
    fn evolve_reference_value_fermionic() {
        // Excited probe, fermionic bath at bw = 1, tau = 1:
        // az = e^-1 (1 + tanh(1/2)) - tanh(1/2).
        let f = BathSpec::fermionic(1.0).unwrap();
        let a = evolve(&BlochVector::EXCITED, &f, 1.0).unwrap();
        assert_abs_diff_eq!(a.az, 0.075765685479980483, epsilon = 1e-15);
        assert_eq!(a.ax, 0.0);
    }

    #[test]
    fn evolve_reference_value_bosonic() {
        let b = BathSpec::bosonic(1.0).unwrap();
        let a = evolve(&BlochVector::EXCITED, &b, 1.0).unwrap();
        assert_abs_diff_eq!(a.az, -0.29416362318081876, epsilon = 1e-14);
    }

    #[test]
    fn evolve_reaches_fixed_point() {
        let b = BathSpec::bosonic(1.0).unwrap();
        let th = 0.46211715726000976;
        let at_inf = evolve(&BlochVector::EXCITED, &b, f64::INFINITY).unwrap();
        assert_eq!(at_inf.az, b.relaxation().az_infinity);
        assert_abs_diff_eq!(at_inf.az, -th, epsilon = 1e-15);
        let late = evolve(&BlochVector::new(0.5, 0.5, 0.5).unwrap(), &b, 1e3).unwrap();
        assert_abs_diff_eq!(late.az, -th, epsilon = 1e-12);
        assert_abs_diff_eq!(late.ax, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn evolve_rejects_bad_times() {
        let f = BathSpec::fermionic(1.0).unwrap();
        assert!(matches!(
            evolve(&BlochVector::EXCITED, &f, -0.1),
            Err(Error::InvalidTime(_))
        ));
        assert!(matches!(
            evolve(&BlochVector::EXCITED, &f, f64::NAN),
            Err(Error::InvalidTime(_))
        ));
    }

    #[test]
    fn ode_evolve_transverse_decay_reference() {
        // Pure transverse input in a fermionic bath decays at rate 1/2:
        // ax(1) = e^(-1/2).
        let f = BathSpec::fermionic(1.0).unwrap();
        let a0 = BlochVector::new(1.0, 0.0, 0.0).unwrap();
        let a = ode_evolve(&a0, &f, 1.0, 10_000).unwrap();
        assert_abs_diff_eq!(a.ax, 0.60653065971263342, epsilon = 1e-9);
        assert_abs_diff_eq!(a.ay, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn ode_evolve_matches_closed_form() {
        let b = BathSpec::bosonic(1.0).unwrap();
        let a0 = BlochVector::new(0.3, -0.2, 0.8).unwrap();
        let num = ode_evolve(&a0, &b, 0.5, 10_000).unwrap();
        let exact = evolve(&a0, &b, 0.5).unwrap();
        assert_abs_diff_eq!(num.ax, exact.ax, epsilon = 1e-10);
        assert_abs_diff_eq!(num.ay, exact.ay, epsilon = 1e-10);
        assert_abs_diff_eq!(num.az, exact.az, epsilon = 1e-10);
    }

    #[test]
    fn ode_evolve_preserves_fixed_point() {
        let b = BathSpec::bosonic(0.8).unwrap();
        let fp = BlochVector::new(0.0, 0.0, b.relaxation().az_infinity).unwrap();
        let out = ode_evolve(&fp, &b, 3.0, 100).unwrap();
        assert_abs_diff_eq!(out.az, fp.az, epsilon = 1e-12);
    }

    #[test]
    fn ode_evolve_rejects_too_few_steps() {
        let f = BathSpec::fermionic(1.0).unwrap();
        assert!(matches!(
            ode_evolve(&BlochVector::EXCITED, &f, 1.0, 9),
            Err(Error::TooFewSteps(9))
        ));
        assert!(ode_evolve(&BlochVector::EXCITED, &f, 1.0, 10).is_ok());
    }

    #[test]
    fn gad_channel_reference_values() {
        let b = BathSpec::bosonic(1.0).unwrap();
        let ch = gad_channel(&b, 1.0).unwrap();
        assert_abs_diff_eq!(ch.eta, 0.11487009316950629, epsilon = 1e-15);
        assert_abs_diff_eq!(ch.p_excited, 0.26894142136999512, epsilon = 1e-15);

        // tau = 0 is the identity channel.
        let id = gad_channel(&b, 0.0).unwrap();
        assert_eq!(id.eta, 1.0);
        let a0 = BlochVector::new(0.1, 0.2, -0.3).unwrap();
        let out = id.apply(&a0).unwrap();
        assert_abs_diff_eq!(out.ax, a0.ax, epsilon = 1e-15);
        assert_abs_diff_eq!(out.az, a0.az, epsilon = 1e-15);

        // tau = inf fully thermalizes.
        let th = gad_channel(&b, f64::INFINITY).unwrap();
        assert_eq!(th.eta, 0.0);
        assert!(th.p_excited >= 0.0 && th.p_excited <= 0.5);
    }

    #[test]
    fn gad_channel_apply_matches_evolve() {
        for (bath, tau) in [
            (BathSpec::bosonic(1.0).unwrap(), 0.7),
            (BathSpec::fermionic(2.0).unwrap(), 1.3),
            (BathSpec::bosonic(0.4).unwrap(), 3.0),
        ] {
            let ch = gad_channel(&bath, tau).unwrap();
            for a0 in [
                BlochVector::EXCITED,
                BlochVector::GROUND,
                BlochVector::new(0.6, -0.3, 0.2).unwrap(),
            ] {
                let via_channel = ch.apply(&a0).unwrap();
                let via_evolve = evolve(&a0, &bath, tau).unwrap();
                assert_abs_diff_eq!(via_channel.ax, via_evolve.ax, epsilon = 1e-14);
                assert_abs_diff_eq!(via_channel.ay, via_evolve.ay, epsilon = 1e-14);
                assert_abs_diff_eq!(via_channel.az, via_evolve.az, epsilon = 1e-14);
            }
        }
    }
}
