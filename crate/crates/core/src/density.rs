//! Qubit density matrices and small Hermitian matrix numerics.
//!
//! Basis convention: index 0 is the ground state, index 1 the excited state,
//! so a Bloch vector `(ax, ay, az)` maps to
//!
//! ```text
//!   rho = 1/2 [ 1 - az        ax + i ay ]
//!             [ ax - i ay     1 + az    ]
//! ```
//!
//! which makes `P(excited) = rho_11 = (1 + az)/2`.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::dynamics::BlochVector;
use crate::error::Error;
use crate::Result;

/// Hermiticity / trace tolerances for validating externally supplied
/// matrices. Rounding-level violations are repaired by symmetrization.
const HERMITICITY_TOL: f64 = 1e-12;
const TRACE_TOL: f64 = 1e-12;
const EIGENVALUE_SLACK: f64 = 1e-12;

/// A 2x2 density matrix (Hermitian, unit trace, positive semidefinite).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix2 {
    /// Row-major entries; invariants enforced at construction.
    m: [[Complex64; 2]; 2],
}

/// Spectral decomposition of a [`DensityMatrix2`].
///
/// `values[0] >= values[1]`; `vectors[k]` is the normalized eigenvector for
/// `values[k]`, stored as `[component_0, component_1]`.
#[derive(Debug, Clone, Copy)]
pub struct Eigen2 {
    /// Eigenvalues in descending order; both lie in `[0, 1]` up to rounding.
    pub values: [f64; 2],
    /// Orthonormal eigenvectors matching `values`.
    pub vectors: [[Complex64; 2]; 2],
}

impl DensityMatrix2 {
    /// Density matrix of the qubit state with the given Bloch vector.
    pub fn from_bloch(a: &BlochVector) -> Self {
        let half = Complex64::new(0.5, 0.0);
        Self {
            m: [
                [
                    half * (1.0 - a.az),
                    Complex64::new(0.5 * a.ax, 0.5 * a.ay),
                ],
                [
                    Complex64::new(0.5 * a.ax, -0.5 * a.ay),
                    half * (1.0 + a.az),
                ],
            ],
        }
    }

    /// Validate and adopt an externally supplied matrix.
    ///
    /// Checks Hermiticity and unit trace to `1e-12` and positivity of the
    /// eigenvalues to the same slack; rounding-level violations are repaired
    /// (symmetrized / imaginary diagonals dropped), anything larger is an
    /// error.
    pub fn new(entries: [[Complex64; 2]; 2]) -> Result<Self> {
        let [[a, b], [c, d]] = entries;
        if [a, b, c, d].iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidDensityMatrix("non-finite entry"));
        }
        if a.im.abs() > HERMITICITY_TOL
            || d.im.abs() > HERMITICITY_TOL
            || (b - c.conj()).norm() > HERMITICITY_TOL
        {
            return Err(Error::InvalidDensityMatrix("not Hermitian"));
        }
        if (a.re + d.re - 1.0).abs() > TRACE_TOL {
            return Err(Error::InvalidDensityMatrix("trace differs from 1"));
        }
        let off = 0.5 * (b + c.conj());
        let sym = Self {
            m: [
                [Complex64::new(a.re, 0.0), off],
                [off.conj(), Complex64::new(d.re, 0.0)],
            ],
        };
        let eig = sym.eigen_system();
        if eig.values[1] < -EIGENVALUE_SLACK || eig.values[0] > 1.0 + EIGENVALUE_SLACK {
            return Err(Error::InvalidDensityMatrix("eigenvalue outside [0, 1]"));
        }
        Ok(sym)
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[[Complex64; 2]; 2] {
        &self.m
    }

    /// Bloch components `(ax, ay, az)` read back from the matrix.
    pub fn bloch_components(&self) -> (f64, f64, f64) {
        (
            2.0 * self.m[0][1].re,
            2.0 * self.m[0][1].im,
            self.m[1][1].re - self.m[0][0].re,
        )
    }

    /// Closed-form spectral decomposition (descending eigenvalues).
    ///
    /// For `rho = [[p, c], [conj(c), q]]` the eigenvalues are
    /// `(p + q)/2 +- sqrt(((p - q)/2)^2 + |c|^2)`; when `c != 0` the vector
    /// for eigenvalue `lam` is `(c, lam - p)` normalized (nonzero because
    /// `lam = p` would force `c = 0`), and for `c = 0` the basis vectors are
    /// returned directly.
    pub fn eigen_system(&self) -> Eigen2 {
        let p = self.m[0][0].re;
        let q = self.m[1][1].re;
        let c = self.m[0][1];
        let mean = 0.5 * (p + q);
        let half_gap = 0.5 * (p - q);
        let disc = (half_gap * half_gap + c.norm_sqr()).sqrt();
        let hi = mean + disc;
        let lo = mean - disc;
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        if c.norm() == 0.0 {
            // Diagonal case: exact eigenpairs, no rounding through disc.
            let (values, v_hi, v_lo) = if p >= q {
                ([p, q], [one, zero], [zero, one])
            } else {
                ([q, p], [zero, one], [one, zero])
            };
            return Eigen2 {
                values,
                vectors: [v_hi, v_lo],
            };
        }
        let normalized = |lam: f64| {
            let v0 = c;
            let v1 = Complex64::new(lam - p, 0.0);
            let n = (v0.norm_sqr() + v1.norm_sqr()).sqrt();
            [v0 / n, v1 / n]
        };
        Eigen2 {
            values: [hi, lo],
            vectors: [normalized(hi), normalized(lo)],
        }
    }

    /// The matrix as a dense `nalgebra` matrix (for tensor products).
    pub fn to_dmatrix(&self) -> DMatrix<Complex64> {
        DMatrix::from_row_slice(2, 2, &[self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]])
    }
}

/// Trace norm (sum of absolute eigenvalues) of a Hermitian complex matrix.
///
/// Uses the standard real embedding `H -> [[Re H, -Im H], [Im H, Re H]]`,
/// a real symmetric matrix whose spectrum is that of `H` with every
/// eigenvalue doubled; the trace norm is half the embedded absolute sum.
/// The caller must pass a Hermitian matrix (this is debug-asserted).
pub(crate) fn trace_norm_hermitian(h: &DMatrix<Complex64>) -> f64 {
    let n = h.nrows();
    debug_assert_eq!(n, h.ncols());
    debug_assert!(
        (0..n).all(|i| (0..n).all(|j| (h[(i, j)] - h[(j, i)].conj()).norm() < 1e-10)),
        "trace_norm_hermitian needs a Hermitian input"
    );
    let mut m = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let z = h[(i, j)];
            m[(i, j)] = z.re;
            m[(i + n, j + n)] = z.re;
            m[(i, j + n)] = -z.im;
            m[(i + n, j)] = z.im;
        }
    }
    let eig = SymmetricEigen::new(m);
    0.5 * eig.eigenvalues.iter().map(|l| l.abs()).sum::<f64>()
}

/// Kronecker power `m^(x n)` of a square matrix (`n >= 1`).
pub(crate) fn kron_power(m: &DMatrix<Complex64>, n: usize) -> DMatrix<Complex64> {
    debug_assert!(n >= 1);
    let mut out = m.clone();
    for _ in 1..n {
        out = out.kronecker(m);
    }
    out
}
