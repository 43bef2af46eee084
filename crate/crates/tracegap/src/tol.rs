//! Numeric tolerance policy, centralized so every module agrees on what
//! "equal", "zero", and "positive" mean at f64 precision.
//!
//! Relative tolerances scale by `max(1, magnitude)`: absolute near the origin,
//! relative for large values. All reference inputs live far from these
//! boundaries, so the exact constants are not load-bearing for them; they are
//! load-bearing for the randomized suites.

/// Hermiticity defect allowed at construction, per entry, absolute.
pub const HERMITICITY: f64 = 1e-12;

/// Jacobi stops when the off-diagonal Frobenius mass drops below this
/// fraction of the input's Frobenius norm.
pub const JACOBI_OFF_REL: f64 = 1e-14;

/// Eigendecomposition reconstruction error, relative to `max(1, max-entry)`.
pub const RECONSTRUCTION_REL: f64 = 1e-10;

/// Positive-semidefinite slack, relative to `max(1, spectral radius)`.
/// Eigenvalues inside `(-tau, tau)` count as zero.
pub const PSD_REL: f64 = 1e-10;

/// Default signed-gap tolerance, relative to `max(1, |lhs|, |rhs|)`.
pub const GAP_REL: f64 = 1e-9;

/// Imaginary residue allowed on traces that are real by symmetry,
/// relative to `max(1, |real part|)`.
pub const REAL_TRACE_REL: f64 = 1e-9;

/// Allowed deviation of a density matrix trace from 1, absolute.
pub const UNIT_TRACE: f64 = 1e-12;

/// Disagreement allowed between two algebraically equal forms of one
/// quantity, relative to `max(1, magnitude)`.
pub const FORM_AGREEMENT: f64 = 1e-10;

/// Uncertainty radicands are nonnegative in exact arithmetic; negatives
/// above `-RADICAND_FAIL_REL * max(1, V^2)` clamp to zero (roundoff),
/// anything lower is an internal-consistency error.
pub const RADICAND_FAIL_REL: f64 = 1e-9;

/// Spectral-bound ratios need `h > 1 + DEGENERATE_H` before the
/// Kantorovich/Specht machinery applies.
pub const DEGENERATE_H: f64 = 1e-9;

/// Variational reports carry a relative gap (their defect divided by
/// `max(1, |closed form|)`, since the closed form scales with the inputs
/// while spectral accuracy is relative); this is the bound that relative
/// gap must not fall below.
pub const VARIATIONAL: f64 = 1e-8;

/// Smallest eigenvector component eligible to carry the phase convention.
pub const PHASE_MIN: f64 = 1e-8;

/// Scale a relative tolerance by the magnitudes it protects.
pub fn rel(tol: f64, magnitudes: &[f64]) -> f64 {
    let mut scale: f64 = 1.0;
    for &m in magnitudes {
        scale = scale.max(m.abs());
    }
    tol * scale
}
