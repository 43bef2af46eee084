//! Crate-wide error type.
//!
//! Every fallible operation returns [`Result`]. Domain failures carry the
//! offending value and the tolerance that rejected it, so callers (and the CLI)
//! can print actionable diagnostics instead of bare "invalid input".

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: |A[{row},{col}] - conj(A[{col},{row}])| = {defect:.3e} exceeds {tol:.3e}")]
    NotHermitian {
        row: usize,
        col: usize,
        defect: f64,
        tol: f64,
    },

    #[error("matrix entry ({row},{col}) is not finite")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("matrix must be square and nonempty: got {rows} rows, {cols} cols")]
    BadShape { rows: usize, cols: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error(
        "matrix is not positive semidefinite: eigenvalue {eigenvalue:.6e} lies below -{tol:.3e}"
    )]
    NotPositiveSemidefinite { eigenvalue: f64, tol: f64 },

    #[error("matrix is not positive definite: eigenvalue {eigenvalue:.6e} is not above {tol:.3e}")]
    NotPositiveDefinite { eigenvalue: f64, tol: f64 },

    #[error("power {power} needs a nonsingular matrix: eigenvalue {eigenvalue:.6e} is within {tol:.3e} of zero")]
    SingularPower {
        eigenvalue: f64,
        tol: f64,
        power: f64,
    },

    #[error("eigenvalue {eigenvalue:.6e} is outside the domain of the spectral function")]
    SpectralDomain { eigenvalue: f64 },

    #[error("deformation parameter nu = {nu} is outside (0, 1]")]
    InvalidNu { nu: f64 },

    #[error("{name} = {value} is outside [{lo}, {hi}]")]
    ParamRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("constant undefined for h = {h}: need {need}")]
    InvalidH { h: f64, need: &'static str },

    #[error("kantorovich constant undefined at nu = {nu}, h = {h} (intermediate value not finite and positive)")]
    KantorovichDomain { nu: f64, h: f64 },

    #[error("spectral bounds are degenerate (h = {h}); constant-based bounds need h > 1")]
    DegenerateBounds { h: f64 },

    #[error("trace is {trace:.12e}, expected 1 within {tol:.3e}")]
    NotUnitTrace { trace: f64, tol: f64 },

    #[error("deformed exponential undefined: 1 + nu*x = {value:.6e} is not positive")]
    ExpNuDomain { value: f64 },

    #[error("hypothesis not satisfied: {what}")]
    HypothesisNotSatisfied { what: String },

    #[error("imaginary residue {residue:.3e} on a real-valued trace expression exceeds {tol:.3e}")]
    ImaginaryResidue { residue: f64, tol: f64 },

    #[error("two algebraically equal forms of {what} disagree by {delta:.3e}")]
    FormDisagreement { what: &'static str, delta: f64 },

    #[error("negative radicand {value:.6e} in an uncertainty quantity")]
    NegativeRadicand { value: f64 },

    #[error("inputs do not match inequality {id}: expected {expected}")]
    WrongInputs { id: String, expected: &'static str },

    #[error("unknown inequality id: {0}")]
    UnknownInequality(String),

    #[error("unknown case: {0}")]
    UnknownCase(String),

    #[error("unknown quantity: {0}")]
    UnknownQuantity(String),

    #[error("missing required input: {0}")]
    MissingInput(&'static str),

    #[error("budget must be positive")]
    EmptyBudget,

    #[error("matrix file {path}: {reason}")]
    MatrixFile { path: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
