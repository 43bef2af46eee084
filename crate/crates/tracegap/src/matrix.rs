//! Dense complex matrices and Hermitian spectral calculus.
//!
//! Sizes here are small (dimension <= ~8 in practice), so storage is a
//! row-major `Vec<Complex64>`, products are cubic, and the eigensolver is a
//! cyclic Jacobi iteration with complex rotations. Jacobi is slower than
//! tridiagonalization but deterministic for identical input bits and accurate
//! at these sizes, which is what the downstream gap checks need.
//!
//! Two layers:
//! - [`CMatrix`]: general square complex matrix, plain arithmetic, no
//!   validation beyond shape and finiteness at the public constructors.
//! - [`HermMatrix`]: validated Hermitian carrier. Construction checks the
//!   per-entry defect against [`tol::HERMITICITY`], then stores the exact
//!   Hermitian average `(M + M*)/2`, so stored matrices satisfy
//!   `a[i][j] == conj(a[j][i])` bit-for-bit and diagonals are exactly real.
//!
//! Eigenvalues come back ascending; ties keep the Jacobi output order. Each
//! eigenvector is rescaled so its first component of modulus above
//! [`tol::PHASE_MIN`] is real and positive, which makes the decomposition a
//! deterministic function of the input bits.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tol;

pub(crate) const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const C_ONE: Complex64 = Complex64::new(1.0, 0.0);

const MAX_JACOBI_SWEEPS: usize = 64;

/// Square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        debug_assert!(dim >= 1, "zero-dimensional matrix");
        CMatrix {
            dim,
            data: vec![C_ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = CMatrix::zeros(dim);
        for i in 0..dim {
            m.set(i, i, C_ONE);
        }
        m
    }

    /// Builds from rows, rejecting non-square, empty, or non-finite input.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::BadShape { rows: 0, cols: 0 });
        }
        for r in rows {
            if r.len() != n {
                return Err(Error::BadShape {
                    rows: n,
                    cols: r.len(),
                });
            }
        }
        let mut m = CMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if !v.re.is_finite() || !v.im.is_finite() {
                    return Err(Error::NonFiniteEntry { row: i, col: j });
                }
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let complex: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        CMatrix::from_rows(&complex)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.dim + j] = v;
    }

    pub fn adjoint(&self) -> CMatrix {
        let n = self.dim;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.get(j, i).conj());
            }
        }
        out
    }

    /// `self * rhs`. Dimensions must already agree.
    pub fn mul(&self, rhs: &CMatrix) -> CMatrix {
        debug_assert_eq!(self.dim, rhs.dim, "product dimension mismatch");
        let n = self.dim;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik == C_ZERO {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + aik * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &CMatrix) -> CMatrix {
        debug_assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(rhs.data.iter()) {
            *a += *b;
        }
        out
    }

    pub fn sub(&self, rhs: &CMatrix) -> CMatrix {
        debug_assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(rhs.data.iter()) {
            *a -= *b;
        }
        out
    }

    pub fn scale(&self, k: Complex64) -> CMatrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= k;
        }
        out
    }

    pub fn scale_re(&self, k: f64) -> CMatrix {
        self.scale(Complex64::new(k, 0.0))
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn all_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Worst per-entry Hermiticity defect `|a[i][j] - conj(a[j][i])|` and its location.
    pub fn hermiticity_defect(&self) -> (f64, usize, usize) {
        let n = self.dim;
        let mut worst = 0.0;
        let (mut wi, mut wj) = (0, 0);
        for i in 0..n {
            for j in i..n {
                let d = (self.get(i, j) - self.get(j, i).conj()).norm();
                if d > worst {
                    worst = d;
                    wi = i;
                    wj = j;
                }
            }
        }
        (worst, wi, wj)
    }
}

/// `Tr[a * b]` without forming the product.
pub fn trace_product(a: &CMatrix, b: &CMatrix) -> Complex64 {
    debug_assert_eq!(a.dim(), b.dim());
    let n = a.dim();
    let mut acc = C_ZERO;
    for i in 0..n {
        for j in 0..n {
            acc += a.get(i, j) * b.get(j, i);
        }
    }
    acc
}

/// Extracts the real part of a trace that is real by symmetry, rejecting
/// imaginary residue above `tol::REAL_TRACE_REL * max(1, |re|)`.
pub fn real_trace(z: Complex64) -> Result<f64> {
    let allowed = tol::rel(tol::REAL_TRACE_REL, &[z.re]);
    if z.im.abs() > allowed {
        return Err(Error::ImaginaryResidue {
            residue: z.im,
            tol: allowed,
        });
    }
    Ok(z.re)
}

/// Validated Hermitian matrix. See the module docs for the storage invariant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CMatrix", into = "CMatrix")]
pub struct HermMatrix {
    m: CMatrix,
}

impl TryFrom<CMatrix> for HermMatrix {
    type Error = Error;
    fn try_from(m: CMatrix) -> Result<Self> {
        HermMatrix::new(m)
    }
}

impl From<HermMatrix> for CMatrix {
    fn from(h: HermMatrix) -> CMatrix {
        h.m
    }
}

impl HermMatrix {
    /// Validates finiteness and the Hermiticity defect, then stores the exact
    /// Hermitian average of the input.
    pub fn new(m: CMatrix) -> Result<Self> {
        if m.dim() == 0 {
            return Err(Error::BadShape { rows: 0, cols: 0 });
        }
        for i in 0..m.dim() {
            for j in 0..m.dim() {
                let v = m.get(i, j);
                if !v.re.is_finite() || !v.im.is_finite() {
                    return Err(Error::NonFiniteEntry { row: i, col: j });
                }
            }
        }
        let (defect, i, j) = m.hermiticity_defect();
        if defect > tol::HERMITICITY {
            return Err(Error::NotHermitian {
                row: i,
                col: j,
                defect,
                tol: tol::HERMITICITY,
            });
        }
        Ok(Self::hermitian_part(&m))
    }

    /// `(M + M*)/2` without a defect gate. Conjugation and halving are exact
    /// in IEEE arithmetic, so the result is Hermitian bit-for-bit.
    pub fn hermitian_part(m: &CMatrix) -> Self {
        let n = m.dim();
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            out.set(i, i, Complex64::new(m.get(i, i).re, 0.0));
            for j in (i + 1)..n {
                let v = (m.get(i, j) + m.get(j, i).conj()).scale(0.5);
                out.set(i, j, v);
                out.set(j, i, v.conj());
            }
        }
        HermMatrix { m: out }
    }

    /// Wraps a matrix already Hermitian by construction.
    pub(crate) fn wrap_exact(m: CMatrix) -> Self {
        debug_assert!(
            m.hermiticity_defect().0 == 0.0,
            "wrap_exact on inexact input"
        );
        HermMatrix { m }
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        HermMatrix::new(CMatrix::from_rows(rows)?)
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        HermMatrix::new(CMatrix::from_real_rows(rows)?)
    }

    pub fn diagonal(entries: &[f64]) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::BadShape { rows: 0, cols: 0 });
        }
        let n = entries.len();
        let mut m = CMatrix::zeros(n);
        for (i, &x) in entries.iter().enumerate() {
            if !x.is_finite() {
                return Err(Error::NonFiniteEntry { row: i, col: i });
            }
            m.set(i, i, Complex64::new(x, 0.0));
        }
        Ok(HermMatrix { m })
    }

    pub fn identity(dim: usize) -> Self {
        HermMatrix {
            m: CMatrix::identity(dim),
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.m.dim()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.m.get(i, j)
    }

    pub fn as_matrix(&self) -> &CMatrix {
        &self.m
    }

    pub fn into_matrix(self) -> CMatrix {
        self.m
    }

    /// Trace; exactly real because stored diagonals are.
    pub fn trace(&self) -> f64 {
        (0..self.dim()).map(|i| self.get(i, i).re).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.m.max_abs()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.m.frobenius_norm()
    }

    pub fn add(&self, rhs: &HermMatrix) -> HermMatrix {
        HermMatrix::wrap_exact(self.m.add(&rhs.m))
    }

    pub fn sub(&self, rhs: &HermMatrix) -> HermMatrix {
        HermMatrix::wrap_exact(self.m.sub(&rhs.m))
    }

    pub fn scale(&self, k: f64) -> HermMatrix {
        HermMatrix::wrap_exact(self.m.scale_re(k))
    }

    /// `M + c I`.
    pub fn shift(&self, c: f64) -> HermMatrix {
        let mut m = self.m.clone();
        for i in 0..m.dim() {
            let d = m.get(i, i);
            m.set(i, i, Complex64::new(d.re + c, 0.0));
        }
        HermMatrix { m }
    }

    /// `M * M`, exactly Hermitian for Hermitian `M`.
    pub fn square(&self) -> HermMatrix {
        HermMatrix::hermitian_part(&self.m.mul(&self.m))
    }

    /// Full spectral decomposition by cyclic Jacobi.
    pub fn eig(&self) -> SpectralDecomp {
        jacobi_eig(&self.m)
    }

    /// `M^p` with the PSD domain rules of [`SpectralDecomp::power`].
    pub fn frac_power(&self, p: f64) -> Result<HermMatrix> {
        self.eig().power(p)
    }

    /// `(|M|, M_+)` from one decomposition: `|M|` maps eigenvalues to their
    /// absolute value, `M_+ = (M + |M|)/2` to `max(eigenvalue, 0)`.
    pub fn abs_and_positive_part(&self) -> (HermMatrix, HermMatrix) {
        let dec = self.eig();
        let abs = dec
            .apply(f64::abs)
            .expect("absolute value is total on finite eigenvalues");
        let pos = dec
            .apply(|x| x.max(0.0))
            .expect("positive part is total on finite eigenvalues");
        (abs, pos)
    }

    pub fn psd_class(&self) -> PsdClass {
        self.eig().classify()
    }
}

/// Eigenvalues (ascending) with a unitary matrix of eigenvector columns.
#[derive(Debug, Clone)]
pub struct SpectralDecomp {
    eigenvalues: Vec<f64>,
    vectors: CMatrix,
}

impl SpectralDecomp {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Unitary matrix whose k-th column is the eigenvector of `eigenvalues()[k]`.
    pub fn vectors(&self) -> &CMatrix {
        &self.vectors
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues[self.eigenvalues.len() - 1]
    }

    pub fn spectral_radius(&self) -> f64 {
        self.min_eigenvalue().abs().max(self.max_eigenvalue().abs())
    }

    /// PSD slack for this spectrum: `tol::PSD_REL * max(1, spectral radius)`.
    pub fn psd_tolerance(&self) -> f64 {
        tol::rel(tol::PSD_REL, &[self.spectral_radius()])
    }

    /// `U diag(f(lambda)) U*`. Rejects eigenvalues where `f` returns a
    /// non-finite value. The result is assembled mirror-exactly (upper
    /// triangle computed, lower conjugated), so it is Hermitian bit-for-bit.
    pub fn apply<F: Fn(f64) -> f64>(&self, f: F) -> Result<HermMatrix> {
        let n = self.dim();
        let mut vals = Vec::with_capacity(n);
        for &lam in &self.eigenvalues {
            let v = f(lam);
            if !v.is_finite() {
                return Err(Error::SpectralDomain { eigenvalue: lam });
            }
            vals.push(v);
        }
        Ok(self.assemble(&vals))
    }

    /// Like [`Self::apply`] but from precomputed per-eigenvalue values, for
    /// callers that combine several scalar functions over one decomposition.
    pub(crate) fn apply_values(&self, vals: &[f64]) -> HermMatrix {
        debug_assert_eq!(vals.len(), self.dim());
        self.assemble(vals)
    }

    fn assemble(&self, vals: &[f64]) -> HermMatrix {
        let n = self.dim();
        let u = &self.vectors;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            let mut diag = 0.0;
            for (k, &v) in vals.iter().enumerate() {
                diag += u.get(i, k).norm_sqr() * v;
            }
            out.set(i, i, Complex64::new(diag, 0.0));
            for j in (i + 1)..n {
                let mut acc = C_ZERO;
                for (k, &v) in vals.iter().enumerate() {
                    acc += u.get(i, k) * u.get(j, k).conj() * v;
                }
                out.set(i, j, acc);
                out.set(j, i, acc.conj());
            }
        }
        HermMatrix::wrap_exact(out)
    }

    /// `M^p` with PSD domain rules relative to [`Self::psd_tolerance`]:
    /// - `p > 0`: eigenvalues below `-tau` are rejected, those inside
    ///   `(-tau, tau)` count as zero (and `0^p = 0`);
    /// - `p == 0`: needs all eigenvalues above `tau`; returns the identity;
    /// - `p < 0`: needs all eigenvalues above `tau`.
    pub fn power(&self, p: f64) -> Result<HermMatrix> {
        let tau = self.psd_tolerance();
        let min = self.min_eigenvalue();
        if p == 0.0 {
            if min <= tau {
                return Err(Error::SingularPower {
                    eigenvalue: min,
                    tol: tau,
                    power: p,
                });
            }
            return Ok(HermMatrix::identity(self.dim()));
        }
        let mut vals = Vec::with_capacity(self.dim());
        for &lam in &self.eigenvalues {
            let v = if p > 0.0 {
                if lam <= -tau {
                    return Err(Error::NotPositiveSemidefinite {
                        eigenvalue: lam,
                        tol: tau,
                    });
                }
                if lam < tau {
                    0.0
                } else {
                    lam.powf(p)
                }
            } else {
                if lam <= tau {
                    return Err(Error::SingularPower {
                        eigenvalue: lam,
                        tol: tau,
                        power: p,
                    });
                }
                lam.powf(p)
            };
            if !v.is_finite() {
                return Err(Error::SpectralDomain { eigenvalue: lam });
            }
            vals.push(v);
        }
        Ok(self.assemble(&vals))
    }

    /// `U diag(lambda) U*`; equals the input up to roundoff.
    pub fn reconstruct(&self) -> HermMatrix {
        self.assemble(&self.eigenvalues)
    }

    pub fn classify(&self) -> PsdClass {
        let tau = self.psd_tolerance();
        let min = self.min_eigenvalue();
        let classification = if min >= tau {
            Classification::PositiveDefinite
        } else if min >= -tau {
            Classification::PositiveSemidefinite
        } else {
            Classification::Indefinite
        };
        PsdClass {
            classification,
            min_eigenvalue: min,
            tolerance: tau,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    PositiveDefinite,
    PositiveSemidefinite,
    Indefinite,
}

/// Order classification with the eigenvalue that decided it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PsdClass {
    pub classification: Classification,
    pub min_eigenvalue: f64,
    pub tolerance: f64,
}

impl PsdClass {
    /// True for both the definite and semidefinite classifications.
    pub fn is_psd(&self) -> bool {
        self.classification != Classification::Indefinite
    }
}

/// Classifies `b - a` in the Loewner order.
pub fn loewner_leq(a: &HermMatrix, b: &HermMatrix) -> Result<PsdClass> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(b.sub(a).psd_class())
}

/// `[A, B] = AB - BA`; skew-Hermitian for Hermitian inputs.
pub fn commutator(a: &HermMatrix, b: &HermMatrix) -> Result<CMatrix> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let ab = a.as_matrix().mul(b.as_matrix());
    let ba = b.as_matrix().mul(a.as_matrix());
    Ok(ab.sub(&ba))
}

/// `{A, B} = AB + BA`; Hermitian for Hermitian inputs.
pub fn anticommutator(a: &HermMatrix, b: &HermMatrix) -> Result<HermMatrix> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let ab = a.as_matrix().mul(b.as_matrix());
    let ba = b.as_matrix().mul(a.as_matrix());
    Ok(HermMatrix::hermitian_part(&ab.add(&ba)))
}

/// `X #_nu Y = X^(1/2) (X^(-1/2) Y X^(-1/2))^nu X^(1/2)` for positive
/// definite `X`, positive semidefinite `Y`, `nu` in `[0, 1]`.
pub fn power_mean(x: &HermMatrix, y: &HermMatrix, nu: f64) -> Result<HermMatrix> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            left: x.dim(),
            right: y.dim(),
        });
    }
    if !(0.0..=1.0).contains(&nu) || !nu.is_finite() {
        return Err(Error::ParamRange {
            name: "nu",
            value: nu,
            lo: 0.0,
            hi: 1.0,
        });
    }
    let dx = x.eig();
    let xh = dx.power(0.5)?;
    let xmh = dx.power(-0.5)?;
    let inner =
        HermMatrix::hermitian_part(&xmh.as_matrix().mul(y.as_matrix()).mul(xmh.as_matrix()));
    let inner_nu = inner.eig().power(nu)?;
    Ok(HermMatrix::hermitian_part(
        &xh.as_matrix().mul(inner_nu.as_matrix()).mul(xh.as_matrix()),
    ))
}

fn off_diagonal_frobenius(a: &CMatrix) -> f64 {
    let n = a.dim();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a.get(i, j).norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Cyclic Jacobi with complex rotations. Input must be exactly Hermitian
/// (the `HermMatrix` storage invariant); rotations preserve that exactly
/// because IEEE arithmetic commutes with conjugation.
fn jacobi_eig(m: &CMatrix) -> SpectralDecomp {
    let n = m.dim();
    let mut a = m.clone();
    let mut u = CMatrix::identity(n);
    let norm = a.frobenius_norm();
    if n > 1 && norm > 0.0 {
        let stop = tol::JACOBI_OFF_REL * norm;
        for _ in 0..MAX_JACOBI_SWEEPS {
            if off_diagonal_frobenius(&a) <= stop {
                break;
            }
            for p in 0..n - 1 {
                for q in (p + 1)..n {
                    rotate(&mut a, &mut u, p, q);
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    order.sort_by(|&i, &j| {
        diag[i]
            .partial_cmp(&diag[j])
            .expect("Jacobi preserves finiteness")
    });
    let eigenvalues: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let mut vectors = CMatrix::zeros(n);
    for (new_col, &old_col) in order.iter().enumerate() {
        // Phase convention: first component of modulus above PHASE_MIN
        // becomes real positive. Unit columns always have one.
        let mut phase = C_ONE;
        for i in 0..n {
            let z = u.get(i, old_col);
            if z.norm() > tol::PHASE_MIN {
                phase = z.conj() / z.norm();
                break;
            }
        }
        for i in 0..n {
            vectors.set(i, new_col, u.get(i, old_col) * phase);
        }
    }
    SpectralDecomp {
        eigenvalues,
        vectors,
    }
}

/// One Jacobi rotation zeroing the `(p, q)` pivot: `A <- R* A R`, `U <- U R`,
/// where `R` is the identity outside rows/columns `p, q` and
/// `R[p][p] = c e^(i alpha)`, `R[p][q] = s e^(i alpha)`, `R[q][p] = -s`,
/// `R[q][q] = c`, with `alpha = arg A[p][q]`.
fn rotate(a: &mut CMatrix, u: &mut CMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r;
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;
    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        1.0 / (tau - (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let cp = phase * c;
    let sp = phase * s;
    let n = a.dim();
    for i in 0..n {
        let aip = a.get(i, p);
        let aiq = a.get(i, q);
        a.set(i, p, aip * cp - aiq * s);
        a.set(i, q, aip * sp + aiq * c);
        let uip = u.get(i, p);
        let uiq = u.get(i, q);
        u.set(i, p, uip * cp - uiq * s);
        u.set(i, q, uip * sp + uiq * c);
    }
    let cpc = phase.conj() * c;
    let spc = phase.conj() * s;
    for j in 0..n {
        let apj = a.get(p, j);
        let aqj = a.get(q, j);
        a.set(p, j, cpc * apj - aqj * s);
        a.set(q, j, spc * apj + aqj * c);
    }
    a.set(p, q, C_ZERO);
    a.set(q, p, C_ZERO);
    let dp = a.get(p, p);
    a.set(p, p, Complex64::new(dp.re, 0.0));
    let dq = a.get(q, q);
    a.set(q, q, Complex64::new(dq.re, 0.0));
}
