//! Named information quantities over states and observables: deformed
//! relative entropies, variance and covariance, the skew-information family
//! with its correlation measures, and the two-parameter trace quantity that
//! specializes to several of them.
//!
//! Quantities that are real by symmetry are computed through [`real_trace`],
//! so an imaginary residue above tolerance surfaces as an error instead of
//! being dropped. Quantities with two algebraically equal forms compute both
//! and reject disagreement beyond [`tol::FORM_AGREEMENT`]; the returned value
//! is always the first-listed form.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::deformed::{ln_nu_op, Deformation};
use crate::error::{Error, Result};
use crate::matrix::{
    anticommutator, commutator, real_trace, trace_product, CMatrix, HermMatrix, SpectralDecomp,
};
use crate::tol;

/// Self-adjoint operator measured against a state; Hermitian, no positivity.
pub type Observable = HermMatrix;

fn same_dim(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DimensionMismatch { left, right });
    }
    Ok(())
}

fn forms_agree(what: &'static str, a: f64, b: f64) -> Result<()> {
    let delta = (a - b).abs();
    if delta > tol::rel(tol::FORM_AGREEMENT, &[a, b]) {
        return Err(Error::FormDisagreement { what, delta });
    }
    Ok(())
}

fn cforms_agree(what: &'static str, a: Complex64, b: Complex64) -> Result<()> {
    let delta = (a - b).norm();
    if delta > tol::rel(tol::FORM_AGREEMENT, &[a.norm(), b.norm()]) {
        return Err(Error::FormDisagreement { what, delta });
    }
    Ok(())
}

/// Positive semidefinite Hermitian matrix with unit trace.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "HermMatrix", into = "HermMatrix")]
pub struct DensityMatrix {
    m: HermMatrix,
}

impl TryFrom<HermMatrix> for DensityMatrix {
    type Error = Error;
    fn try_from(m: HermMatrix) -> Result<Self> {
        DensityMatrix::new(m)
    }
}

impl From<DensityMatrix> for HermMatrix {
    fn from(d: DensityMatrix) -> HermMatrix {
        d.m
    }
}

impl DensityMatrix {
    pub fn new(m: HermMatrix) -> Result<Self> {
        let class = m.psd_class();
        if !class.is_psd() {
            return Err(Error::NotPositiveSemidefinite {
                eigenvalue: class.min_eigenvalue,
                tol: class.tolerance,
            });
        }
        let trace = m.trace();
        if (trace - 1.0).abs() > tol::UNIT_TRACE {
            return Err(Error::NotUnitTrace {
                trace,
                tol: tol::UNIT_TRACE,
            });
        }
        Ok(DensityMatrix { m })
    }

    /// Scales a positive semidefinite matrix with positive trace to unit
    /// trace.
    pub fn normalized(m: HermMatrix) -> Result<Self> {
        let class = m.psd_class();
        if !class.is_psd() {
            return Err(Error::NotPositiveSemidefinite {
                eigenvalue: class.min_eigenvalue,
                tol: class.tolerance,
            });
        }
        let trace = m.trace();
        if trace <= class.tolerance {
            return Err(Error::HypothesisNotSatisfied {
                what: format!("normalization needs a positive trace, got {trace:.3e}"),
            });
        }
        Ok(DensityMatrix {
            m: m.scale(1.0 / trace),
        })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.m.dim()
    }

    pub fn matrix(&self) -> &HermMatrix {
        &self.m
    }

    pub fn into_matrix(self) -> HermMatrix {
        self.m
    }

    pub fn eig(&self) -> SpectralDecomp {
        self.m.eig()
    }
}

/// Scalar functions of a state admitted by the generalized skew
/// informations: `power(p): x -> x^p` and `mix(a): x -> (x^a + x^(1-a))/2`,
/// parameters in `[0, 1]`.
///
/// The set is closed deliberately: every function here is operator monotone
/// on `[0, oo)` (powers by the Loewner-Heinz theorem, mixes as averages of
/// two powers), so any pair drawn from the set is a monotonic pair. That
/// hypothesis cannot be checked numerically for black-box functions, so
/// arbitrary user functions are not accepted.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawFnSpec", into = "RawFnSpec")]
pub struct ScalarFnSpec {
    kind: FnKind,
    param: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FnKind {
    Power,
    Mix,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum RawFnSpec {
    Power(f64),
    Mix(f64),
}

impl TryFrom<RawFnSpec> for ScalarFnSpec {
    type Error = Error;
    fn try_from(raw: RawFnSpec) -> Result<Self> {
        match raw {
            RawFnSpec::Power(p) => ScalarFnSpec::power(p),
            RawFnSpec::Mix(a) => ScalarFnSpec::mix(a),
        }
    }
}

impl From<ScalarFnSpec> for RawFnSpec {
    fn from(s: ScalarFnSpec) -> RawFnSpec {
        match s.kind {
            FnKind::Power => RawFnSpec::Power(s.param),
            FnKind::Mix => RawFnSpec::Mix(s.param),
        }
    }
}

impl std::fmt::Display for ScalarFnSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.kind {
            FnKind::Power => write!(f, "power({})", self.param),
            FnKind::Mix => write!(f, "mix({})", self.param),
        }
    }
}

impl ScalarFnSpec {
    pub fn power(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) || !p.is_finite() {
            return Err(Error::ParamRange {
                name: "power exponent",
                value: p,
                lo: 0.0,
                hi: 1.0,
            });
        }
        Ok(ScalarFnSpec {
            kind: FnKind::Power,
            param: p,
        })
    }

    pub fn mix(alpha: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha) || !alpha.is_finite() {
            return Err(Error::ParamRange {
                name: "mix parameter",
                value: alpha,
                lo: 0.0,
                hi: 1.0,
            });
        }
        Ok(ScalarFnSpec {
            kind: FnKind::Mix,
            param: alpha,
        })
    }

    /// Scalar value at an eigenvalue, with the same near-zero clamp as the
    /// fractional matrix power: `lam` inside `(-tau, tau)` counts as zero,
    /// which is in-domain for positive exponents and rejected for `x^0`.
    fn eval(self, lam: f64, tau: f64) -> Result<f64> {
        match self.kind {
            FnKind::Power => powf_clamped(lam, self.param, tau),
            FnKind::Mix => Ok(0.5
                * (powf_clamped(lam, self.param, tau)?
                    + powf_clamped(lam, 1.0 - self.param, tau)?)),
        }
    }

    /// Operator lift through an existing decomposition of the state.
    pub fn apply(self, dec: &SpectralDecomp) -> Result<HermMatrix> {
        let tau = dec.psd_tolerance();
        let mut vals = Vec::with_capacity(dec.dim());
        for &lam in dec.eigenvalues() {
            vals.push(self.eval(lam, tau)?);
        }
        Ok(dec.apply_values(&vals))
    }

    pub fn apply_to(self, m: &HermMatrix) -> Result<HermMatrix> {
        self.apply(&m.eig())
    }
}

fn powf_clamped(lam: f64, p: f64, tau: f64) -> Result<f64> {
    if p == 0.0 {
        if lam <= tau {
            return Err(Error::SingularPower {
                eigenvalue: lam,
                tol: tau,
                power: p,
            });
        }
        return Ok(1.0);
    }
    if lam <= -tau {
        return Err(Error::NotPositiveSemidefinite {
            eigenvalue: lam,
            tol: tau,
        });
    }
    if lam < tau {
        return Ok(0.0);
    }
    Ok(lam.powf(p))
}

/// Deformed relative entropy `(Tr[X] - Tr[X^(1-nu) Y^nu]) / nu` for positive
/// semidefinite `X`, `Y`. At `nu = 1` the exponent 0 appears, so `X` must
/// then be positive definite.
pub fn tsallis_rel_entropy(x: &HermMatrix, y: &HermMatrix, nu: Deformation) -> Result<f64> {
    same_dim(x.dim(), y.dim())?;
    let n = nu.get();
    let x_pow = x.frac_power(1.0 - n)?;
    let y_pow = y.frac_power(n)?;
    let cross = real_trace(trace_product(x_pow.as_matrix(), y_pow.as_matrix()))?;
    Ok((x.trace() - cross) / n)
}

/// Relative entropy `Tr[X (log X - log Y)]` for positive definite `X`, `Y`;
/// the undeformed limit of [`tsallis_rel_entropy`].
pub fn umegaki_rel_entropy(x: &HermMatrix, y: &HermMatrix) -> Result<f64> {
    same_dim(x.dim(), y.dim())?;
    let diff = log_op(x)?.sub(&log_op(y)?);
    real_trace(trace_product(x.as_matrix(), diff.as_matrix()))
}

/// Matrix logarithm of a positive definite matrix.
pub fn log_op(m: &HermMatrix) -> Result<HermMatrix> {
    let dec = m.eig();
    let tau = dec.psd_tolerance();
    if dec.min_eigenvalue() <= tau {
        return Err(Error::NotPositiveDefinite {
            eigenvalue: dec.min_eigenvalue(),
            tol: tau,
        });
    }
    dec.apply(f64::ln)
}

/// Operator-valued deformed relative entropy
/// `X^(1/2) ln_nu(X^(-1/2) Y X^(-1/2)) X^(1/2)` for positive definite `X`
/// and positive semidefinite `Y`. Its negated trace upper-bounds the scalar
/// entropy of the same pair.
pub fn tsallis_rel_operator_entropy(
    x: &HermMatrix,
    y: &HermMatrix,
    nu: Deformation,
) -> Result<HermMatrix> {
    same_dim(x.dim(), y.dim())?;
    let dx = x.eig();
    let xh = dx.power(0.5)?;
    let xmh = dx.power(-0.5)?;
    let inner =
        HermMatrix::hermitian_part(&xmh.as_matrix().mul(y.as_matrix()).mul(xmh.as_matrix()));
    let ln_inner = ln_nu_op(&inner, nu)?;
    Ok(HermMatrix::hermitian_part(
        &xh.as_matrix().mul(ln_inner.as_matrix()).mul(xh.as_matrix()),
    ))
}

fn mean_of(rho: &DensityMatrix, h: &HermMatrix) -> Result<f64> {
    real_trace(trace_product(rho.matrix().as_matrix(), h.as_matrix()))
}

/// `H - Tr[rho H] I`, the observable centered at its expectation.
pub fn centered(rho: &DensityMatrix, h: &HermMatrix) -> Result<HermMatrix> {
    same_dim(rho.dim(), h.dim())?;
    Ok(h.shift(-mean_of(rho, h)?))
}

/// Variance `Tr[rho (H - Tr[rho H] I)^2]`, cross-checked against the
/// expanded form `Tr[rho H^2] - Tr[rho H]^2`.
pub fn variance(rho: &DensityMatrix, h: &HermMatrix) -> Result<f64> {
    same_dim(rho.dim(), h.dim())?;
    let r = rho.matrix().as_matrix();
    let mean = mean_of(rho, h)?;
    let h0 = h.shift(-mean);
    let centered_form = real_trace(trace_product(r, h0.square().as_matrix()))?;
    let expanded = real_trace(trace_product(r, h.square().as_matrix()))? - mean * mean;
    forms_agree("variance", centered_form, expanded)?;
    Ok(centered_form)
}

/// Covariance `Tr[rho (A - Tr[rho A] I)(B - Tr[rho B] I)]`, complex in
/// general for noncommuting observables; cross-checked against
/// `Tr[rho A B] - Tr[rho A] Tr[rho B]`.
pub fn covariance(rho: &DensityMatrix, a: &HermMatrix, b: &HermMatrix) -> Result<Complex64> {
    same_dim(rho.dim(), a.dim())?;
    same_dim(rho.dim(), b.dim())?;
    let r = rho.matrix().as_matrix();
    let mean_a = mean_of(rho, a)?;
    let mean_b = mean_of(rho, b)?;
    let a0 = a.shift(-mean_a);
    let b0 = b.shift(-mean_b);
    let centered_form = trace_product(r, &a0.as_matrix().mul(b0.as_matrix()));
    let expanded =
        trace_product(r, &a.as_matrix().mul(b.as_matrix())) - Complex64::new(mean_a * mean_b, 0.0);
    cforms_agree("covariance", centered_form, expanded)?;
    Ok(centered_form)
}

/// Shared engine for the function-pair skew informations. With
/// `F = f(rho)`, `G = g(rho)`, and `H0` the centered observable, computes
/// the trace form `Tr[F G H0^2] - Tr[F H0 G H0]` and the commutator form
/// `(1/2) Tr[(i[F, H0]) (i[G, H0])]`, rejects disagreement, and returns the
/// commutator form: it is free of the cancellation between the two traces
/// and exactly zero for commuting inputs, where the trace form leaves ulp
/// residue that downstream square roots would amplify. `F G` is assembled
/// eigenvalue-wise, so the two factors commute exactly.
fn skew_engine(
    rho: &DensityMatrix,
    h: &HermMatrix,
    f: ScalarFnSpec,
    g: ScalarFnSpec,
) -> Result<f64> {
    same_dim(rho.dim(), h.dim())?;
    let dec = rho.eig();
    let tau = dec.psd_tolerance();
    let n = dec.dim();
    let mut fv = Vec::with_capacity(n);
    let mut gv = Vec::with_capacity(n);
    let mut fgv = Vec::with_capacity(n);
    for &lam in dec.eigenvalues() {
        let a = f.eval(lam, tau)?;
        let b = g.eval(lam, tau)?;
        fv.push(a);
        gv.push(b);
        fgv.push(a * b);
    }
    let fm = dec.apply_values(&fv);
    let gm = dec.apply_values(&gv);
    let fgm = dec.apply_values(&fgv);
    let h0 = centered(rho, h)?;
    let h0m = h0.as_matrix();
    let trace_form = real_trace(trace_product(fgm.as_matrix(), &h0m.mul(h0m)))?
        - real_trace(trace_product(
            &fm.as_matrix().mul(h0m),
            &gm.as_matrix().mul(h0m),
        ))?;
    let cf = commutator(&fm, &h0)?;
    let cg = commutator(&gm, &h0)?;
    let commutator_form = -0.5 * real_trace(trace_product(&cf, &cg))?;
    forms_agree("skew information", trace_form, commutator_form)?;
    Ok(commutator_form)
}

/// Skew information `(1/2) Tr[(i[rho^(1/2), H0])^2]`, equal to
/// `Tr[rho H0^2] - Tr[rho^(1/2) H0 rho^(1/2) H0]`; both forms computed and
/// compared. Zero iff `rho` and `H` commute.
pub fn wy_skew(rho: &DensityMatrix, h: &HermMatrix) -> Result<f64> {
    let half = ScalarFnSpec::power(0.5)?;
    skew_engine(rho, h, half, half)
}

/// One-parameter skew information
/// `(1/2) Tr[(i[rho^alpha, H0])(i[rho^(1-alpha), H0])]` for `alpha` in
/// `[0, 1]`; symmetric under `alpha <-> 1 - alpha`, recovering [`wy_skew`]
/// at `alpha = 1/2`. The endpoints need a positive definite state
/// (`rho^0` enters).
pub fn wyd_skew(rho: &DensityMatrix, h: &HermMatrix, alpha: f64) -> Result<f64> {
    let f = ScalarFnSpec::power(alpha)?;
    let g = ScalarFnSpec::power(1.0 - alpha)?;
    skew_engine(rho, h, f, g)
}

/// Function-pair skew information
/// `I(H) = Tr[f(rho) g(rho) H0^2] - Tr[f(rho) H0 g(rho) H0]`.
pub fn fg_skew(
    rho: &DensityMatrix,
    h: &HermMatrix,
    f: ScalarFnSpec,
    g: ScalarFnSpec,
) -> Result<f64> {
    skew_engine(rho, h, f, g)
}

/// Symmetrized-power skew information: [`fg_skew`] with
/// `f = g = mix(alpha)`, i.e. both functions `(x^alpha + x^(1-alpha))/2`.
pub fn k_skew(rho: &DensityMatrix, h: &HermMatrix, alpha: f64) -> Result<f64> {
    let m = ScalarFnSpec::mix(alpha)?;
    skew_engine(rho, h, m, m)
}

/// Companion quantity `(1/2) Tr[{rho^(1/2), H0}^2]` (anticommutator square,
/// no imaginary unit), nonnegative and satisfying `V = (I + J)/2` and
/// `U = sqrt(I J)` together with the variance and [`wy_skew`].
pub fn j_quantity(rho: &DensityMatrix, h: &HermMatrix) -> Result<f64> {
    same_dim(rho.dim(), h.dim())?;
    let sqrt = rho.eig().power(0.5)?;
    let h0 = centered(rho, h)?;
    let ac = anticommutator(&sqrt, &h0)?;
    Ok(0.5 * real_trace(trace_product(ac.as_matrix(), ac.as_matrix()))?)
}

/// Sign-flipped audit variant of [`j_quantity`] with the imaginary unit
/// inside the square: `(1/2) Tr[(i{rho^(1/2), H0})^2] = -J`. The convention
/// without the unit is the one consistent with `V = (I + J)/2` and
/// `U = sqrt(I J)`, so this form exists only for comparison.
pub fn j_quantity_literal(rho: &DensityMatrix, h: &HermMatrix) -> Result<f64> {
    Ok(-j_quantity(rho, h)?)
}

fn u_from_parts(v: f64, skew: f64) -> Result<f64> {
    let radicand = v * v - (v - skew) * (v - skew);
    if radicand < -tol::rel(tol::RADICAND_FAIL_REL, &[v * v]) {
        return Err(Error::NegativeRadicand { value: radicand });
    }
    Ok(radicand.max(0.0).sqrt())
}

/// Uncertainty measure `sqrt(V^2 - (V - I)^2)` with `I` the skew
/// information; equals `sqrt(I J)` and never exceeds the variance.
pub fn u_quantity(rho: &DensityMatrix, h: &HermMatrix) -> Result<f64> {
    u_from_parts(variance(rho, h)?, wy_skew(rho, h)?)
}

/// One-parameter uncertainty measure `sqrt(V^2 - (V - I_alpha)^2)` built on
/// [`wyd_skew`]; recovers [`u_quantity`] at `alpha = 1/2`.
pub fn u_quantity_alpha(rho: &DensityMatrix, h: &HermMatrix, alpha: f64) -> Result<f64> {
    u_from_parts(variance(rho, h)?, wyd_skew(rho, h, alpha)?)
}

/// Shared engine for the correlation measures:
/// `Tr[f(rho) g(rho) X* Y] - Tr[f(rho) X* g(rho) Y]` for arbitrary square
/// `X`, `Y`. Conjugate-linear in `X`, linear in `Y`. Computed as the
/// algebraically equal bracket form `Tr[f(rho) [g(rho), X*] Y]`, which is
/// exactly zero for commuting inputs, and audited against the difference
/// of the two traces.
fn corr_engine(
    rho: &DensityMatrix,
    x: &CMatrix,
    y: &CMatrix,
    f: ScalarFnSpec,
    g: ScalarFnSpec,
) -> Result<Complex64> {
    same_dim(rho.dim(), x.dim())?;
    same_dim(rho.dim(), y.dim())?;
    if !x.all_finite() || !y.all_finite() {
        return Err(Error::NonFiniteEntry { row: 0, col: 0 });
    }
    let dec = rho.eig();
    let tau = dec.psd_tolerance();
    let n = dec.dim();
    let mut fv = Vec::with_capacity(n);
    let mut gv = Vec::with_capacity(n);
    let mut fgv = Vec::with_capacity(n);
    for &lam in dec.eigenvalues() {
        let a = f.eval(lam, tau)?;
        let b = g.eval(lam, tau)?;
        fv.push(a);
        gv.push(b);
        fgv.push(a * b);
    }
    let fm = dec.apply_values(&fv);
    let gm = dec.apply_values(&gv);
    let fgm = dec.apply_values(&fgv);
    let xs = x.adjoint();
    let gxs = gm.as_matrix().mul(&xs);
    let xsg = xs.mul(gm.as_matrix());
    let bracket = trace_product(&fm.as_matrix().mul(&gxs.sub(&xsg)), y);
    let first = trace_product(fgm.as_matrix(), &xs.mul(y));
    let second = trace_product(&fm.as_matrix().mul(&xs), &gm.as_matrix().mul(y));
    cforms_agree("correlation", bracket, first - second)?;
    Ok(bracket)
}

/// Correlation `Tr[rho X* Y] - Tr[rho^(1/2) X* rho^(1/2) Y]`;
/// `corr(rho, H0, H0)` recovers [`wy_skew`].
pub fn corr(rho: &DensityMatrix, x: &CMatrix, y: &CMatrix) -> Result<Complex64> {
    let half = ScalarFnSpec::power(0.5)?;
    corr_engine(rho, x, y, half, half)
}

/// One-parameter correlation
/// `Tr[rho X* Y] - Tr[rho^alpha X* rho^(1-alpha) Y]`.
pub fn corr_alpha(rho: &DensityMatrix, x: &CMatrix, y: &CMatrix, alpha: f64) -> Result<Complex64> {
    let f = ScalarFnSpec::power(alpha)?;
    let g = ScalarFnSpec::power(1.0 - alpha)?;
    corr_engine(rho, x, y, f, g)
}

/// Function-pair correlation
/// `Tr[f(rho) g(rho) X* Y] - Tr[f(rho) X* g(rho) Y]`.
pub fn fg_corr(
    rho: &DensityMatrix,
    x: &CMatrix,
    y: &CMatrix,
    f: ScalarFnSpec,
    g: ScalarFnSpec,
) -> Result<Complex64> {
    corr_engine(rho, x, y, f, g)
}

/// Symmetrized-power correlation: [`fg_corr`] with `f = g = mix(alpha)`;
/// `corr_k(rho, H0, H0)` recovers [`k_skew`].
pub fn corr_k(rho: &DensityMatrix, x: &CMatrix, y: &CMatrix, alpha: f64) -> Result<Complex64> {
    let m = ScalarFnSpec::mix(alpha)?;
    corr_engine(rho, x, y, m, m)
}

/// Two-parameter trace quantity
/// `L_t(X, Y; H) = Tr[X H^2] - Tr[X^t H Y^(1-t) H]` for positive
/// semidefinite `X`, `Y` and Hermitian `H`, `t` in `[0, 1]`.
///
/// Specializations: `L_alpha(rho, rho; H0)` is the one-parameter skew
/// information, and `L_(1-nu)(X, Y; I) / nu` is the deformed relative
/// entropy.
pub fn l_quantity(x: &HermMatrix, y: &HermMatrix, h: &HermMatrix, t: f64) -> Result<f64> {
    same_dim(x.dim(), y.dim())?;
    same_dim(x.dim(), h.dim())?;
    if !(0.0..=1.0).contains(&t) || !t.is_finite() {
        return Err(Error::ParamRange {
            name: "t",
            value: t,
            lo: 0.0,
            hi: 1.0,
        });
    }
    let xt = x.frac_power(t)?;
    let y1t = y.frac_power(1.0 - t)?;
    let first = real_trace(trace_product(x.as_matrix(), h.square().as_matrix()))?;
    let second = real_trace(trace_product(
        &xt.as_matrix().mul(h.as_matrix()),
        &y1t.as_matrix().mul(h.as_matrix()),
    ))?;
    Ok(first - second)
}
