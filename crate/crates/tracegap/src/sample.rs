//! Seeded random matrix families. Entries are drawn row-major, one complex
//! Gaussian per entry (a Box-Muller pair gives the real and imaginary
//! parts), so a stream position fully determines the sampled matrix.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{CMatrix, HermMatrix};
use crate::quantities::DensityMatrix;
use crate::rng::SplitMix64;

/// Offset making "positive definite" samples quantitatively so: `pd` draws
/// have smallest eigenvalue at least `PD_FLOOR * scale`.
pub const PD_FLOOR: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SampleKind {
    /// `G G*` for a square complex Gaussian factor `G`.
    Psd,
    /// `G G* + PD_FLOOR * scale * I`.
    Pd,
    /// Trace-normalized `G G*`.
    Density,
    /// Hermitian part of a complex Gaussian matrix.
    Observable,
    /// Pair `(X, Y)` with `I <= Y <= X`: `Y = I + P1`, `X = Y + P2`.
    LoewnerChain,
    /// Pair of independent trace-one positive matrices.
    UnitTracePair,
}

/// A reproducible draw: kind, dimension, entry scale, and seed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampleSpec {
    pub dim: usize,
    pub kind: SampleKind,
    pub scale: f64,
    pub seed: u64,
}

impl SampleSpec {
    fn validate(&self) -> Result<()> {
        if self.dim < 2 {
            return Err(Error::ParamRange {
                name: "dim",
                value: self.dim as f64,
                lo: 2.0,
                hi: f64::INFINITY,
            });
        }
        if self.scale <= 0.0 || !self.scale.is_finite() {
            return Err(Error::ParamRange {
                name: "scale",
                value: self.scale,
                lo: 0.0,
                hi: f64::INFINITY,
            });
        }
        Ok(())
    }
}

/// Result of one [`sample`] call; pair kinds fill both slots.
#[derive(Debug, Clone)]
pub enum Sampled {
    Matrix(HermMatrix),
    Pair(HermMatrix, HermMatrix),
    State(DensityMatrix),
}

/// Draws the matrix (or pair) described by `spec` from a fresh stream
/// seeded with `spec.seed`.
pub fn sample(spec: &SampleSpec) -> Result<Sampled> {
    spec.validate()?;
    let mut rng = SplitMix64::new(spec.seed);
    Ok(match spec.kind {
        SampleKind::Psd => Sampled::Matrix(sample_psd(&mut rng, spec.dim, spec.scale)),
        SampleKind::Pd => Sampled::Matrix(sample_pd(&mut rng, spec.dim, spec.scale)),
        SampleKind::Density => Sampled::State(sample_density(&mut rng, spec.dim, spec.scale)),
        SampleKind::Observable => {
            Sampled::Matrix(sample_observable(&mut rng, spec.dim, spec.scale))
        }
        SampleKind::LoewnerChain => {
            let (x, y) = sample_loewner_chain(&mut rng, spec.dim, spec.scale);
            Sampled::Pair(x, y)
        }
        SampleKind::UnitTracePair => {
            let (x, y) = sample_unit_trace_pair(&mut rng, spec.dim, spec.scale);
            Sampled::Pair(x, y)
        }
    })
}

/// Square factor with entries `scale * (g1 + i g2)`, drawn row-major.
pub fn gaussian_factor(rng: &mut SplitMix64, dim: usize, scale: f64) -> CMatrix {
    let mut m = CMatrix::zeros(dim);
    for r in 0..dim {
        for c in 0..dim {
            let (g1, g2) = rng.next_gaussian_pair();
            m.set(r, c, num_complex::Complex64::new(scale * g1, scale * g2));
        }
    }
    m
}

pub fn sample_psd(rng: &mut SplitMix64, dim: usize, scale: f64) -> HermMatrix {
    let g = gaussian_factor(rng, dim, scale);
    HermMatrix::hermitian_part(&g.mul(&g.adjoint()))
}

pub fn sample_pd(rng: &mut SplitMix64, dim: usize, scale: f64) -> HermMatrix {
    sample_psd(rng, dim, scale).shift(PD_FLOOR * scale)
}

pub fn sample_density(rng: &mut SplitMix64, dim: usize, scale: f64) -> DensityMatrix {
    let psd = sample_psd(rng, dim, scale);
    DensityMatrix::normalized(psd).expect("Gaussian Gram matrix has positive trace")
}

pub fn sample_observable(rng: &mut SplitMix64, dim: usize, scale: f64) -> HermMatrix {
    HermMatrix::hermitian_part(&gaussian_factor(rng, dim, scale))
}

/// Ordered pair `(X, Y)` with `I <= Y <= X`, returned largest first.
pub fn sample_loewner_chain(
    rng: &mut SplitMix64,
    dim: usize,
    scale: f64,
) -> (HermMatrix, HermMatrix) {
    let y = sample_psd(rng, dim, scale).shift(1.0);
    let x = y.add(&sample_psd(rng, dim, scale));
    (x, y)
}

pub fn sample_unit_trace_pair(
    rng: &mut SplitMix64,
    dim: usize,
    scale: f64,
) -> (HermMatrix, HermMatrix) {
    let x = sample_density(rng, dim, scale).into_matrix();
    let y = sample_density(rng, dim, scale).into_matrix();
    (x, y)
}
