//! Shared test support: an independent scalar implementation of the
//! library's quantities and inequality sides for commuting (diagonal)
//! inputs, plus builders that lift diagonals into library types.
//!
//! Everything in `scalar` works on plain `&[f64]` slices with elementary
//! arithmetic, never touching the matrix machinery, so agreement between
//! the two is evidence that the spectral code paths are wired correctly.

#![allow(dead_code)]

use num_complex::Complex64;
use tracegap::matrix::{CMatrix, HermMatrix};
use tracegap::quantities::DensityMatrix;
use tracegap::rng::SplitMix64;

pub fn herm_diag(d: &[f64]) -> HermMatrix {
    HermMatrix::diagonal(d).expect("finite diagonal")
}

pub fn density_diag(p: &[f64]) -> DensityMatrix {
    DensityMatrix::new(herm_diag(p)).expect("diagonal probabilities")
}

pub fn cmatrix_diag(z: &[Complex64]) -> CMatrix {
    let mut m = CMatrix::zeros(z.len());
    for (i, &v) in z.iter().enumerate() {
        m.set(i, i, v);
    }
    m
}

pub fn uniform(rng: &mut SplitMix64, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * rng.next_f64()
}

pub fn uniform_vec(rng: &mut SplitMix64, n: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..n).map(|_| uniform(rng, lo, hi)).collect()
}

/// Probabilities normalized in the test, so the oracle and the library
/// consume bit-identical diagonals.
pub fn prob_vec(rng: &mut SplitMix64, n: usize) -> Vec<f64> {
    let raw = uniform_vec(rng, n, 0.1, 1.0);
    let s: f64 = raw.iter().sum();
    raw.iter().map(|&u| u / s).collect()
}

/// Scalar-summation reference implementations for diagonal inputs.
pub mod scalar {
    use num_complex::Complex64;

    pub fn ln_nu(x: f64, nu: f64) -> f64 {
        (x.powf(nu) - 1.0) / nu
    }

    pub fn exp_nu(x: f64, nu: f64) -> f64 {
        (1.0 + nu * x).powf(1.0 / nu)
    }

    pub fn kantorovich(nu: f64, h: f64) -> f64 {
        let hn = h.powf(nu);
        (hn - h) / ((nu - 1.0) * (h - 1.0)) * ((nu - 1.0) / nu * (hn - 1.0) / (hn - h)).powf(nu)
    }

    pub fn trace(x: &[f64]) -> f64 {
        x.iter().sum()
    }

    pub fn tsallis(x: &[f64], y: &[f64], nu: f64) -> f64 {
        let cross: f64 = x
            .iter()
            .zip(y)
            .map(|(&a, &b)| a.powf(1.0 - nu) * b.powf(nu))
            .sum();
        (trace(x) - cross) / nu
    }

    pub fn umegaki(x: &[f64], y: &[f64]) -> f64 {
        x.iter().zip(y).map(|(&a, &b)| a * (a.ln() - b.ln())).sum()
    }

    /// Diagonal of the operator-valued relative entropy: commuting inputs
    /// make it `x_i ln_nu(y_i / x_i)` entrywise.
    pub fn op_entropy_diag(x: &[f64], y: &[f64], nu: f64) -> Vec<f64> {
        x.iter()
            .zip(y)
            .map(|(&a, &b)| a * ln_nu(b / a, nu))
            .collect()
    }

    pub fn mean(r: &[f64], h: &[f64]) -> f64 {
        r.iter().zip(h).map(|(&p, &v)| p * v).sum()
    }

    pub fn variance(r: &[f64], h: &[f64]) -> f64 {
        let m = mean(r, h);
        r.iter().zip(h).map(|(&p, &v)| p * (v - m) * (v - m)).sum()
    }

    pub fn covariance(r: &[f64], a: &[f64], b: &[f64]) -> f64 {
        let (ma, mb) = (mean(r, a), mean(r, b));
        r.iter()
            .zip(a.iter().zip(b))
            .map(|(&p, (&va, &vb))| p * (va - ma) * (vb - mb))
            .sum()
    }

    /// Function-pair skew information on commuting inputs, written as the
    /// scalar reduction of the commutator form the matrix code returns:
    /// the per-eigenvalue commutators `f(r_i) h0_i - h0_i f(r_i)` are
    /// literal zero-differences, not a hard-coded zero.
    pub fn fg_skew(r: &[f64], h: &[f64], f: impl Fn(f64) -> f64, g: impl Fn(f64) -> f64) -> f64 {
        let m = mean(r, h);
        -0.5 * r
            .iter()
            .zip(h)
            .map(|(&p, &v)| {
                let cf = f(p) * (v - m) - (v - m) * f(p);
                let cg = g(p) * (v - m) - (v - m) * g(p);
                cf * cg
            })
            .sum::<f64>()
    }

    pub fn power_fn(p: f64) -> impl Fn(f64) -> f64 {
        move |lam| lam.powf(p)
    }

    pub fn mix_fn(alpha: f64) -> impl Fn(f64) -> f64 {
        move |lam| 0.5 * (lam.powf(alpha) + lam.powf(1.0 - alpha))
    }

    pub fn wy_skew(r: &[f64], h: &[f64]) -> f64 {
        fg_skew(r, h, power_fn(0.5), power_fn(0.5))
    }

    pub fn wyd_skew(r: &[f64], h: &[f64], alpha: f64) -> f64 {
        fg_skew(r, h, power_fn(alpha), power_fn(1.0 - alpha))
    }

    pub fn k_skew(r: &[f64], h: &[f64], alpha: f64) -> f64 {
        fg_skew(r, h, mix_fn(alpha), mix_fn(alpha))
    }

    /// `(1/2) Tr[{rho^(1/2), H0}^2]` entrywise: the anticommutator diagonal
    /// is `2 sqrt(r_i) h0_i`.
    pub fn j_quantity(r: &[f64], h: &[f64]) -> f64 {
        let m = mean(r, h);
        0.5 * r
            .iter()
            .zip(h)
            .map(|(&p, &v)| {
                let t = 2.0 * p.sqrt() * (v - m);
                t * t
            })
            .sum::<f64>()
    }

    pub fn u_quantity(r: &[f64], h: &[f64]) -> f64 {
        let v = variance(r, h);
        let i = wy_skew(r, h);
        (v * v - (v - i) * (v - i)).max(0.0).sqrt()
    }

    pub fn u_quantity_alpha(r: &[f64], h: &[f64], alpha: f64) -> f64 {
        let v = variance(r, h);
        let i = wyd_skew(r, h, alpha);
        (v * v - (v - i) * (v - i)).max(0.0).sqrt()
    }

    /// Correlation form on commuting inputs with complex diagonals, as the
    /// scalar reduction of the bracket form `Tr[f(rho) [g(rho), X*] Y]`.
    pub fn fg_corr(
        r: &[f64],
        x: &[Complex64],
        y: &[Complex64],
        f: impl Fn(f64) -> f64,
        g: impl Fn(f64) -> f64,
    ) -> Complex64 {
        r.iter()
            .zip(x.iter().zip(y))
            .map(|(&p, (&zx, &zy))| {
                let bracket = g(p) * zx.conj() - zx.conj() * g(p);
                f(p) * bracket * zy
            })
            .sum()
    }

    pub fn l_quantity(x: &[f64], y: &[f64], h: &[f64], t: f64) -> f64 {
        let first: f64 = x.iter().zip(h).map(|(&a, &v)| a * v * v).sum();
        let second: f64 = x
            .iter()
            .zip(y.iter().zip(h))
            .map(|(&a, (&b, &v))| a.powf(t) * b.powf(1.0 - t) * v * v)
            .sum();
        first - second
    }

    pub fn half_tr_min(x: &[f64], y: &[f64]) -> f64 {
        let abs: f64 = x.iter().zip(y).map(|(&a, &b)| (a - b).abs()).sum();
        0.5 * (trace(x) + trace(y) - abs)
    }

    pub fn positive_part_trace(x: &[f64], y: &[f64]) -> f64 {
        x.iter().zip(y).map(|(&a, &b)| (a - b).max(0.0)).sum()
    }

    pub fn spectral_h(x: &[f64], y: &[f64]) -> f64 {
        let max = |v: &[f64]| v.iter().cloned().fold(f64::MIN, f64::max);
        let min = |v: &[f64]| v.iter().cloned().fold(f64::MAX, f64::min);
        (max(x) * max(y)) / (min(x) * min(y))
    }

    /// `Tr[rho [A, B]]` on commuting diagonals, as the literal difference.
    /// Scalar products commute, so the summand is identically zero; the
    /// expression keeps the shape of the matrix formula on purpose.
    #[allow(clippy::eq_op)]
    pub fn comm_trace(r: &[f64], a: &[f64], b: &[f64]) -> f64 {
        r.iter()
            .zip(a.iter().zip(b))
            .map(|(&p, (&va, &vb))| p * (va * vb - vb * va))
            .sum()
    }
}
