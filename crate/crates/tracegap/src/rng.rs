//! Seedable generator behind every random draw in the library, pinned down
//! exactly so streams can be replicated bit-for-bit in other languages.
//!
//! State update and output (all arithmetic modulo 2^64):
//!
//! ```text
//! state += 0x9E3779B97F4A7C15
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! output = z ^ (z >> 31)
//! ```
//!
//! Uniform doubles in `[0, 1)` take the top 53 bits: `(output >> 11) * 2^-53`.
//! Gaussian pairs apply the Box-Muller transform to `(u1, u2)` where
//! `u1 = ((output >> 11) + 1) * 2^-53` lies in `(0, 1]` (so the logarithm is
//! finite) and `u2` is a plain uniform:
//!
//! ```text
//! r = sqrt(-2 ln u1)
//! (g1, g2) = (r cos(2 pi u2), r sin(2 pi u2))
//! ```
//!
//! Substream `k` of seed `s` starts from the finalizer mix of
//! `s + (k + 1) * 0x9E3779B97F4A7C15`, which decorrelates nearby indices.

const GOLDEN: u64 = 0x9E3779B97F4A7C15;

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Generator for substream `index` of `seed`; used to give each
    /// inequality, worker, or case family its own decorrelated stream.
    pub fn substream(seed: u64, index: u64) -> Self {
        SplitMix64::new(mix(
            seed.wrapping_add(index.wrapping_add(1).wrapping_mul(GOLDEN))
        ))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix(self.state)
    }

    /// Fresh seed drawn from this stream, for spawning child generators.
    pub fn next_seed(&mut self) -> u64 {
        self.next_u64()
    }

    /// Uniform in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `(0, 1]`, safe as a logarithm argument.
    fn next_f64_open(&mut self) -> f64 {
        ((self.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Independent standard normal pair by Box-Muller; the first uniform is
    /// drawn first.
    pub fn next_gaussian_pair(&mut self) -> (f64, f64) {
        let u1 = self.next_f64_open();
        let u2 = self.next_f64();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = 2.0 * std::f64::consts::PI * u2;
        (r * theta.cos(), r * theta.sin())
    }
}
