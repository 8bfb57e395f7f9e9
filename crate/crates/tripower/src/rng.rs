//! Deterministic pseudo-random generation for the verification suites.
//!
//! The verify layer promises byte-identical behaviour across runs and
//! platforms for a given seed, so it uses a fixed, fully specified generator
//! rather than one whose stream may change between library versions:
//! SplitMix64 (Steele, Lea & Flood's 64-bit mix, the standard seeding
//! generator), which passes BigCrush and is two multiply-xorshift rounds per
//! output.

/// SplitMix64 generator with a fixed output stream per seed.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Next 64-bit output.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform double in `[0, 1)` with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform double in `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Log-uniform double in `[lo, hi)`; `lo` and `hi` must be positive.
    pub fn log_uniform(&mut self, lo: f64, hi: f64) -> f64 {
        debug_assert!(lo > 0.0 && hi > lo);
        (lo.ln() + (hi.ln() - lo.ln()) * self.next_f64()).exp()
    }
}
