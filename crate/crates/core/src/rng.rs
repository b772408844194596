//! A small, portable, seedable generator.
//!
//! `Xorshift64Star` is Vigna's xorshift64*: state update
//! `x ^= x >> 12; x ^= x << 25; x ^= x >> 27`, output
//! `x * 0x2545F4914F6CDD1D` (wrapping). Seeds are first passed through one
//! SplitMix64 step (increment `0x9E3779B97F4A7C15`, mixers
//! `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB`), which also keeps the
//! state away from zero. The output stream is identical on every platform.

/// One SplitMix64 output for `state`.
pub fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Xorshift64Star {
    state: u64,
}

impl Xorshift64Star {
    pub fn new(seed: u64) -> Self {
        let s = splitmix64(seed);
        Self { state: if s == 0 { 0x9E37_79B9_7F4A_7C15 } else { s } }
    }

    /// Independent stream number `index` derived from `seed`.
    pub fn stream(seed: u64, index: u64) -> Self {
        Self::new(splitmix64(seed) ^ splitmix64(index.wrapping_add(0xD1B5_4A32_D192_ED03)))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}
