//! SplitMix64, the fixed pseudo-random generator behind every generated
//! corpus. The algorithm is pinned — Steele, Lea & Flood's 64-bit finalizer
//! with the golden-ratio increment 0x9E3779B97F4A7C15 and mixing constants
//! 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB — so any implementation of this
//! tool, in any language, regenerates identical inputs from the same seed.

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Draw from `0..bound` by reduction modulo `bound`. The slight modulo
    /// bias is irrelevant for corpus generation and keeps the mapping
    /// trivially portable.
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        self.next_u64() % bound
    }
}
