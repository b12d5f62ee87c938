//! Deterministic input generation. Every kind is a pure function of
//! (kind, n, sigma, seed); symbols are the `sigma` byte values starting
//! at `b'a'` (wrapping past 255 for very large alphabets).

use crate::error::BenchError;
use crate::rng::SplitMix64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    /// Uniform symbols.
    Random,
    /// All `'a'` — minimal period 1, the adversarial extreme.
    Unary,
    /// A deterministic periodic block repeated a few times, planted as a
    /// subsequence at random positions among uniform noise.
    PeriodicPlanted,
}

pub fn gen_string(kind: GenKind, n: usize, sigma: usize, seed: u64) -> Result<Vec<u8>, BenchError> {
    if sigma == 0 || sigma > 256 {
        return Err(BenchError::InvalidAlphabet(sigma));
    }
    let mut rng = SplitMix64::new(seed);
    let sym = |rng: &mut SplitMix64| b'a'.wrapping_add(rng.below(sigma as u64) as u8);
    match kind {
        GenKind::Unary => Ok(vec![b'a'; n]),
        GenKind::Random => Ok((0..n).map(|_| sym(&mut rng)).collect()),
        GenKind::PeriodicPlanted => {
            if n == 0 {
                return Ok(Vec::new());
            }
            let period = 1 + rng.below((n / 4).max(1) as u64) as usize;
            let reps = 2 + rng.below(3) as usize;
            let block: Vec<u8> = (0..period).map(|_| sym(&mut rng)).collect();
            let plant_len = (period * reps).min(n);
            // Partial Fisher–Yates picks the plant's positions; sorting
            // keeps the block order, so the plant stays a subsequence.
            let mut idx: Vec<usize> = (0..n).collect();
            for i in 0..plant_len {
                let j = i + rng.below((n - i) as u64) as usize;
                idx.swap(i, j);
            }
            let mut chosen = idx[..plant_len].to_vec();
            chosen.sort_unstable();
            let mut out: Vec<u8> = (0..n).map(|_| sym(&mut rng)).collect();
            for (k, &pos) in chosen.iter().enumerate() {
                out[pos] = block[k % period];
            }
            Ok(out)
        }
    }
}
