//! Seeded random source for the `random` baseline and graph generators.
//!
//! The generator is ChaCha with 8 rounds (`rand_chacha::ChaCha8Rng`). A
//! 64-bit seed is expanded to the 256-bit key by `SeedableRng::seed_from_u64`
//! (PCG32 expansion, value-stable across rand_core releases), and the 64-bit
//! ChaCha stream id selects an independent sequence for each sample. Bounded
//! integers use Lemire's multiply-shift rejection method on `next_u64`, and
//! k-subsets are the first k slots of a partial Fisher-Yates shuffle of
//! `0..n`. None of this goes through `rand`'s distribution code, so a given
//! `(seed, stream)` yields the same draws on every platform and version.

use std::collections::HashMap;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

#[derive(Debug, Clone)]
pub struct SampleRng {
    inner: ChaCha8Rng,
}

impl SampleRng {
    pub fn new(seed: u64) -> Self {
        Self::with_stream(seed, 0)
    }

    pub fn with_stream(seed: u64, stream: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(stream);
        SampleRng { inner }
    }

    /// Stream used for the `index`-th sample of a size-`k` draw.
    pub fn for_sample(seed: u64, k: usize, index: usize) -> Self {
        Self::with_stream(seed, ((k as u64) << 32) | (index as u64 & 0xffff_ffff))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform integer in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let mut product = u128::from(self.next_u64()) * u128::from(bound);
        let mut low = product as u64;
        if low < bound {
            let threshold = bound.wrapping_neg() % bound;
            while low < threshold {
                product = u128::from(self.next_u64()) * u128::from(bound);
                low = product as u64;
            }
        }
        (product >> 64) as u64
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// `k` distinct values from `0..n`: the prefix of a partial Fisher-Yates
    /// shuffle. Small `k` swaps through a sparse map instead of materializing
    /// the whole permutation; both paths produce identical output.
    pub fn sample_distinct(&mut self, n: usize, k: usize) -> Vec<u32> {
        assert!(k <= n, "cannot draw {k} distinct values from {n}");
        if k.saturating_mul(4) >= n {
            let mut slots: Vec<u32> = (0..n as u32).collect();
            for i in 0..k {
                let j = i + self.below((n - i) as u64) as usize;
                slots.swap(i, j);
            }
            slots.truncate(k);
            slots
        } else {
            let mut displaced: HashMap<usize, u32> = HashMap::with_capacity(2 * k);
            let mut out = Vec::with_capacity(k);
            for i in 0..k {
                let j = i + self.below((n - i) as u64) as usize;
                let at_j = displaced.get(&j).copied().unwrap_or(j as u32);
                let at_i = displaced.get(&i).copied().unwrap_or(i as u32);
                displaced.insert(j, at_i);
                out.push(at_j);
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let a: Vec<u64> = {
            let mut r = SampleRng::new(7);
            (0..5).map(|_| r.next_u64()).collect()
        };
        let b: Vec<u64> = {
            let mut r = SampleRng::new(7);
            (0..5).map(|_| r.next_u64()).collect()
        };
        assert_eq!(a, b);
        let mut other = SampleRng::with_stream(7, 1);
        assert_ne!(a[0], other.next_u64());
    }

    #[test]
    fn sparse_and_dense_shuffles_agree() {
        // force each path on the same stream and compare against a plain shuffle
        for seed in 0..20 {
            for (n, k) in [(50, 3), (50, 20), (9, 9), (1000, 1)] {
                let sparse = SampleRng::new(seed).sample_distinct(n, k);
                let mut rng = SampleRng::new(seed);
                let mut slots: Vec<u32> = (0..n as u32).collect();
                for i in 0..k {
                    let j = i + rng.below((n - i) as u64) as usize;
                    slots.swap(i, j);
                }
                assert_eq!(sparse, slots[..k]);
            }
        }
    }

    #[test]
    fn below_stays_in_range() {
        let mut r = SampleRng::new(3);
        for bound in [1u64, 2, 3, 10, 1 << 40, u64::MAX] {
            for _ in 0..100 {
                assert!(r.below(bound) < bound);
            }
        }
    }

    #[test]
    fn sample_is_distinct() {
        let mut r = SampleRng::new(11);
        let mut s = r.sample_distinct(100, 30);
        s.sort_unstable();
        s.dedup();
        assert_eq!(s.len(), 30);
    }
}
