//! Seeded, platform-independent random source.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Vertex;

/// Deterministic random stream. Equal seeds give equal draw sequences on
/// every platform: all draws go through 64-bit ranges of a ChaCha stream.
#[derive(Clone, Debug)]
pub struct RandomSource {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        RandomSource {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform integer in `[0, k)`.
    ///
    /// # Panics
    ///
    /// If `k == 0`.
    pub fn below(&mut self, k: usize) -> usize {
        assert!(k > 0, "cannot draw from an empty range");
        self.rng.gen_range(0..k as u64) as usize
    }

    /// Uniform element of a non-empty slice.
    pub fn choose<T: Copy>(&mut self, items: &[T]) -> T {
        items[self.below(items.len())]
    }

    /// Uniform permutation of `1..=n` (Fisher-Yates).
    pub fn permutation(&mut self, n: usize) -> Vec<Vertex> {
        let mut perm: Vec<Vertex> = (1..=n).collect();
        for i in (1..n).rev() {
            let j = self.below(i + 1);
            perm.swap(i, j);
        }
        perm
    }
}

/// SplitMix64 finaliser.
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for stream `index` under `master`:
/// `splitmix64(master ^ splitmix64(index))`.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    splitmix64(master ^ splitmix64(index))
}
