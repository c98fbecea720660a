//! Seed derivation. Every random stream in the crate is a ChaCha8 generator
//! whose seed is derived from a master seed and a path of stream indices, so
//! results never depend on thread scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Rng = ChaCha8Rng;

/// SplitMix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Child seed for stream `index` under `parent`.
pub fn derive_seed(parent: u64, index: u64) -> u64 {
    mix(mix(parent) ^ index.wrapping_mul(0xd6e8_feb8_6659_fd93))
}

pub fn derive_path(parent: u64, path: &[u64]) -> u64 {
    path.iter().fold(parent, |s, &i| derive_seed(s, i))
}

pub fn rng_from(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
