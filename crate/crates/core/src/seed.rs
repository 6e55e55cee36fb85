//! Deterministic seed derivation.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// SplitMix64 finalizer.
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for item `index` of a run driven by `master`. Earlier items keep
/// their seeds when more items are appended.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    mix64(mix64(master) ^ index.wrapping_mul(0xD6E8_FEB8_6659_FD93))
}

/// Uniform value in `[0, 1)` from the top 53 bits of a hash.
pub fn unit_interval(h: u64) -> f64 {
    (h >> 11) as f64 / (1u64 << 53) as f64
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
