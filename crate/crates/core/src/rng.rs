//! Seeded random streams.
//!
//! All randomness comes from ChaCha8 seeded with a 64-bit seed. One seed
//! feeds several independent streams, selected by the ChaCha stream word:
//! graph generation draws from [`GENERATOR_STREAM`], removal orders from
//! [`ORDER_STREAM`]. Datasets derive the seed of graph `i` as
//! `base_seed + i` (wrapping).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const GENERATOR_STREAM: u64 = 0;
pub const ORDER_STREAM: u64 = 1;

pub fn stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Seed of the `index`-th graph of a batch.
pub fn graph_seed(base_seed: u64, index: u64) -> u64 {
    base_seed.wrapping_add(index)
}
