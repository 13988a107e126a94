use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Generation tag reserved for initial-population sampling.
pub(crate) const INIT_STREAM: u64 = u64::MAX;

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Independent RNG stream for `(seed, generation, index)`.
///
/// Every child draws from its own stream, so the order in which children
/// are produced cannot change a seeded run.
pub(crate) fn stream(seed: u64, generation: u64, index: u64) -> ChaCha8Rng {
    let key = splitmix(splitmix(splitmix(seed) ^ generation) ^ index);
    ChaCha8Rng::seed_from_u64(key)
}
