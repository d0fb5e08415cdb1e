//! Named-stream seeding.
//!
//! Every source of randomness (generator, initialization, data order,
//! posterior sampling) draws from its own stream so that changing one does
//! not perturb the others.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

/// Derives a child seed from `(master, tag, index)` with SHA-256.
///
/// The encoding is length-prefixed and little-endian so the result is the
/// same on every platform.
pub fn derive_seed(master_seed: u64, stream_tag: &str, index: u64) -> u64 {
    let mut h = Sha256::new();
    h.update(master_seed.to_le_bytes());
    h.update((stream_tag.len() as u64).to_le_bytes());
    h.update(stream_tag.as_bytes());
    h.update(index.to_le_bytes());
    let digest = h.finalize();
    let mut out = [0u8; 8];
    out.copy_from_slice(&digest[..8]);
    u64::from_le_bytes(out)
}

pub fn stream_rng(master_seed: u64, stream_tag: &str, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(master_seed, stream_tag, index))
}
