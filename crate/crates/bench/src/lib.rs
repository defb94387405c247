//! Shared inputs for the benchmarks.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zcp_core::checks::random_sequence;
use zcp_core::{BinarySequence, SequencePair};

/// Deterministic pseudo-random sequence.
pub fn sequence(len: usize, seed: u64) -> BinarySequence {
    random_sequence(&mut ChaCha8Rng::seed_from_u64(seed), len)
}

pub fn pair(len: usize, seed: u64) -> SequencePair {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let first = random_sequence(&mut rng, len);
    SequencePair::new(first, random_sequence(&mut rng, len))
}
