//! Shared inputs for the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rabu_core::coxeter::{CoxeterDiagram, Word};

/// A random word of length `len` over `d`, deterministic in `seed`.
pub fn word(d: &CoxeterDiagram, len: usize, seed: u64) -> Word {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Word((0..len).map(|_| rng.gen_range(0..d.rank())).collect())
}
