//! Seeded random instance generation for benchmarks and test corpora.

use crate::model::{LinearOrder, PartialOrder, PartialProfile};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Deterministic generator from a 64-bit seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random partial order built by attempting `pair_attempts` random pair
/// insertions and keeping the acyclic ones.
pub fn random_partial_order(rng: &mut ChaCha8Rng, m: usize, pair_attempts: usize) -> PartialOrder {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut current = PartialOrder::empty(m);
    for _ in 0..pair_attempts {
        let a = rng.gen_range(0..m);
        let b = rng.gen_range(0..m);
        if a == b {
            continue;
        }
        pairs.push((a, b));
        match PartialOrder::new(m, &pairs) {
            Ok(p) => current = p,
            Err(_) => {
                pairs.pop();
            }
        }
    }
    current
}

/// A random profile of `n` voters over `m` candidates, each voter with up
/// to `max_pairs` attempted constraints.
pub fn random_partial_profile(
    rng: &mut ChaCha8Rng,
    m: usize,
    n: usize,
    max_pairs: usize,
) -> PartialProfile {
    let voters = (0..n)
        .map(|_| {
            let attempts = rng.gen_range(0..=max_pairs);
            random_partial_order(rng, m, attempts)
        })
        .collect();
    PartialProfile::new(voters).expect("n >= 1")
}

/// A uniformly random total order.
pub fn random_linear_order(rng: &mut ChaCha8Rng, m: usize) -> LinearOrder {
    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(rng);
    LinearOrder::new(order).expect("shuffled permutation")
}
