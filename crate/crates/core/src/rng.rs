//! Deterministic seeded randomness.
//!
//! All randomness in the crate flows through [`stream`]: a ChaCha8
//! generator keyed by a user seed, with independent sub-streams so that
//! unrelated samplers never share state. Identical seeds give identical
//! results on every platform.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::{PrimeField, Rational};

/// Named sub-streams, so call sites document what they sample.
#[derive(Clone, Copy, Debug)]
pub enum Stream {
    Tensor = 1,
    LocalMaps = 2,
    Conjugation = 3,
    Eigenvalues = 4,
    Projection = 5,
    Bridge = 6,
}

/// A deterministic generator for (seed, stream, index).
pub fn stream(seed: u64, which: Stream, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((which as u64) << 32) | index);
    rng
}

/// Uniform integer in [−10⁴, 10⁴] as a rational; the documented sampling
/// set for rational-valued tensors.
pub fn rational_entry(rng: &mut ChaCha8Rng) -> Rational {
    Rational::from_integer(rng.gen_range(-10_000..=10_000))
}

/// Small nonzero rational in [−20, 20]; used for conjugation matrices to
/// keep coefficient growth in exact eliminations moderate.
pub fn small_entry(rng: &mut ChaCha8Rng) -> Rational {
    Rational::from_integer(rng.gen_range(-20..=20))
}

/// Uniform element of F_p.
pub fn prime_entry(rng: &mut ChaCha8Rng, p: u64) -> PrimeField {
    PrimeField::new(rng.gen_range(0..p), p)
}

/// Pairwise distinct rationals, for generic eigenvalue tuples.
pub fn distinct_rationals(rng: &mut ChaCha8Rng, count: usize) -> Vec<Rational> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v: i64 = rng.gen_range(-50..=50);
        if seen.insert(v) {
            out.push(Rational::from_integer(v));
        }
    }
    out
}
