//! Seed handling. Every random draw in the crate comes from ChaCha8 keyed by
//! a 64-bit master seed, with one stream per independent task so results do
//! not depend on scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::Rational;

pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn small_int<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    rng.gen_range(-bound..=bound)
}

pub fn nonzero_small_int<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return v;
        }
    }
}

/// Integer vector with entries in `[-bound, bound]`, redrawn until nonzero.
pub fn nonzero_int_vector<R: Rng>(rng: &mut R, len: usize, bound: i64) -> Vec<i64> {
    assert!(len > 0 && bound > 0);
    loop {
        let v: Vec<i64> = (0..len).map(|_| small_int(rng, bound)).collect();
        if v.iter().any(|&x| x != 0) {
            return v;
        }
    }
}

/// Nonzero rational `a/b` with `a` in `[-bound, bound] \ {0}` and `b` in `[1, bound]`.
pub fn nonzero_small_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    let num = nonzero_small_int(rng, bound);
    let den = rng.gen_range(1..=bound);
    Rational::new(num.into(), den.into())
}
