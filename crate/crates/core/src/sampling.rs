//! Seeded random rational sample points and generic-rank estimation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Numerators lie in `[-BOUND, BOUND]`, denominators in `[1, BOUND]`.
pub const SAMPLE_BOUND: i64 = 1000;
pub const MAX_ATTEMPTS: usize = 5;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Draws a reduced rational whose value is not one of the integers in `excluded`.
pub fn random_rational(rng: &mut impl Rng, excluded: &[i64]) -> BigRational {
    loop {
        let num = rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
        let den = rng.gen_range(1..=SAMPLE_BOUND);
        let q = BigRational::new(BigInt::from(num), BigInt::from(den));
        let hit = q.is_integer()
            && q.to_integer()
                .to_i64()
                .is_some_and(|v| excluded.contains(&v));
        if !hit {
            return q;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NullitySample {
    pub sample: String,
    pub rank: usize,
    pub nullity: usize,
}

/// Nullity at a generic point: samples are drawn until two consecutive ones
/// agree, at most [`MAX_ATTEMPTS`] in total. Generic rank is the maximum rank
/// seen, so the reported nullity is the minimum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NullityEstimate {
    pub samples: Vec<NullitySample>,
    pub nullity: usize,
}

pub fn generic_nullity(
    rng: &mut impl Rng,
    excluded: &[i64],
    mut rank_at: impl FnMut(&BigRational) -> (usize, usize),
) -> NullityEstimate {
    let mut samples = Vec::new();
    for attempt in 0..MAX_ATTEMPTS {
        let x = random_rational(rng, excluded);
        let (rank, cols) = rank_at(&x);
        samples.push(NullitySample {
            sample: x.to_string(),
            rank,
            nullity: cols - rank,
        });
        if attempt >= 1 && samples[attempt].nullity == samples[attempt - 1].nullity {
            break;
        }
    }
    let nullity = samples
        .iter()
        .map(|s| s.nullity)
        .min()
        .expect("at least one sample");
    NullityEstimate { samples, nullity }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exclusions_respected_and_deterministic() {
        let mut a = rng(7);
        let mut b = rng(7);
        for _ in 0..2000 {
            let x = random_rational(&mut a, &[0, 1, -1, 2, -2]);
            assert_eq!(x, random_rational(&mut b, &[0, 1, -1, 2, -2]));
            assert!(!(x.is_integer() && x.to_integer().magnitude() <= &2u32.into()));
            assert!(x.denom() <= &BigInt::from(SAMPLE_BOUND));
        }
    }

    #[test]
    fn agreeing_samples_stop_after_two() {
        let est = generic_nullity(&mut rng(1), &[], |_| (3, 5));
        assert_eq!(est.samples.len(), 2);
        assert_eq!(est.nullity, 2);
    }

    #[test]
    fn disagreeing_samples_take_minimum() {
        let mut calls = 0;
        let est = generic_nullity(&mut rng(1), &[], |_| {
            calls += 1;
            (if calls == 1 { 2 } else { 3 }, 5)
        });
        assert_eq!(est.samples.len(), 3);
        assert_eq!(est.nullity, 2);
    }
}
