//! Seeded random generation of rankings and profiles.
//!
//! All randomness flows through ChaCha8 streams derived from a caller seed,
//! so every sampling run replays byte for byte.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alts::{Alt, AlternativeSet};
use crate::domain::DomainSpec;
use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::ranking::Ranking;

/// Rejection-sampling cap per profile before giving up on a domain.
const REJECTION_CAP: u64 = 1_000_000;

/// Root generator for a seed.
pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream for sample `index` under `seed`. Lets trials run in
/// any order (or partially) without shifting later draws.
pub fn rng_for_index(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index.wrapping_add(1));
    rng
}

/// Uniform random strict ranking of `m` alternatives.
pub fn sample_ranking(m: usize, rng: &mut impl Rng) -> Ranking {
    let mut order: Vec<Alt> = (0..m).map(|i| Alt(i as u8)).collect();
    order.shuffle(rng);
    Ranking::from_order(order, m).expect("shuffled identity is a permutation")
}

/// Uniform random profile on `alts` with `n` states.
pub fn sample_profile(alts: &Arc<AlternativeSet>, n: usize, rng: &mut impl Rng) -> Result<Profile> {
    if n < 2 {
        return Err(Error::TooFewStates(n));
    }
    let m = alts.len();
    let states = (0..n).map(|_| sample_ranking(m, rng)).collect();
    Profile::new(Arc::clone(alts), states)
}

/// Random profile inside `domain`, by rejection. Errors with a resource
/// limit if the cap is hit, which in practice flags an empty or vanishingly
/// thin domain slice.
pub fn sample_profile_in(
    alts: &Arc<AlternativeSet>,
    n: usize,
    domain: DomainSpec,
    rng: &mut impl Rng,
) -> Result<Profile> {
    for attempt in 0..REJECTION_CAP {
        let p = sample_profile(alts, n, rng)?;
        if domain.contains(&p) {
            return Ok(p);
        }
        let _ = attempt;
    }
    Err(Error::ResourceLimit {
        visits: REJECTION_CAP,
        limit: REJECTION_CAP,
    })
}
