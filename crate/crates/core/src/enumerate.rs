//! Deterministic exhaustive enumeration of profile spaces.
//!
//! Profiles are emitted in lexicographic order of their per-state permutation
//! indices: state 1 varies slowest, state n fastest, each state walking the
//! m! permutations in lexicographic order. The order is identical on every
//! run, which keeps first-violation witnesses stable.

use std::sync::Arc;

use crate::alts::AlternativeSet;
use crate::domain::DomainSpec;
use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::ranking::{factorial, Ranking};

/// Default ceiling on exhaustive profile visits.
pub const DEFAULT_MAX_VISITS: u64 = 10_000_000;

/// `(m!)^n`, the number of profiles the full space visit touches.
pub fn full_space_size(m: usize, n: usize) -> Option<u64> {
    let base = factorial(m)?;
    let mut acc: u64 = 1;
    for _ in 0..n {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Streaming enumerator over all profiles at `(m, n)` passing `filter`.
pub struct ProfileEnumerator {
    alts: Arc<AlternativeSet>,
    perms: Vec<Ranking>,
    indices: Vec<usize>,
    filter: DomainSpec,
    done: bool,
}

impl ProfileEnumerator {
    fn next_profile(&mut self) -> Option<Profile> {
        loop {
            if self.done {
                return None;
            }
            let states: Vec<Ranking> = self
                .indices
                .iter()
                .map(|&i| self.perms[i].clone())
                .collect();
            self.advance();
            let profile = Profile::new(Arc::clone(&self.alts), states)
                .expect("enumerated states are valid");
            if self.filter.contains(&profile) {
                return Some(profile);
            }
        }
    }

    fn advance(&mut self) {
        let base = self.perms.len();
        for slot in self.indices.iter_mut().rev() {
            *slot += 1;
            if *slot < base {
                return;
            }
            *slot = 0;
        }
        self.done = true;
    }
}

impl Iterator for ProfileEnumerator {
    type Item = Profile;

    fn next(&mut self) -> Option<Profile> {
        self.next_profile()
    }
}

/// Enumerates every profile on `alts` with `n` states passing the filter,
/// each exactly once. Refuses up front when the full-space visit count
/// exceeds `max_visits`.
pub fn enumerate_profiles(
    alts: &Arc<AlternativeSet>,
    n: usize,
    filter: DomainSpec,
    max_visits: u64,
) -> Result<ProfileEnumerator> {
    if n < 2 {
        return Err(Error::TooFewStates(n));
    }
    let m = alts.len();
    let visits = full_space_size(m, n).ok_or(Error::ResourceLimit {
        visits: u64::MAX,
        limit: max_visits,
    })?;
    if visits > max_visits {
        return Err(Error::ResourceLimit {
            visits,
            limit: max_visits,
        });
    }
    let total = factorial(m).expect("checked by full_space_size");
    let perms: Vec<Ranking> = (0..total)
        .map(|i| Ranking::from_lex_index(m, i).expect("index in range"))
        .collect();
    Ok(ProfileEnumerator {
        alts: Arc::clone(alts),
        perms,
        indices: vec![0; n],
        filter,
        done: false,
    })
}

/// Materializes the filtered domain.
pub fn collect_domain(
    alts: &Arc<AlternativeSet>,
    n: usize,
    filter: DomainSpec,
    max_visits: u64,
) -> Result<Vec<Profile>> {
    Ok(enumerate_profiles(alts, n, filter, max_visits)?.collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn full_space_sizes() {
        assert_eq!(full_space_size(3, 2), Some(36));
        assert_eq!(full_space_size(3, 3), Some(216));
        assert_eq!(full_space_size(4, 3), Some(13824));
    }

    #[test]
    fn full_enumeration_is_distinct_and_complete() {
        let alts = AlternativeSet::canonical(3);
        let all: Vec<Profile> =
            collect_domain(&alts, 2, DomainSpec::Full, DEFAULT_MAX_VISITS).unwrap();
        assert_eq!(all.len(), 36);
        let distinct: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), 36);
        // first profile: identity permutation in both states
        assert_eq!(all[0].state(1).unwrap().lex_index(), 0);
        assert_eq!(all[0].state(2).unwrap().lex_index(), 0);
        // state n varies fastest
        assert_eq!(all[1].state(1).unwrap().lex_index(), 0);
        assert_eq!(all[1].state(2).unwrap().lex_index(), 1);
    }

    #[test]
    fn enumeration_order_is_reproducible() {
        let alts = AlternativeSet::canonical(3);
        let a: Vec<Profile> =
            collect_domain(&alts, 3, DomainSpec::StrictCondorcet, DEFAULT_MAX_VISITS).unwrap();
        let b: Vec<Profile> =
            collect_domain(&alts, 3, DomainSpec::StrictCondorcet, DEFAULT_MAX_VISITS).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn visit_guard_refuses_oversize_spaces() {
        let alts = AlternativeSet::canonical(3);
        let err = match enumerate_profiles(&alts, 2, DomainSpec::Full, 10) {
            Err(e) => e,
            Ok(_) => panic!("guard should trip"),
        };
        assert!(matches!(err, Error::ResourceLimit { visits: 36, limit: 10 }));
    }
}
