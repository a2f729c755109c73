//! Variable-state profiles: a multiset of rankings stored as distinct
//! columns with positive multiplicities. Choice functions that depend only
//! on the fraction of states carrying each ranking are anonymous, and the
//! strict-Condorcet rule extends to this representation through
//! multiplicity-weighted pairwise counts.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::Ratio;

use crate::alts::{Alt, AlternativeSet};
use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::ranking::Ranking;
use crate::rules::ChoiceSet;

/// A profile over a variable number of states: pairwise-distinct rankings,
/// each with a positive multiplicity, columns kept in lexicographic order
/// so equality is structural. Multiplicities sum to at least 2.
#[derive(Debug, Clone)]
pub struct MultiProfile {
    alts: Arc<AlternativeSet>,
    columns: Vec<(Ranking, u32)>,
}

impl MultiProfile {
    pub fn new(alts: Arc<AlternativeSet>, mut columns: Vec<(Ranking, u32)>) -> Result<Self> {
        let m = alts.len();
        for (r, mult) in &columns {
            if r.m() != m {
                return Err(Error::NotAPermutation { m });
            }
            if *mult == 0 {
                return Err(Error::InvalidMultiProfile(
                    "every multiplicity must be positive".into(),
                ));
            }
        }
        columns.sort();
        if columns.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidMultiProfile(
                "column rankings must be pairwise distinct".into(),
            ));
        }
        let total: u64 = columns.iter().map(|&(_, k)| u64::from(k)).sum();
        if total < 2 {
            return Err(Error::TooFewStates(total as usize));
        }
        Ok(MultiProfile { alts, columns })
    }

    pub fn alts(&self) -> &Arc<AlternativeSet> {
        &self.alts
    }

    pub fn m(&self) -> usize {
        self.alts.len()
    }

    /// Number of distinct columns (K). Bounded by both the state total and m!.
    pub fn k(&self) -> usize {
        self.columns.len()
    }

    /// Total number of states, i.e. the multiplicity sum.
    pub fn total_states(&self) -> u64 {
        self.columns.iter().map(|&(_, k)| u64::from(k)).sum()
    }

    pub fn columns(&self) -> &[(Ranking, u32)] {
        &self.columns
    }

    /// Map from each ranking to the exact fraction of states carrying it.
    pub fn fraction_map(&self) -> BTreeMap<Ranking, Ratio<u64>> {
        let total = self.total_states();
        self.columns
            .iter()
            .map(|(r, k)| (r.clone(), Ratio::new(u64::from(*k), total)))
            .collect()
    }

    /// True iff both profiles carry every ranking with the same fraction of
    /// states. This is the equivalence under which anonymous choice
    /// functions are constant.
    pub fn anonymous_equal(&self, other: &MultiProfile) -> Result<bool> {
        if self.alts != other.alts {
            return Err(Error::AlternativeSetMismatch);
        }
        Ok(self.fraction_map() == other.fraction_map())
    }

    /// Total multiplicity of the columns ranking x above y.
    pub fn weighted_majority(&self, x: Alt, y: Alt) -> u64 {
        self.columns
            .iter()
            .filter(|(r, _)| r.prefers(x, y))
            .map(|&(_, k)| u64::from(k))
            .sum()
    }

    /// Scales every multiplicity by `k`; the result is anonymously equal.
    pub fn replicate(&self, k: u32) -> Result<MultiProfile> {
        if k == 0 {
            return Err(Error::InvalidMultiProfile(
                "replication factor must be positive".into(),
            ));
        }
        let columns = self
            .columns
            .iter()
            .map(|(r, mult)| {
                mult.checked_mul(k)
                    .map(|scaled| (r.clone(), scaled))
                    .ok_or_else(|| Error::InvalidMultiProfile("multiplicity overflow".into()))
            })
            .collect::<Result<_>>()?;
        Ok(MultiProfile {
            alts: Arc::clone(&self.alts),
            columns,
        })
    }
}

impl PartialEq for MultiProfile {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.alts, &other.alts) || self.alts == other.alts)
            && self.columns == other.columns
    }
}

impl Eq for MultiProfile {}

/// Strict-Condorcet rule on variable-state profiles: the alternative
/// beating every rival on a weighted strict majority of states, as a
/// singleton. Errs when no such alternative exists.
pub fn strict_condorcet_variable(mp: &MultiProfile) -> Result<ChoiceSet> {
    let m = mp.m();
    if m < 3 {
        return Err(Error::TooFewAlternatives {
            rule: "strict-condorcet".into(),
            m,
        });
    }
    let total = mp.total_states();
    let winner = (0..m).map(|i| Alt(i as u8)).find(|&x| {
        (0..m)
            .map(|j| Alt(j as u8))
            .all(|y| y == x || 2 * mp.weighted_majority(x, y) > total)
    });
    match winner {
        Some(x) => Ok(ChoiceSet::singleton(x)),
        None => Err(Error::OffDomain {
            rule: "strict-condorcet".into(),
            reason: "profile has no strict Condorcet winner".into(),
        }),
    }
}

/// Groups equal states of a fixed-state profile into multiplicity columns.
pub fn convert(p: &Profile) -> MultiProfile {
    let mut counts: BTreeMap<&Ranking, u32> = BTreeMap::new();
    for r in p.states() {
        *counts.entry(r).or_insert(0) += 1;
    }
    MultiProfile {
        alts: Arc::clone(p.alts()),
        columns: counts.into_iter().map(|(r, k)| (r.clone(), k)).collect(),
    }
}

/// Lays each column out multiplicity-many times, in column order, as a
/// fixed-state profile. Fails when the multiplicity sum exceeds the
/// fixed-state cap of 64.
pub fn expand(mp: &MultiProfile) -> Result<Profile> {
    let mut states = Vec::with_capacity(mp.total_states() as usize);
    for (r, k) in mp.columns() {
        states.extend(std::iter::repeat_with(|| r.clone()).take(*k as usize));
    }
    Profile::new(Arc::clone(mp.alts()), states)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::rules::eval_strict_condorcet;

    fn col(alts: &Arc<AlternativeSet>, names: &[&str], mult: u32) -> (Ranking, u32) {
        let order = names
            .iter()
            .map(|name| alts.index_of(name).unwrap())
            .collect();
        (Ranking::from_order(order, alts.len()).unwrap(), mult)
    }

    #[test]
    fn convert_groups_and_canonicalizes() {
        let (r1, _) = corpus::example2_pair();
        let mp = convert(&r1);
        assert_eq!(mp.k(), 3);
        assert_eq!(mp.total_states(), 5);
        let mults: Vec<u32> = mp.columns().iter().map(|&(_, k)| k).collect();
        assert_eq!(mults, vec![2, 1, 2]);
        let fractions: Vec<Ratio<u64>> = mp.fraction_map().into_values().collect();
        assert_eq!(
            fractions,
            vec![Ratio::new(2, 5), Ratio::new(1, 5), Ratio::new(2, 5)]
        );
    }

    #[test]
    fn variable_rule_matches_fixed_rule() {
        let (r1, r2) = corpus::example2_pair();
        for p in [r1, r2, corpus::example6_profile()] {
            assert_eq!(
                strict_condorcet_variable(&convert(&p)).unwrap(),
                eval_strict_condorcet(&p).unwrap()
            );
        }
    }

    #[test]
    fn weighted_counts_decide_small_examples() {
        let alts = AlternativeSet::canonical(3);
        let mp = MultiProfile::new(
            Arc::clone(&alts),
            vec![col(&alts, &["x", "y", "z"], 3), col(&alts, &["z", "y", "x"], 2)],
        )
        .unwrap();
        assert_eq!(
            strict_condorcet_variable(&mp).unwrap(),
            ChoiceSet::singleton(Alt(0))
        );
        let tied = MultiProfile::new(
            Arc::clone(&alts),
            vec![col(&alts, &["x", "y", "z"], 1), col(&alts, &["z", "y", "x"], 1)],
        )
        .unwrap();
        assert!(matches!(
            strict_condorcet_variable(&tied),
            Err(Error::OffDomain { .. })
        ));
    }

    #[test]
    fn replication_preserves_fractions_and_winner() {
        let (r1, _) = corpus::example2_pair();
        let mp = convert(&r1);
        for k in 2..=5 {
            let scaled = mp.replicate(k).unwrap();
            assert!(mp.anonymous_equal(&scaled).unwrap());
            assert_eq!(
                strict_condorcet_variable(&scaled).unwrap(),
                strict_condorcet_variable(&mp).unwrap()
            );
        }
        assert!(matches!(
            mp.replicate(0),
            Err(Error::InvalidMultiProfile(_))
        ));
    }

    #[test]
    fn anonymous_equality_separates_distinct_matrices() {
        let (r1, r2) = corpus::example2_pair();
        let (a, b) = (convert(&r1), convert(&r2));
        assert!(!a.anonymous_equal(&b).unwrap());
        assert!(a.anonymous_equal(&a).unwrap());
        let other = convert(&corpus::example6_profile());
        assert!(matches!(
            a.anonymous_equal(&other),
            Err(Error::AlternativeSetMismatch)
        ));
    }

    #[test]
    fn round_trip_preserves_majorities() {
        let (r1, _) = corpus::example2_pair();
        let mp = convert(&r1);
        let expanded = expand(&mp).unwrap();
        assert_eq!(convert(&expanded), mp);
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    let (x, y) = (Alt(i), Alt(j));
                    assert_eq!(
                        expanded.majority_count(x, y).unwrap() as u64,
                        mp.weighted_majority(x, y)
                    );
                }
            }
        }
    }

    #[test]
    fn constructor_enforces_invariants() {
        let alts = AlternativeSet::canonical(3);
        let dup = MultiProfile::new(
            Arc::clone(&alts),
            vec![col(&alts, &["x", "y", "z"], 1), col(&alts, &["x", "y", "z"], 2)],
        );
        assert!(matches!(dup, Err(Error::InvalidMultiProfile(_))));
        let zero = MultiProfile::new(Arc::clone(&alts), vec![col(&alts, &["x", "y", "z"], 0)]);
        assert!(matches!(zero, Err(Error::InvalidMultiProfile(_))));
        let single = MultiProfile::new(Arc::clone(&alts), vec![col(&alts, &["x", "y", "z"], 1)]);
        assert!(matches!(single, Err(Error::TooFewStates(1))));
    }

    #[test]
    fn totals_past_the_fixed_cap_still_evaluate_but_cannot_expand() {
        let alts = AlternativeSet::canonical(3);
        let mp = MultiProfile::new(
            Arc::clone(&alts),
            vec![
                col(&alts, &["x", "y", "z"], 60),
                col(&alts, &["z", "y", "x"], 40),
            ],
        )
        .unwrap();
        let choice = strict_condorcet_variable(&mp).unwrap();
        assert_eq!(choice.as_singleton(), Some(Alt(0)));
        assert!(matches!(expand(&mp), Err(Error::TooManyStates(100))));
    }
}
