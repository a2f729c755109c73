//! Named profile domains and their membership predicates.

use std::fmt;

use crate::error::{Error, Result};
use crate::profile::Profile;

/// The named profile domains a rule or a check can be declared on.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash)]
pub enum DomainSpec {
    /// Every profile.
    Full,
    /// Profiles with a strict Condorcet winner.
    StrictCondorcet,
    /// Profiles with at least one weak Condorcet winner.
    WeakCondorcet,
    /// Profiles with exactly one weak Condorcet winner.
    UniqueWeakCondorcet,
    /// Profiles whose plurality-winner set is a singleton.
    UniquePlurality,
}

impl DomainSpec {
    pub const ALL: [DomainSpec; 5] = [
        DomainSpec::Full,
        DomainSpec::StrictCondorcet,
        DomainSpec::WeakCondorcet,
        DomainSpec::UniqueWeakCondorcet,
        DomainSpec::UniquePlurality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DomainSpec::Full => "full",
            DomainSpec::StrictCondorcet => "strict-condorcet",
            DomainSpec::WeakCondorcet => "weak-condorcet",
            DomainSpec::UniqueWeakCondorcet => "unique-weak-condorcet",
            DomainSpec::UniquePlurality => "unique-plurality",
        }
    }

    pub fn parse(name: &str) -> Result<DomainSpec> {
        Self::ALL
            .into_iter()
            .find(|d| d.name() == name)
            .ok_or_else(|| Error::UnknownDomain {
                name: name.to_string(),
                valid: Self::ALL.map(|d| d.name()).join(", "),
            })
    }

    /// Membership predicate.
    pub fn contains(self, p: &Profile) -> bool {
        match self {
            DomainSpec::Full => true,
            DomainSpec::StrictCondorcet => p.strict_condorcet_winner().is_some(),
            DomainSpec::WeakCondorcet => !p.weak_condorcet_winners().is_empty(),
            DomainSpec::UniqueWeakCondorcet => p.weak_condorcet_winners().len() == 1,
            DomainSpec::UniquePlurality => plurality_winner_set_size(p) == 1,
        }
    }

    /// Whether every profile of `sub` belongs to `self`.
    ///
    /// Uses the provable inclusions: a strict Condorcet winner is the unique
    /// weak Condorcet winner, hence
    /// StrictCondorcet ⊆ UniqueWeakCondorcet ⊆ WeakCondorcet ⊆ Full.
    /// UniquePlurality is comparable only with Full.
    pub fn covers(self, sub: DomainSpec) -> bool {
        use DomainSpec::*;
        match self {
            Full => true,
            WeakCondorcet => matches!(sub, WeakCondorcet | UniqueWeakCondorcet | StrictCondorcet),
            UniqueWeakCondorcet => matches!(sub, UniqueWeakCondorcet | StrictCondorcet),
            StrictCondorcet => matches!(sub, StrictCondorcet),
            UniquePlurality => matches!(sub, UniquePlurality),
        }
    }
}

impl fmt::Display for DomainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Helper shared with the plurality rule: per-alternative first-place counts.
pub(crate) fn first_place_counts(p: &Profile) -> Vec<usize> {
    let mut counts = vec![0usize; p.m()];
    for r in p.states() {
        counts[r.top().index()] += 1;
    }
    counts
}

fn plurality_winner_set_size(p: &Profile) -> usize {
    let counts = first_place_counts(p);
    let best = *counts.iter().max().expect("m >= 1");
    counts.iter().filter(|&&c| c == best).count()
}

/// Convenience wrapper matching the operation-level surface.
pub fn in_domain(p: &Profile, d: DomainSpec) -> bool {
    d.contains(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alts::AlternativeSet;

    #[test]
    fn cycle_is_outside_strict_condorcet() {
        let alts = AlternativeSet::new(["x", "y", "z"]).unwrap();
        let cycle = Profile::from_columns(
            &alts,
            &[&["x", "y", "z"], &["y", "z", "x"], &["z", "x", "y"]],
        )
        .unwrap();
        assert!(!DomainSpec::StrictCondorcet.contains(&cycle));
        assert!(DomainSpec::Full.contains(&cycle));
        assert!(!DomainSpec::WeakCondorcet.contains(&cycle));
        // every alternative is ranked first exactly once: no unique plurality winner
        assert!(!DomainSpec::UniquePlurality.contains(&cycle));
    }

    #[test]
    fn covers_lattice() {
        use DomainSpec::*;
        assert!(Full.covers(StrictCondorcet));
        assert!(WeakCondorcet.covers(StrictCondorcet));
        assert!(UniqueWeakCondorcet.covers(StrictCondorcet));
        assert!(!StrictCondorcet.covers(Full));
        assert!(!UniquePlurality.covers(StrictCondorcet));
        assert!(Full.covers(UniquePlurality));
    }

    #[test]
    fn parse_round_trip() {
        for d in DomainSpec::ALL {
            assert_eq!(DomainSpec::parse(d.name()).unwrap(), d);
        }
        assert!(DomainSpec::parse("bogus").is_err());
    }
}
