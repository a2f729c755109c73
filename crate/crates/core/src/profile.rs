//! State-dependent preference profiles and the pairwise-majority machinery
//! built on them.
//!
//! A profile assigns one strict ranking to each of `2 ≤ n ≤ 64` states. All
//! majority comparisons are integer counts (`2·count` against `n`); no
//! floating point anywhere.

use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::alts::{Alt, AlternativeSet};
use crate::error::{Error, Result};
use crate::ranking::Ranking;

/// An ordered list of per-state strict rankings over a shared alternative set.
#[derive(Debug, Clone)]
pub struct Profile {
    alts: Arc<AlternativeSet>,
    states: Vec<Ranking>,
}

impl Profile {
    pub fn new(alts: Arc<AlternativeSet>, states: Vec<Ranking>) -> Result<Self> {
        if states.len() < 2 {
            return Err(Error::TooFewStates(states.len()));
        }
        // the restriction machinery packs states into u64 bitmasks
        if states.len() > 64 {
            return Err(Error::TooManyStates(states.len()));
        }
        let m = alts.len();
        if states.iter().any(|r| r.m() != m) {
            return Err(Error::NotAPermutation { m });
        }
        Ok(Profile { alts, states })
    }

    /// Builds a profile from the matrix columns of name tokens: `columns[j]`
    /// lists state j+1 top to bottom.
    pub fn from_columns(alts: &Arc<AlternativeSet>, columns: &[&[&str]]) -> Result<Self> {
        let m = alts.len();
        let mut states = Vec::with_capacity(columns.len());
        for col in columns {
            let mut order = Vec::with_capacity(m);
            for token in *col {
                order.push(alts.index_of(token)?);
            }
            states.push(Ranking::from_order(order, m)?);
        }
        Profile::new(Arc::clone(alts), states)
    }

    pub fn alts(&self) -> &Arc<AlternativeSet> {
        &self.alts
    }

    pub fn m(&self) -> usize {
        self.alts.len()
    }

    /// Number of states (`n`).
    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    /// Ranking of the 1-based state `j`.
    pub fn state(&self, j: usize) -> Result<&Ranking> {
        if j == 0 || j > self.states.len() {
            return Err(Error::StateOutOfRange {
                index: j,
                n: self.states.len(),
            });
        }
        Ok(&self.states[j - 1])
    }

    pub fn states(&self) -> &[Ranking] {
        &self.states
    }

    /// Copy with state `j` (1-based) replaced.
    pub fn with_state(&self, j: usize, ranking: Ranking) -> Result<Profile> {
        self.state(j)?;
        let mut states = self.states.clone();
        states[j - 1] = ranking;
        Profile::new(Arc::clone(&self.alts), states)
    }

    fn check_pair(&self, x: Alt, y: Alt) -> Result<()> {
        for a in [x, y] {
            if !self.alts.contains(a) {
                return Err(Error::UnknownAlternative {
                    index: a.index(),
                    m: self.m(),
                });
            }
        }
        if x == y {
            return Err(Error::EqualAlternatives);
        }
        Ok(())
    }

    /// Number of states in which `x` is ranked above `y`.
    pub fn majority_count(&self, x: Alt, y: Alt) -> Result<usize> {
        self.check_pair(x, y)?;
        Ok(self.count_above(x, y))
    }

    /// Unchecked counterpart of [`majority_count`] for internal loops.
    pub(crate) fn count_above(&self, x: Alt, y: Alt) -> usize {
        self.states.iter().filter(|r| r.prefers(x, y)).count()
    }

    /// Bitmask over states (bit i set iff `x` is above `y` in state i+1).
    /// Two profiles agree on the {x,y} restriction iff their masks are equal.
    pub fn pair_mask(&self, x: Alt, y: Alt) -> u64 {
        let mut mask = 0u64;
        for (i, r) in self.states.iter().enumerate() {
            if r.prefers(x, y) {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// State-by-state agreement of the restrictions to `{x, y}`.
    pub fn restriction_equal(&self, other: &Profile, x: Alt, y: Alt) -> bool {
        self.num_states() == other.num_states() && self.pair_mask(x, y) == other.pair_mask(x, y)
    }

    /// The alternative beating every rival in strictly more than half the
    /// states, if it exists. Unique by construction.
    pub fn strict_condorcet_winner(&self) -> Option<Alt> {
        let n = self.num_states();
        self.alts.iter().find(|&x| {
            self.alts
                .iter()
                .all(|y| y == x || 2 * self.count_above(x, y) > n)
        })
    }

    /// All alternatives that at least tie (count ≥ n/2) against every rival.
    pub fn weak_condorcet_winners(&self) -> Vec<Alt> {
        let n = self.num_states();
        self.alts
            .iter()
            .filter(|&x| {
                self.alts
                    .iter()
                    .all(|y| y == x || 2 * self.count_above(x, y) >= n)
            })
            .collect()
    }

    /// The alternative beaten by every rival in strictly more than half the
    /// states, if it exists.
    pub fn strict_condorcet_loser(&self) -> Option<Alt> {
        let n = self.num_states();
        self.alts.iter().find(|&x| {
            self.alts
                .iter()
                .all(|y| y == x || 2 * self.count_above(y, x) > n)
        })
    }

    /// Alternatives not unanimously beaten by any single rival.
    pub fn pareto_undominated(&self) -> Vec<Alt> {
        let n = self.num_states();
        self.alts
            .iter()
            .filter(|&y| {
                !self
                    .alts
                    .iter()
                    .any(|x| x != y && self.count_above(x, y) == n)
            })
            .collect()
    }

    /// True iff the same two alternatives occupy ranks 1 and 2 in every
    /// state; returns them sorted by index.
    pub fn constant_top_two(&self) -> Option<(Alt, Alt)> {
        if self.m() < 2 {
            return None;
        }
        let pair = self.states[0].top_two();
        self.states
            .iter()
            .all(|r| r.top_two() == pair)
            .then_some(pair)
    }

    /// One state's `y` demoted by one rank; `None` when `y` is last there.
    pub fn demote_in_state(&self, j: usize, y: Alt) -> Result<Option<Profile>> {
        let ranking = self.state(j)?;
        Ok(match ranking.demote(y) {
            Some(demoted) => Some(self.with_state(j, demoted)?),
            None => None,
        })
    }
}

impl PartialEq for Profile {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.alts, &other.alts) || self.alts == other.alts)
            && self.states == other.states
    }
}

impl Eq for Profile {}

impl Hash for Profile {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.alts.names().hash(state);
        self.states.hash(state);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alts::AlternativeSet;

    fn xyz() -> Arc<AlternativeSet> {
        AlternativeSet::new(["x", "y", "z"]).unwrap()
    }

    /// x≻y≻z in both states.
    fn unanimous(alts: &Arc<AlternativeSet>) -> Profile {
        Profile::from_columns(alts, &[&["x", "y", "z"], &["x", "y", "z"]]).unwrap()
    }

    /// The 3-state majority cycle x≻y≻z | y≻z≻x | z≻x≻y.
    fn cycle(alts: &Arc<AlternativeSet>) -> Profile {
        Profile::from_columns(alts, &[&["x", "y", "z"], &["y", "z", "x"], &["z", "x", "y"]])
            .unwrap()
    }

    #[test]
    fn majority_count_antisymmetry() {
        let alts = xyz();
        let p = cycle(&alts);
        let (x, y) = (Alt(0), Alt(1));
        let n = p.num_states();
        assert_eq!(
            p.majority_count(x, y).unwrap() + p.majority_count(y, x).unwrap(),
            n
        );
        assert!(p.majority_count(x, x).is_err());
    }

    #[test]
    fn unanimous_profile_winners_and_losers() {
        let alts = xyz();
        let p = unanimous(&alts);
        assert_eq!(p.strict_condorcet_winner(), Some(Alt(0)));
        assert_eq!(p.strict_condorcet_loser(), Some(Alt(2)));
        assert_eq!(p.weak_condorcet_winners(), vec![Alt(0)]);
        assert_eq!(p.pareto_undominated(), vec![Alt(0)]);
    }

    #[test]
    fn cycle_has_no_winner() {
        let alts = xyz();
        let p = cycle(&alts);
        assert_eq!(p.strict_condorcet_winner(), None);
        assert_eq!(p.strict_condorcet_loser(), None);
        assert!(p.weak_condorcet_winners().is_empty());
        // each pair is 2-1, so nothing is unanimously dominated
        assert_eq!(p.pareto_undominated().len(), 3);
    }

    #[test]
    fn constant_top_two_detection() {
        let alts = xyz();
        // x,y occupy ranks 1–2 everywhere
        let p =
            Profile::from_columns(&alts, &[&["x", "y", "z"], &["y", "x", "z"]]).unwrap();
        assert_eq!(p.constant_top_two(), Some((Alt(0), Alt(1))));
        assert_eq!(cycle(&alts).constant_top_two(), None);
    }

    #[test]
    fn demote_in_state() {
        let alts = xyz();
        let p = unanimous(&alts);
        let q = p.demote_in_state(1, Alt(1)).unwrap().unwrap();
        assert_eq!(q.state(1).unwrap().order(), &[Alt(0), Alt(2), Alt(1)]);
        assert_eq!(q.state(2).unwrap(), p.state(2).unwrap());
        assert!(p.demote_in_state(1, Alt(2)).unwrap().is_none());
    }

    #[test]
    fn rejects_single_state() {
        let alts = xyz();
        let r = crate::ranking::Ranking::from_indices(&[0, 1, 2]).unwrap();
        assert!(Profile::new(alts, vec![r]).is_err());
    }

    #[test]
    fn state_count_is_capped_at_the_mask_width() {
        let alts = xyz();
        let r = crate::ranking::Ranking::from_indices(&[0, 1, 2]).unwrap();
        let at_cap = Profile::new(Arc::clone(&alts), vec![r.clone(); 64]).unwrap();
        assert_eq!(at_cap.pair_mask(Alt(0), Alt(1)), u64::MAX);
        assert!(matches!(
            Profile::new(alts, vec![r; 65]),
            Err(Error::TooManyStates(65))
        ));
    }
}
