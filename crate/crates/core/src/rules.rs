//! The rule catalog: named choice rules over profiles.
//!
//! Every rule maps a profile to a nonempty `ChoiceSet`. Resolute rules
//! return singletons. Rules declare the domain they are defined on and
//! refuse profiles outside it rather than guessing.

use std::fmt;

use crate::alts::{Alt, AlternativeSet};
use crate::domain::{first_place_counts, DomainSpec};
use crate::error::{Error, Result};
use crate::profile::Profile;

/// Nonempty set of chosen alternatives, kept sorted by index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChoiceSet {
    members: Vec<Alt>,
}

impl ChoiceSet {
    pub fn new(mut members: Vec<Alt>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::Internal("empty choice set".into()));
        }
        members.sort_by_key(|a| a.index());
        members.dedup();
        Ok(ChoiceSet { members })
    }

    pub fn singleton(x: Alt) -> Self {
        ChoiceSet { members: vec![x] }
    }

    /// Decodes a nonzero bitmask over alternative indices.
    pub fn from_mask(mask: u64, m: usize) -> Result<Self> {
        let members: Vec<Alt> = (0..m)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| Alt(i as u8))
            .collect();
        ChoiceSet::new(members)
    }

    pub fn members(&self) -> &[Alt] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: Alt) -> bool {
        self.members.binary_search_by_key(&x.index(), |a| a.index()).is_ok()
    }

    /// The sole member, when resolute.
    pub fn as_singleton(&self) -> Option<Alt> {
        match self.members[..] {
            [only] => Some(only),
            _ => None,
        }
    }

    /// Bitmask over alternative indices; bit i set iff alternative i chosen.
    pub fn as_mask(&self) -> u64 {
        self.members.iter().fold(0u64, |acc, a| acc | (1 << a.index()))
    }

    pub fn iter(&self) -> impl Iterator<Item = Alt> + '_ {
        self.members.iter().copied()
    }

    /// Renders as `{x, y}` using the given name table.
    pub fn format(&self, alts: &AlternativeSet) -> String {
        let names: Vec<&str> = self.members.iter().map(|&a| alts.name(a)).collect();
        format!("{{{}}}", names.join(", "))
    }
}

impl fmt::Display for ChoiceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.members.iter().map(|a| a.index().to_string()).collect();
        write!(f, "{{{}}}", idx.join(", "))
    }
}

/// Per-alternative Borda scores for one profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BordaTally {
    scores: Vec<u64>,
}

impl BordaTally {
    pub fn score(&self, x: Alt) -> u64 {
        self.scores[x.index()]
    }

    pub fn scores(&self) -> &[u64] {
        &self.scores
    }

    pub fn total(&self) -> u64 {
        self.scores.iter().sum()
    }

    /// All alternatives attaining the maximum score.
    pub fn winners(&self) -> ChoiceSet {
        let max = *self.scores.iter().max().expect("m >= 1");
        let members = self
            .scores
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == max)
            .map(|(i, _)| Alt(i as u8))
            .collect();
        ChoiceSet::new(members).expect("max is attained")
    }
}

fn require_three(rule: &str, p: &Profile) -> Result<()> {
    let m = p.m();
    if m < 3 {
        return Err(Error::TooFewAlternatives {
            rule: rule.to_string(),
            m,
        });
    }
    Ok(())
}

/// State-salient rule: the top of state `j` wins outright.
pub fn eval_s_sdr(p: &Profile, j: usize) -> Result<ChoiceSet> {
    require_three(&format!("s-sdr:{j}"), p)?;
    let state = p.state(j)?;
    Ok(ChoiceSet::singleton(state.top()))
}

/// Selects the strict Condorcet winner; defined only where one exists.
pub fn eval_strict_condorcet(p: &Profile) -> Result<ChoiceSet> {
    require_three("strict-condorcet", p)?;
    match p.strict_condorcet_winner() {
        Some(w) => Ok(ChoiceSet::singleton(w)),
        None => Err(Error::OffDomain {
            rule: "strict-condorcet".into(),
            reason: "profile has no strict Condorcet winner".into(),
        }),
    }
}

/// Selects all weak Condorcet winners; defined only where some exist.
pub fn eval_weak_condorcet(p: &Profile) -> Result<ChoiceSet> {
    require_three("weak-condorcet", p)?;
    let winners = p.weak_condorcet_winners();
    if winners.is_empty() {
        return Err(Error::OffDomain {
            rule: "weak-condorcet".into(),
            reason: "profile has no weak Condorcet winner".into(),
        });
    }
    ChoiceSet::new(winners)
}

/// Plurality by first-place counts. With `least_index` the tie among
/// maximal counts breaks to the lowest alternative index, giving a
/// resolute rule; otherwise the full argmax set is returned.
pub fn eval_plurality(p: &Profile, least_index: bool) -> Result<ChoiceSet> {
    let name = if least_index { "plurality-least-index" } else { "plurality" };
    require_three(name, p)?;
    let counts = first_place_counts(p);
    let max = *counts.iter().max().expect("m >= 1");
    let members: Vec<Alt> = counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c == max)
        .map(|(i, _)| Alt(i as u8))
        .collect();
    if least_index {
        Ok(ChoiceSet::singleton(members[0]))
    } else {
        ChoiceSet::new(members)
    }
}

/// Borda scores: each state awards `m + 1 - rank`, summed over states.
pub fn borda_scores(p: &Profile) -> Result<BordaTally> {
    require_three("borda", p)?;
    let m = p.m() as u64;
    let mut scores = vec![0u64; p.m()];
    for ranking in p.states() {
        for (pos, &alt) in ranking.order().iter().enumerate() {
            let rank = pos as u64 + 1;
            scores[alt.index()] += m + 1 - rank;
        }
    }
    Ok(BordaTally { scores })
}

/// Selects the maximal Borda scorers.
pub fn eval_borda(p: &Profile) -> Result<ChoiceSet> {
    Ok(borda_scores(p)?.winners())
}

/// Selects the bottom alternative of state 1.
pub fn eval_last_of_state_one(p: &Profile) -> Result<ChoiceSet> {
    require_three("last-of-state-one", p)?;
    Ok(ChoiceSet::singleton(p.state(1)?.bottom()))
}

/// Selects every alternative that tops at least one state.
pub fn eval_first_somewhere(p: &Profile) -> Result<ChoiceSet> {
    require_three("first-somewhere", p)?;
    let mut members: Vec<Alt> = p.states().iter().map(|r| r.top()).collect();
    members.sort_by_key(|a| a.index());
    members.dedup();
    ChoiceSet::new(members)
}

/// Identifies one rule from the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleKind {
    StateSalient { state: usize },
    StrictCondorcet,
    WeakCondorcet,
    Plurality { least_index: bool },
    Borda,
    LastOfStateOne,
    FirstSomewhere,
}

/// A catalog rule bound to its evaluation behaviour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rule {
    kind: RuleKind,
}

impl Rule {
    pub fn new(kind: RuleKind) -> Self {
        Rule { kind }
    }

    pub fn kind(&self) -> RuleKind {
        self.kind
    }

    pub fn name(&self) -> String {
        match self.kind {
            RuleKind::StateSalient { state } => format!("s-sdr:{state}"),
            RuleKind::StrictCondorcet => "strict-condorcet".into(),
            RuleKind::WeakCondorcet => "weak-condorcet".into(),
            RuleKind::Plurality { least_index: false } => "plurality".into(),
            RuleKind::Plurality { least_index: true } => "plurality-least-index".into(),
            RuleKind::Borda => "borda".into(),
            RuleKind::LastOfStateOne => "last-of-state-one".into(),
            RuleKind::FirstSomewhere => "first-somewhere".into(),
        }
    }

    /// Largest domain the rule is total on.
    pub fn domain(&self) -> DomainSpec {
        match self.kind {
            RuleKind::StrictCondorcet => DomainSpec::StrictCondorcet,
            RuleKind::WeakCondorcet => DomainSpec::WeakCondorcet,
            _ => DomainSpec::Full,
        }
    }

    /// True for rules whose output is always a singleton.
    pub fn is_resolute(&self) -> bool {
        matches!(
            self.kind,
            RuleKind::StateSalient { .. }
                | RuleKind::StrictCondorcet
                | RuleKind::Plurality { least_index: true }
                | RuleKind::LastOfStateOne
        )
    }

    pub fn evaluate(&self, p: &Profile) -> Result<ChoiceSet> {
        match self.kind {
            RuleKind::StateSalient { state } => eval_s_sdr(p, state),
            RuleKind::StrictCondorcet => eval_strict_condorcet(p),
            RuleKind::WeakCondorcet => eval_weak_condorcet(p),
            RuleKind::Plurality { least_index } => eval_plurality(p, least_index),
            RuleKind::Borda => eval_borda(p),
            RuleKind::LastOfStateOne => eval_last_of_state_one(p),
            RuleKind::FirstSomewhere => eval_first_somewhere(p),
        }
    }
}

/// Valid rule names, for error messages. `s-sdr:J` stands for any
/// positive state number `J`.
pub const RULE_NAME_PATTERNS: &[&str] = &[
    "s-sdr:J",
    "strict-condorcet",
    "weak-condorcet",
    "plurality",
    "plurality-least-index",
    "borda",
    "last-of-state-one",
    "first-somewhere",
];

/// Parses a rule name, including `s-sdr:J` forms.
pub fn lookup(name: &str) -> Result<Rule> {
    if let Some(rest) = name.strip_prefix("s-sdr:") {
        let state: usize = rest.parse().map_err(|_| unknown_rule(name))?;
        if state == 0 {
            return Err(unknown_rule(name));
        }
        return Ok(Rule::new(RuleKind::StateSalient { state }));
    }
    let kind = match name {
        "strict-condorcet" => RuleKind::StrictCondorcet,
        "weak-condorcet" => RuleKind::WeakCondorcet,
        "plurality" => RuleKind::Plurality { least_index: false },
        "plurality-least-index" => RuleKind::Plurality { least_index: true },
        "borda" => RuleKind::Borda,
        "last-of-state-one" => RuleKind::LastOfStateOne,
        "first-somewhere" => RuleKind::FirstSomewhere,
        _ => return Err(unknown_rule(name)),
    };
    Ok(Rule::new(kind))
}

fn unknown_rule(name: &str) -> Error {
    Error::UnknownRule {
        name: name.to_string(),
        valid: RULE_NAME_PATTERNS.join(", "),
    }
}

/// Every catalog rule instantiated for an `n`-state context: one
/// state-salient rule per state, then the fixed seven.
pub fn catalog(n: usize) -> Vec<Rule> {
    let mut rules: Vec<Rule> = (1..=n)
        .map(|state| Rule::new(RuleKind::StateSalient { state }))
        .collect();
    rules.extend([
        Rule::new(RuleKind::StrictCondorcet),
        Rule::new(RuleKind::WeakCondorcet),
        Rule::new(RuleKind::Plurality { least_index: false }),
        Rule::new(RuleKind::Plurality { least_index: true }),
        Rule::new(RuleKind::Borda),
        Rule::new(RuleKind::LastOfStateOne),
        Rule::new(RuleKind::FirstSomewhere),
    ]);
    rules
}

/// Anything that picks a choice set from a profile: catalog rules and
/// finite choice-function tables alike.
pub trait ChoiceFn {
    fn choose(&self, p: &Profile) -> Result<ChoiceSet>;
    fn label(&self) -> String;
    fn domain(&self) -> DomainSpec;
}

impl ChoiceFn for Rule {
    fn choose(&self, p: &Profile) -> Result<ChoiceSet> {
        self.evaluate(p)
    }

    fn label(&self) -> String {
        self.name()
    }

    fn domain(&self) -> DomainSpec {
        Rule::domain(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(cols: &[&[&str]]) -> Profile {
        let alts = AlternativeSet::canonical(cols[0].len());
        Profile::from_columns(&alts, cols).unwrap()
    }

    #[test]
    fn s_sdr_tracks_its_state() {
        let p = profile(&[&["x", "y", "z"], &["z", "y", "x"]]);
        assert_eq!(eval_s_sdr(&p, 1).unwrap(), ChoiceSet::singleton(Alt(0)));
        assert_eq!(eval_s_sdr(&p, 2).unwrap(), ChoiceSet::singleton(Alt(2)));
        assert!(matches!(eval_s_sdr(&p, 3), Err(Error::StateOutOfRange { .. })));
    }

    #[test]
    fn condorcet_rules_respect_their_domains() {
        let cycle = profile(&[&["x", "y", "z"], &["y", "z", "x"], &["z", "x", "y"]]);
        assert!(matches!(
            eval_strict_condorcet(&cycle),
            Err(Error::OffDomain { .. })
        ));
        assert!(matches!(
            eval_weak_condorcet(&cycle),
            Err(Error::OffDomain { .. })
        ));

        let p = profile(&[&["x", "y", "z"], &["x", "z", "y"], &["y", "x", "z"]]);
        assert_eq!(eval_strict_condorcet(&p).unwrap(), ChoiceSet::singleton(Alt(0)));
        assert_eq!(eval_weak_condorcet(&p).unwrap(), ChoiceSet::singleton(Alt(0)));
    }

    #[test]
    fn plurality_set_and_tiebreak() {
        // x and z each top one state, y tops none
        let p = profile(&[&["x", "y", "z"], &["z", "y", "x"]]);
        let set = eval_plurality(&p, false).unwrap();
        assert_eq!(set.members(), &[Alt(0), Alt(2)]);
        let resolute = eval_plurality(&p, true).unwrap();
        assert_eq!(resolute, ChoiceSet::singleton(Alt(0)));
    }

    #[test]
    fn borda_scores_sum_to_invariant() {
        let p = profile(&[&["x", "y", "z"], &["y", "z", "x"], &["z", "x", "y"]]);
        let tally = borda_scores(&p).unwrap();
        // n * m * (m + 1) / 2 = 3 * 3 * 4 / 2
        assert_eq!(tally.total(), 18);
        assert_eq!(tally.score(Alt(0)), 6);
        assert_eq!(eval_borda(&p).unwrap().len(), 3);
    }

    #[test]
    fn positional_rules() {
        let p = profile(&[&["x", "y", "z"], &["y", "z", "x"]]);
        assert_eq!(eval_last_of_state_one(&p).unwrap(), ChoiceSet::singleton(Alt(2)));
        let fs = eval_first_somewhere(&p).unwrap();
        assert_eq!(fs.members(), &[Alt(0), Alt(1)]);
    }

    #[test]
    fn two_alternatives_rejected_by_rules() {
        let alts = AlternativeSet::canonical(2);
        let p = Profile::from_columns(&alts, &[&["x", "y"], &["y", "x"]]).unwrap();
        assert!(matches!(
            eval_plurality(&p, false),
            Err(Error::TooFewAlternatives { .. })
        ));
        assert!(matches!(eval_s_sdr(&p, 1), Err(Error::TooFewAlternatives { .. })));
    }

    #[test]
    fn lookup_round_trips_catalog_names() {
        for rule in catalog(4) {
            let back = lookup(&rule.name()).unwrap();
            assert_eq!(back, rule);
        }
        assert!(lookup("s-sdr:0").is_err());
        assert!(lookup("s-sdr:x").is_err());
        assert!(matches!(lookup("banana"), Err(Error::UnknownRule { .. })));
    }

    #[test]
    fn choice_set_masks() {
        let set = ChoiceSet::new(vec![Alt(2), Alt(0)]).unwrap();
        assert_eq!(set.as_mask(), 0b101);
        assert_eq!(ChoiceSet::from_mask(0b101, 3).unwrap(), set);
        assert!(ChoiceSet::from_mask(0, 3).is_err());
        assert!(set.contains(Alt(0)));
        assert!(!set.contains(Alt(1)));
    }
}
