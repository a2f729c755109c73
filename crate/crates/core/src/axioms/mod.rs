//! Axiom checkers.
//!
//! Each checker decides one axiom for one choice function over a finite
//! collection of profiles, either the exhaustively enumerated domain at
//! `(m, n)` or a seeded random sample. A failing check carries a `Witness`
//! that re-violates the axiom when replayed in isolation.
//!
//! Exhaustive mode reports the canonical first violation:
//! - single-profile axioms scan profiles in enumeration order, and inside a
//!   profile scan alternatives (or pairs) in ascending index order;
//! - independence scans ordered pairs `(x, y)` outermost, then profile
//!   index of the choosing side, then of the breaching side;
//! - the monotonicity axioms scan (first profile, second profile, carried
//!   alternative) in ascending order.
//!
//! The optimized scans in [`exhaustive`] provably reproduce the order of
//! the literal quantifier expansions kept in [`naive`]; the test suite
//! compares the two on small full domains.

pub mod exhaustive;
pub mod naive;
pub mod random;

use std::fmt;
use std::sync::Arc;

use crate::alts::{Alt, AlternativeSet};
use crate::domain::DomainSpec;
use crate::enumerate::collect_domain;
use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::rules::{ChoiceFn, ChoiceSet};

/// The eight checkable axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    Wdc,
    Giia,
    Mpt,
    WeakMonotonicity,
    DownMonotonicity,
    ResoluteForPairs,
    CondorcetWinner,
    AntiCondorcetLoser,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::Wdc,
        Axiom::Giia,
        Axiom::Mpt,
        Axiom::WeakMonotonicity,
        Axiom::DownMonotonicity,
        Axiom::ResoluteForPairs,
        Axiom::CondorcetWinner,
        Axiom::AntiCondorcetLoser,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Wdc => "wdc",
            Axiom::Giia => "giia",
            Axiom::Mpt => "mpt",
            Axiom::WeakMonotonicity => "weak-monotonicity",
            Axiom::DownMonotonicity => "down-monotonicity",
            Axiom::ResoluteForPairs => "resolute-for-pairs",
            Axiom::CondorcetWinner => "condorcet-winner",
            Axiom::AntiCondorcetLoser => "anti-condorcet-loser",
        }
    }

    pub fn parse(name: &str) -> Result<Axiom> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.name() == name)
            .ok_or_else(|| Error::UnknownAxiom {
                name: name.to_string(),
                valid: Axiom::ALL.map(|a| a.name()).join(", "),
            })
    }

    /// True for axioms whose violations involve two profiles.
    pub fn two_profile(self) -> bool {
        matches!(
            self,
            Axiom::Giia | Axiom::WeakMonotonicity | Axiom::DownMonotonicity
        )
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive,
    Random { seed: u64, budget: u64 },
}

/// A concrete violation: the involved profile(s) plus enough annotation to
/// replay it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub profiles: Vec<Profile>,
    pub pair: Option<(Alt, Alt)>,
    pub chosen: Option<Alt>,
    pub state: Option<usize>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub rule: String,
    pub mode: CheckMode,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub profiles_checked: u64,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Checks `axiom` for `cf` over the whole domain (exhaustive) or a seeded
/// sample (random). The choice function must be total on the checked
/// domain; anything narrower is rejected up front.
pub fn check(
    cf: &dyn ChoiceFn,
    axiom: Axiom,
    alts: &Arc<AlternativeSet>,
    n: usize,
    domain: DomainSpec,
    mode: CheckMode,
    max_visits: u64,
) -> Result<AxiomReport> {
    if !cf.domain().covers(domain) {
        return Err(Error::DomainMismatch {
            rule_domain: cf.domain().name().to_string(),
            checked: domain.name().to_string(),
        });
    }
    match mode {
        CheckMode::Exhaustive => {
            let profiles = collect_domain(alts, n, domain, max_visits)?;
            check_on(cf, axiom, &profiles)
        }
        CheckMode::Random { seed, budget } => {
            random::check_random(cf, axiom, alts, n, domain, seed, budget)
        }
    }
}

/// Exhaustively checks `axiom` over an explicit profile list. Used both by
/// [`check`] and directly on hand-picked profile sets.
pub fn check_on(cf: &dyn ChoiceFn, axiom: Axiom, profiles: &[Profile]) -> Result<AxiomReport> {
    let choices = evaluate_all(cf, profiles)?;
    let witness = exhaustive::find_violation(axiom, profiles, &choices)?;
    Ok(assemble(cf, axiom, CheckMode::Exhaustive, witness, profiles.len() as u64))
}

pub(crate) fn evaluate_all(cf: &dyn ChoiceFn, profiles: &[Profile]) -> Result<Vec<ChoiceSet>> {
    profiles.iter().map(|p| cf.choose(p)).collect()
}

pub(crate) fn assemble(
    cf: &dyn ChoiceFn,
    axiom: Axiom,
    mode: CheckMode,
    witness: Option<Witness>,
    profiles_checked: u64,
) -> AxiomReport {
    AxiomReport {
        axiom,
        rule: cf.label(),
        mode,
        verdict: if witness.is_some() { Verdict::Fail } else { Verdict::Pass },
        witness,
        profiles_checked,
    }
}

/// Replays a witness against the axiom predicate from scratch; true means
/// the violation is genuine for `cf`.
pub fn violates(cf: &dyn ChoiceFn, axiom: Axiom, witness: &Witness) -> Result<bool> {
    let profiles = &witness.profiles;
    if axiom.two_profile() {
        if profiles.len() != 2 {
            return Ok(false);
        }
    } else if profiles.len() != 1 {
        return Ok(false);
    }
    let choices = evaluate_all(cf, profiles)?;
    Ok(exhaustive::find_violation(axiom, profiles, &choices)?.is_some())
}

pub fn check_wdc(
    cf: &dyn ChoiceFn,
    alts: &Arc<AlternativeSet>,
    n: usize,
    domain: DomainSpec,
    mode: CheckMode,
    max_visits: u64,
) -> Result<AxiomReport> {
    check(cf, Axiom::Wdc, alts, n, domain, mode, max_visits)
}

pub fn check_giia(
    cf: &dyn ChoiceFn,
    alts: &Arc<AlternativeSet>,
    n: usize,
    domain: DomainSpec,
    mode: CheckMode,
    max_visits: u64,
) -> Result<AxiomReport> {
    check(cf, Axiom::Giia, alts, n, domain, mode, max_visits)
}

pub fn check_mpt(
    cf: &dyn ChoiceFn,
    alts: &Arc<AlternativeSet>,
    n: usize,
    domain: DomainSpec,
    mode: CheckMode,
    max_visits: u64,
) -> Result<AxiomReport> {
    check(cf, Axiom::Mpt, alts, n, domain, mode, max_visits)
}

pub fn check_weak_monotonicity(
    cf: &dyn ChoiceFn,
    alts: &Arc<AlternativeSet>,
    n: usize,
    domain: DomainSpec,
    mode: CheckMode,
    max_visits: u64,
) -> Result<AxiomReport> {
    check(cf, Axiom::WeakMonotonicity, alts, n, domain, mode, max_visits)
}

pub fn check_down_monotonicity(
    cf: &dyn ChoiceFn,
    alts: &Arc<AlternativeSet>,
    n: usize,
    domain: DomainSpec,
    mode: CheckMode,
    max_visits: u64,
) -> Result<AxiomReport> {
    check(cf, Axiom::DownMonotonicity, alts, n, domain, mode, max_visits)
}

pub fn check_resolute_for_pairs(
    cf: &dyn ChoiceFn,
    alts: &Arc<AlternativeSet>,
    n: usize,
    domain: DomainSpec,
    mode: CheckMode,
    max_visits: u64,
) -> Result<AxiomReport> {
    check(cf, Axiom::ResoluteForPairs, alts, n, domain, mode, max_visits)
}

pub fn check_condorcet_winner_property(
    cf: &dyn ChoiceFn,
    alts: &Arc<AlternativeSet>,
    n: usize,
    domain: DomainSpec,
    mode: CheckMode,
    max_visits: u64,
) -> Result<AxiomReport> {
    check(cf, Axiom::CondorcetWinner, alts, n, domain, mode, max_visits)
}

pub fn check_anti_condorcet_loser(
    cf: &dyn ChoiceFn,
    alts: &Arc<AlternativeSet>,
    n: usize,
    domain: DomainSpec,
    mode: CheckMode,
    max_visits: u64,
) -> Result<AxiomReport> {
    check(cf, Axiom::AntiCondorcetLoser, alts, n, domain, mode, max_visits)
}

// Witness notes are built here so every checker (optimized, naive, random)
// emits byte-identical text for the same violation.

pub(crate) fn note_wdc(p: &Profile, dominator: Alt, chosen: Alt) -> String {
    let alts = p.alts();
    format!(
        "{} is chosen but ranked below {} in every state",
        alts.name(chosen),
        alts.name(dominator)
    )
}

pub(crate) fn note_giia(p: &Profile, x: Alt, y: Alt) -> String {
    let alts = p.alts();
    let (x, y) = (alts.name(x), alts.name(y));
    format!(
        "the {{{x}, {y}}} restrictions agree in every state; {x} is chosen and {y} rejected at the first profile, yet {y} is chosen at the second"
    )
}

pub(crate) fn note_mpt(p: &Profile, x: Alt, y: Alt, wins: usize, f: &ChoiceSet) -> String {
    let alts = p.alts();
    format!(
        "{x} and {y} fill the top two ranks in every state and {x} beats {y} in {wins} of {n} states, yet the choice is {f}",
        x = alts.name(x),
        y = alts.name(y),
        wins = wins,
        n = p.num_states(),
        f = f.format(alts)
    )
}

pub(crate) fn note_wm(p: &Profile, x: Alt) -> String {
    format!(
        "{x} beats every rival in at least the same states at the second profile as at the first, yet {x} is dropped there",
        x = p.alts().name(x)
    )
}

pub(crate) fn note_dm(p: &Profile, x: Alt, y: Alt, state: usize) -> String {
    let alts = p.alts();
    format!(
        "demoting {} by one rank in state {} drops the chosen {}",
        alts.name(y),
        state,
        alts.name(x)
    )
}

pub(crate) fn note_rfp(p: &Profile, a: Alt, b: Alt, f: &ChoiceSet) -> String {
    let alts = p.alts();
    format!(
        "the top two ranks hold {{{}, {}}} in every state, yet the choice is {} rather than either singleton",
        alts.name(a),
        alts.name(b),
        f.format(alts)
    )
}

pub(crate) fn note_cw(p: &Profile, winner: Alt, f: &ChoiceSet) -> String {
    let alts = p.alts();
    format!(
        "the strict Condorcet winner is {} but the choice is {}",
        alts.name(winner),
        f.format(alts)
    )
}

pub(crate) fn note_acl(p: &Profile, loser: Alt) -> String {
    format!(
        "the chosen {} is the strict Condorcet loser",
        p.alts().name(loser)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::DEFAULT_MAX_VISITS;
    use crate::rules::lookup;

    fn rule(name: &str) -> crate::rules::Rule {
        lookup(name).unwrap()
    }

    fn exhaustive(
        name: &str,
        m: usize,
        n: usize,
        domain: DomainSpec,
        axiom: Axiom,
    ) -> AxiomReport {
        let alts = AlternativeSet::canonical(m);
        check(
            &rule(name),
            axiom,
            &alts,
            n,
            domain,
            CheckMode::Exhaustive,
            DEFAULT_MAX_VISITS,
        )
        .unwrap()
    }

    #[test]
    fn last_of_state_one_wdc_fails_on_first_unanimous_profile() {
        let report = exhaustive("last-of-state-one", 3, 2, DomainSpec::Full, Axiom::Wdc);
        assert_eq!(report.verdict, Verdict::Fail);
        let w = report.witness.unwrap();
        let p = &w.profiles[0];
        assert_eq!(p.state(1).unwrap().lex_index(), 0);
        assert_eq!(p.state(2).unwrap().lex_index(), 0);
        assert_eq!(w.chosen, Some(Alt(2)));
    }

    #[test]
    fn last_of_state_one_satisfies_giia() {
        let report = exhaustive("last-of-state-one", 3, 2, DomainSpec::Full, Axiom::Giia);
        assert_eq!(report.verdict, Verdict::Pass);
        assert_eq!(report.profiles_checked, 36);
    }

    #[test]
    fn s_sdr_passes_the_core_axioms() {
        for axiom in [
            Axiom::Wdc,
            Axiom::Giia,
            Axiom::WeakMonotonicity,
            Axiom::DownMonotonicity,
            Axiom::ResoluteForPairs,
        ] {
            let report = exhaustive("s-sdr:1", 3, 2, DomainSpec::Full, axiom);
            assert_eq!(report.verdict, Verdict::Pass, "axiom {}", axiom);
        }
    }

    #[test]
    fn last_of_state_one_fails_both_monotonicities() {
        for axiom in [Axiom::WeakMonotonicity, Axiom::DownMonotonicity] {
            let report = exhaustive("last-of-state-one", 3, 2, DomainSpec::Full, axiom);
            assert_eq!(report.verdict, Verdict::Fail, "axiom {}", axiom);
            let w = report.witness.unwrap();
            assert!(violates(&rule("last-of-state-one"), axiom, &w).unwrap());
        }
    }

    #[test]
    fn strict_condorcet_passes_on_its_domain() {
        for axiom in [
            Axiom::Wdc,
            Axiom::Giia,
            Axiom::Mpt,
            Axiom::ResoluteForPairs,
            Axiom::CondorcetWinner,
            Axiom::AntiCondorcetLoser,
        ] {
            let report = exhaustive(
                "strict-condorcet",
                3,
                3,
                DomainSpec::StrictCondorcet,
                axiom,
            );
            assert_eq!(report.verdict, Verdict::Pass, "axiom {}", axiom);
        }
    }

    #[test]
    fn domain_mismatch_is_rejected() {
        let alts = AlternativeSet::canonical(3);
        let err = check(
            &rule("strict-condorcet"),
            Axiom::Wdc,
            &alts,
            2,
            DomainSpec::Full,
            CheckMode::Exhaustive,
            DEFAULT_MAX_VISITS,
        )
        .unwrap_err();
        assert!(matches!(err, Error::DomainMismatch { .. }));
    }

    #[test]
    fn s_sdr_fails_mpt_on_full_domain() {
        let report = exhaustive("s-sdr:1", 3, 3, DomainSpec::Full, Axiom::Mpt);
        assert_eq!(report.verdict, Verdict::Fail);
        let w = report.witness.unwrap();
        assert!(violates(&rule("s-sdr:1"), Axiom::Mpt, &w).unwrap());
        // state-1 top must be the minority alternative of the constant pair
        let p = &w.profiles[0];
        let (x, _) = w.pair.unwrap();
        assert_ne!(p.state(1).unwrap().top(), x);
    }

    #[test]
    fn random_mode_is_reproducible_and_sound() {
        let alts = AlternativeSet::canonical(3);
        let mode = CheckMode::Random { seed: 5, budget: 2000 };
        let a = check(
            &rule("plurality"),
            Axiom::Giia,
            &alts,
            3,
            DomainSpec::Full,
            mode,
            DEFAULT_MAX_VISITS,
        )
        .unwrap();
        let b = check(
            &rule("plurality"),
            Axiom::Giia,
            &alts,
            3,
            DomainSpec::Full,
            mode,
            DEFAULT_MAX_VISITS,
        )
        .unwrap();
        assert_eq!(a, b);
        if let Some(w) = &a.witness {
            assert!(violates(&rule("plurality"), Axiom::Giia, w).unwrap());
        }
    }

    #[test]
    fn axiom_names_round_trip() {
        for axiom in Axiom::ALL {
            assert_eq!(Axiom::parse(axiom.name()).unwrap(), axiom);
        }
        assert!(matches!(Axiom::parse("nope"), Err(Error::UnknownAxiom { .. })));
    }
}
