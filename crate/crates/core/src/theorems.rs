//! Mechanized verification of the structural results behind the crate:
//! the salient-state characterization (forward check and certificate
//! extraction), uniqueness of the strict-Condorcet rule under GIIA + MPT
//! via companion-profile propagation, equivalence of the two monotonicity
//! axioms on sampled choice functions, the pairs-plus-monotonicity route
//! to independence, the unique-weak-winner violation, and the Borda
//! score identities.

use std::collections::HashMap;
use std::sync::Arc;

use rand::Rng;

use crate::alts::{Alt, AlternativeSet};
use crate::axioms::{self, Axiom, CheckMode, Verdict, Witness};
use crate::corpus;
use crate::domain::DomainSpec;
use crate::enumerate::{collect_domain, full_space_size};
use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::ranking::{factorial, Ranking};
use crate::rules::{borda_scores, catalog, eval_borda, ChoiceFn, ChoiceSet, Rule};
use crate::sample::{rng_for_index, sample_profile};

/// A choice function given extensionally: a finite profile list with one
/// choice set per profile.
#[derive(Debug, Clone)]
pub struct CfTable {
    profiles: Vec<Profile>,
    choices: Vec<ChoiceSet>,
    index: HashMap<Profile, usize>,
    label: String,
    domain: DomainSpec,
}

impl CfTable {
    pub fn new(
        profiles: Vec<Profile>,
        choices: Vec<ChoiceSet>,
        label: impl Into<String>,
        domain: DomainSpec,
    ) -> Result<Self> {
        if profiles.len() != choices.len() {
            return Err(Error::Internal(
                "table requires one choice set per profile".into(),
            ));
        }
        let mut index = HashMap::with_capacity(profiles.len());
        for (i, p) in profiles.iter().enumerate() {
            if index.insert(p.clone(), i).is_some() {
                return Err(Error::Internal("duplicate profile in table".into()));
            }
        }
        Ok(CfTable {
            profiles,
            choices,
            index,
            label: label.into(),
            domain,
        })
    }

    /// Materializes `cf` over the enumerated `domain` at `(alts, n)`.
    pub fn tabulate(
        cf: &dyn ChoiceFn,
        alts: &Arc<AlternativeSet>,
        n: usize,
        domain: DomainSpec,
        max_visits: u64,
    ) -> Result<Self> {
        let profiles = collect_domain(alts, n, domain, max_visits)?;
        let choices = profiles.iter().map(|p| cf.choose(p)).collect::<Result<_>>()?;
        CfTable::new(profiles, choices, format!("table({})", cf.label()), domain)
    }

    pub fn profiles(&self) -> &[Profile] {
        &self.profiles
    }

    pub fn choices(&self) -> &[ChoiceSet] {
        &self.choices
    }

    pub fn len(&self) -> usize {
        self.profiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.profiles.is_empty()
    }

    /// True when the table covers the whole space at its `(m, n)`.
    pub fn is_full(&self) -> bool {
        match self.profiles.first() {
            None => false,
            Some(p) => {
                full_space_size(p.m(), p.num_states()) == Some(self.profiles.len() as u64)
            }
        }
    }
}

impl ChoiceFn for CfTable {
    fn choose(&self, p: &Profile) -> Result<ChoiceSet> {
        match self.index.get(p) {
            Some(&i) => Ok(self.choices[i].clone()),
            None => Err(Error::NotInTable),
        }
    }

    fn label(&self) -> String {
        self.label.clone()
    }

    fn domain(&self) -> DomainSpec {
        self.domain
    }
}

/// Random table over the full `(m, n)` space: resolute mode draws uniform
/// singletons, otherwise uniform nonempty subsets.
pub fn random_cf_table(
    alts: &Arc<AlternativeSet>,
    n: usize,
    resolute: bool,
    label: impl Into<String>,
    rng: &mut impl Rng,
    max_visits: u64,
) -> Result<CfTable> {
    let m = alts.len();
    let profiles = collect_domain(alts, n, DomainSpec::Full, max_visits)?;
    let choices = profiles
        .iter()
        .map(|_| {
            if resolute {
                Ok(ChoiceSet::singleton(Alt(rng.gen_range(0..m) as u8)))
            } else {
                ChoiceSet::from_mask(rng.gen_range(1..(1u64 << m)), m)
            }
        })
        .collect::<Result<_>>()?;
    CfTable::new(profiles, choices, label, DomainSpec::Full)
}

/// Rebuilds each state so that x and y fill ranks 1 and 2, keeping their
/// relative order and the relative order of everything else.
pub fn build_companion_profile(p: &Profile, x: Alt, y: Alt) -> Result<Profile> {
    if x == y {
        return Err(Error::EqualAlternatives);
    }
    if p.m() < 3 {
        return Err(Error::TooFewAlternatives {
            rule: "companion-profile".into(),
            m: p.m(),
        });
    }
    let states = p
        .states()
        .iter()
        .map(|r| {
            let mut order = Vec::with_capacity(r.m());
            let mut rest = Vec::with_capacity(r.m() - 2);
            for &a in r.order() {
                if a == x || a == y {
                    order.push(a);
                } else {
                    rest.push(a);
                }
            }
            order.extend(rest);
            Ranking::from_order(order, r.m()).expect("reordered permutation")
        })
        .collect();
    let companion = Profile::new(Arc::clone(p.alts()), states)?;
    for state in 1..=p.num_states() {
        let before = p.state(state)?;
        let after = companion.state(state)?;
        assert!(after.rank_of(x)? <= 2 && after.rank_of(y)? <= 2);
        assert_eq!(before.prefers(x, y), after.prefers(x, y));
        let others_before: Vec<Alt> = before
            .order()
            .iter()
            .copied()
            .filter(|&a| a != x && a != y)
            .collect();
        let others_after: Vec<Alt> = after
            .order()
            .iter()
            .copied()
            .filter(|&a| a != x && a != y)
            .collect();
        assert_eq!(others_before, others_after);
    }
    Ok(companion)
}

/// Outcome of the companion-profile propagation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thm2Summary {
    pub m: usize,
    pub n: usize,
    pub domain_size: usize,
    pub pinned: usize,
    pub all_pinned: bool,
    pub mpt_pins: u64,
    pub giia_exclusions: u64,
}

/// Certifies that on the strict-Condorcet domain at `(m, n)` the only
/// choice function satisfying GIIA and MPT picks the strict winner
/// everywhere. Candidate winner sets start full; for each profile R with
/// winner x and each rival y, the companion R^{x,y} keeps both
/// restrictions of R but lifts x and y to the top two ranks, MPT pins the
/// companion's choice to {x}, and GIIA then excludes y at R. Success means
/// every profile ends pinned to its winner.
pub fn verify_theorem2_uniqueness(m: usize, n: usize, max_visits: u64) -> Result<Thm2Summary> {
    let alts = AlternativeSet::canonical(m);
    let profiles = collect_domain(&alts, n, DomainSpec::StrictCondorcet, max_visits)?;
    let index: HashMap<&Profile, usize> =
        profiles.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let full_mask = (1u64 << m) - 1;
    let mut candidates = vec![full_mask; profiles.len()];
    let mut mpt_pins = 0u64;
    let mut giia_exclusions = 0u64;
    let winners: Vec<Alt> = profiles
        .iter()
        .map(|p| {
            p.strict_condorcet_winner()
                .ok_or_else(|| Error::Internal("profile without strict winner in domain".into()))
        })
        .collect::<Result<_>>()?;
    for (ri, p) in profiles.iter().enumerate() {
        let x = winners[ri];
        for yi in 0..m {
            let y = Alt(yi as u8);
            if y == x {
                continue;
            }
            let companion = build_companion_profile(p, x, y)?;
            if companion.strict_condorcet_winner() != Some(x) {
                return Err(Error::Internal(
                    "companion profile lost the strict winner".into(),
                ));
            }
            let ci = *index
                .get(&companion)
                .ok_or_else(|| Error::Internal("companion missing from domain".into()))?;
            // MPT: x and y top the companion everywhere and x has the
            // majority, so the companion's choice is pinned to {x}.
            candidates[ci] &= 1 << x.index();
            if candidates[ci] == 0 {
                return Err(Error::Internal("contradictory pin".into()));
            }
            mpt_pins += 1;
            // GIIA: the companion and R agree on {x, y}, x is chosen and y
            // rejected at the companion, so y is rejected at R.
            candidates[ri] &= !(1 << y.index());
            if candidates[ri] == 0 {
                return Err(Error::Internal("all candidates excluded".into()));
            }
            giia_exclusions += 1;
        }
    }
    let pinned = candidates
        .iter()
        .zip(&winners)
        .filter(|&(&mask, &w)| mask == 1 << w.index())
        .count();
    Ok(Thm2Summary {
        m,
        n,
        domain_size: profiles.len(),
        pinned,
        all_pinned: pinned == profiles.len(),
        mpt_pins,
        giia_exclusions,
    })
}

/// True iff s-sdr:j passes WDC and GIIA exhaustively on the full domain.
pub fn verify_theorem1_forward(j: usize, m: usize, n: usize, max_visits: u64) -> Result<bool> {
    let alts = AlternativeSet::canonical(m);
    let rule = Rule::new(crate::rules::RuleKind::StateSalient { state: j });
    let wdc = axioms::check(
        &rule,
        Axiom::Wdc,
        &alts,
        n,
        DomainSpec::Full,
        CheckMode::Exhaustive,
        max_visits,
    )?;
    let giia = axioms::check(
        &rule,
        Axiom::Giia,
        &alts,
        n,
        DomainSpec::Full,
        CheckMode::Exhaustive,
        max_visits,
    )?;
    Ok(wdc.passed() && giia.passed())
}

/// Certificate that a full-domain table is the salient-state rule for
/// state `j`, with the per-alternative diagnostic minima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SalientStateCertificate {
    pub j: usize,
    pub per_alternative_j: Vec<usize>,
    pub verified_equal: bool,
}

/// Decides whether `cf` is a salient-state rule. The table's choices are
/// first checked against WDC and GIIA over the table itself; any failure
/// yields `None`. A table passing both must cover the full space to be
/// certified. The returned `j` comes from testing equality with each
/// state's top; `per_alternative_j` holds, for every alternative x, the
/// smallest j such that some profile with x first in exactly states
/// 1..=j (and last in the rest) chooses {x}.
pub fn extract_salient_state(cf: &CfTable) -> Result<Option<SalientStateCertificate>> {
    if cf.is_empty() {
        return Err(Error::TableNotFull);
    }
    for axiom in [Axiom::Wdc, Axiom::Giia] {
        if !axioms::check_on(cf, axiom, cf.profiles())?.passed() {
            return Ok(None);
        }
    }
    if !cf.is_full() {
        return Err(Error::TableNotFull);
    }
    let first = &cf.profiles()[0];
    let (m, n) = (first.m(), first.num_states());
    let j = (1..=n)
        .find(|&j| {
            cf.profiles()
                .iter()
                .zip(cf.choices())
                .all(|(p, f)| f.as_singleton() == p.state(j).ok().map(|r| r.top()))
        })
        .ok_or_else(|| {
            Error::Internal("axioms passed on the full domain but no salient state matches".into())
        })?;
    let mut per_alternative_j = Vec::with_capacity(m);
    for xi in 0..m {
        let x = Alt(xi as u8);
        let jx = step1_minimum(cf, x, m, n)?.ok_or_else(|| {
            Error::Internal("no prefix profile selects its always-first alternative".into())
        })?;
        per_alternative_j.push(jx);
    }
    let verified_equal = per_alternative_j.iter().all(|&jx| jx == j);
    Ok(Some(SalientStateCertificate {
        j,
        per_alternative_j,
        verified_equal,
    }))
}

/// Smallest `j` such that some profile with x ranked first in states
/// 1..=j and last in states j+1..=n maps to {x} under `cf`.
fn step1_minimum(cf: &CfTable, x: Alt, m: usize, n: usize) -> Result<Option<usize>> {
    let alts = cf.profiles()[0].alts();
    let rivals: Vec<Alt> = (0..m).map(|i| Alt(i as u8)).filter(|&a| a != x).collect();
    let total = factorial(m - 1).ok_or(Error::Internal("rival count overflow".into()))?;
    let arrangements: Vec<Vec<Alt>> = (0..total)
        .map(|idx| {
            let perm = Ranking::from_lex_index(m - 1, idx)?;
            Ok(perm.order().iter().map(|a| rivals[a.index()]).collect())
        })
        .collect::<Result<_>>()?;
    for j in 1..=n {
        let mut slots = vec![0usize; n];
        loop {
            let states: Vec<Ranking> = (0..n)
                .map(|s| {
                    let arrangement = &arrangements[slots[s]];
                    let mut order = Vec::with_capacity(m);
                    if s < j {
                        order.push(x);
                        order.extend(arrangement.iter().copied());
                    } else {
                        order.extend(arrangement.iter().copied());
                        order.push(x);
                    }
                    Ranking::from_order(order, m).expect("constructed permutation")
                })
                .collect();
            let p = Profile::new(Arc::clone(alts), states)?;
            if cf.choose(&p)?.as_singleton() == Some(x) {
                return Ok(Some(j));
            }
            // advance the mixed-radix slot counter, state n fastest
            let mut done = true;
            for slot in slots.iter_mut().rev() {
                *slot += 1;
                if *slot < arrangements.len() {
                    done = false;
                    break;
                }
                *slot = 0;
            }
            if done {
                break;
            }
        }
    }
    Ok(None)
}

/// One monotonicity comparison: the checked function and the two verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotonicityComparison {
    pub label: String,
    pub weak: Verdict,
    pub down: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop1Report {
    pub m: usize,
    pub n: usize,
    pub samples: u64,
    pub seed: u64,
    pub comparisons: Vec<MonotonicityComparison>,
    pub discrepancies: u64,
}

impl Prop1Report {
    pub fn passed(&self) -> bool {
        self.discrepancies == 0
    }
}

/// Checks that Weak and Down Monotonicity agree: on every full-domain
/// catalog rule and on `samples` random tables (alternating resolute and
/// set-valued), the two checkers must return the same verdict.
pub fn verify_prop1_equivalence(
    m: usize,
    n: usize,
    samples: u64,
    seed: u64,
    max_visits: u64,
) -> Result<Prop1Report> {
    let alts = AlternativeSet::canonical(m);
    let profiles = collect_domain(&alts, n, DomainSpec::Full, max_visits)?;
    let mut comparisons = Vec::new();
    let mut discrepancies = 0u64;
    let mut compare = |cf: &dyn ChoiceFn| -> Result<()> {
        let weak = axioms::check_on(cf, Axiom::WeakMonotonicity, &profiles)?.verdict;
        let down = axioms::check_on(cf, Axiom::DownMonotonicity, &profiles)?.verdict;
        if weak != down {
            discrepancies += 1;
        }
        comparisons.push(MonotonicityComparison {
            label: cf.label(),
            weak,
            down,
        });
        Ok(())
    };
    for rule in catalog(n) {
        if rule.domain() == DomainSpec::Full {
            compare(&rule)?;
        }
    }
    for t in 0..samples {
        let mut rng = rng_for_index(seed, t);
        let table = random_cf_table(
            &alts,
            n,
            t % 2 == 0,
            format!("random-table-{t}"),
            &mut rng,
            max_visits,
        )?;
        compare(&table)?;
    }
    Ok(Prop1Report {
        m,
        n,
        samples,
        seed,
        comparisons,
        discrepancies,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObservationReport {
    pub m: usize,
    pub n: usize,
    pub samples: u64,
    pub seed: u64,
    pub checked: u64,
    pub premise_holders: u64,
    pub vacuous: u64,
    pub implication_failures: u64,
    pub first_failure: Option<String>,
}

impl ObservationReport {
    pub fn passed(&self) -> bool {
        self.implication_failures == 0
    }
}

/// Checks the implication "Resolute for Pairs + Weak Monotonicity entails
/// independence" over full-domain catalog rules and sampled tables.
/// Functions failing a premise count as vacuous.
pub fn verify_observation(
    m: usize,
    n: usize,
    samples: u64,
    seed: u64,
    max_visits: u64,
) -> Result<ObservationReport> {
    let alts = AlternativeSet::canonical(m);
    let profiles = collect_domain(&alts, n, DomainSpec::Full, max_visits)?;
    let mut checked = 0u64;
    let mut premise_holders = 0u64;
    let mut vacuous = 0u64;
    let mut implication_failures = 0u64;
    let mut first_failure = None;
    let mut examine = |cf: &dyn ChoiceFn| -> Result<()> {
        checked += 1;
        let rfp = axioms::check_on(cf, Axiom::ResoluteForPairs, &profiles)?.passed();
        let weak = rfp && axioms::check_on(cf, Axiom::WeakMonotonicity, &profiles)?.passed();
        if !(rfp && weak) {
            vacuous += 1;
            return Ok(());
        }
        premise_holders += 1;
        if !axioms::check_on(cf, Axiom::Giia, &profiles)?.passed() {
            implication_failures += 1;
            if first_failure.is_none() {
                first_failure = Some(cf.label());
            }
        }
        Ok(())
    };
    for rule in catalog(n) {
        if rule.domain() == DomainSpec::Full {
            examine(&rule)?;
        }
    }
    for t in 0..samples {
        let mut rng = rng_for_index(seed, t);
        let table = random_cf_table(
            &alts,
            n,
            t % 2 == 0,
            format!("random-table-{t}"),
            &mut rng,
            max_visits,
        )?;
        examine(&table)?;
    }
    Ok(ObservationReport {
        m,
        n,
        samples,
        seed,
        checked,
        premise_holders,
        vacuous,
        implication_failures,
        first_failure,
    })
}

/// Replays the built-in six-state pair on which selecting the unique weak
/// Condorcet winner breaches independence, re-deriving every claimed fact
/// and returning the violation witness.
pub fn verify_prop2_violation() -> Result<Witness> {
    let (r1, r2) = corpus::prop2_pair();
    let (x, y) = (Alt(0), Alt(1));
    if r1.weak_condorcet_winners() != vec![x] {
        return Err(Error::Internal("first profile winner is not x".into()));
    }
    if r2.weak_condorcet_winners() != vec![y] {
        return Err(Error::Internal("second profile winner is not y".into()));
    }
    if !r1.restriction_equal(&r2, x, y) {
        return Err(Error::Internal("pair restrictions differ".into()));
    }
    let rule = crate::rules::lookup("weak-condorcet")?;
    let report = axioms::check_on(&rule, Axiom::Giia, &[r1, r2])?;
    match (report.verdict, report.witness) {
        (Verdict::Fail, Some(w)) => Ok(w),
        _ => Err(Error::Internal("expected independence violation".into())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BordaLoserReport {
    pub trials: u64,
    pub seed: u64,
    pub with_loser: u64,
    pub violations: u64,
    pub first_violation: Option<Profile>,
}

impl BordaLoserReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Samples random profiles over the given size ranges and, whenever a
/// strict Condorcet loser exists, checks it is no Borda winner and that
/// 2·BS(loser) < n·(m+1), the exact form of the below-average bound.
pub fn verify_borda_loser_exclusion(
    trials: u64,
    m_range: &[usize],
    n_range: &[usize],
    seed: u64,
) -> Result<BordaLoserReport> {
    if m_range.is_empty() || n_range.is_empty() {
        return Err(Error::Internal("empty size range".into()));
    }
    let mut with_loser = 0u64;
    let mut violations = 0u64;
    let mut first_violation = None;
    for t in 0..trials {
        let mut rng = rng_for_index(seed, t);
        let m = m_range[rng.gen_range(0..m_range.len())];
        let n = n_range[rng.gen_range(0..n_range.len())];
        let alts = AlternativeSet::canonical(m);
        let p = sample_profile(&alts, n, &mut rng)?;
        let Some(loser) = p.strict_condorcet_loser() else {
            continue;
        };
        with_loser += 1;
        let tally = borda_scores(&p)?;
        let below_average = 2 * tally.score(loser) < (n as u64) * (m as u64 + 1);
        let excluded = !eval_borda(&p)?.contains(loser);
        if !(below_average && excluded) {
            violations += 1;
            if first_violation.is_none() {
                first_violation = Some(p);
            }
        }
    }
    Ok(BordaLoserReport {
        trials,
        seed,
        with_loser,
        violations,
        first_violation,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BordaSumReport {
    pub trials: u64,
    pub seed: u64,
    pub violations: u64,
}

impl BordaSumReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Checks Σ BS = n·m·(m+1)/2 exactly on random profiles of mixed sizes.
pub fn verify_borda_sum_identity(trials: u64, seed: u64) -> Result<BordaSumReport> {
    let mut violations = 0u64;
    for t in 0..trials {
        let mut rng = rng_for_index(seed, t);
        let m = rng.gen_range(3..=5usize);
        let n = rng.gen_range(2..=7usize);
        let alts = AlternativeSet::canonical(m);
        let p = sample_profile(&alts, n, &mut rng)?;
        let expected = (n as u64) * (m as u64) * (m as u64 + 1) / 2;
        if borda_scores(&p)?.total() != expected {
            violations += 1;
        }
    }
    Ok(BordaSumReport {
        trials,
        seed,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::DEFAULT_MAX_VISITS;
    use crate::rules::{lookup, RuleKind};

    #[test]
    fn companion_reorders_single_states_as_forced() {
        let alts = AlternativeSet::canonical(4);
        let p = Profile::from_columns(&alts, &[&["z", "x", "w", "y"], &["y", "z", "x", "w"]])
            .unwrap();
        let (x, y) = (Alt(0), Alt(1));
        let c = build_companion_profile(&p, x, y).unwrap();
        // z≻x≻w≻y keeps x before y: x≻y≻z≻w
        assert_eq!(
            c.state(1).unwrap().order(),
            &[Alt(0), Alt(1), Alt(2), Alt(3)]
        );
        // y≻z≻x keeps y before x: y≻x≻z≻w
        assert_eq!(
            c.state(2).unwrap().order(),
            &[Alt(1), Alt(0), Alt(2), Alt(3)]
        );
    }

    #[test]
    fn companion_of_strict_winner_profile_keeps_the_winner() {
        let p = corpus::example6_profile();
        let x = Alt(0);
        for yi in 1..4 {
            let c = build_companion_profile(&p, x, Alt(yi)).unwrap();
            assert_eq!(c.strict_condorcet_winner(), Some(x));
        }
    }

    #[test]
    fn companion_rejects_equal_pair() {
        let p = corpus::example6_profile();
        assert!(matches!(
            build_companion_profile(&p, Alt(0), Alt(0)),
            Err(Error::EqualAlternatives)
        ));
    }

    #[test]
    fn theorem2_pins_every_profile_at_3_2() {
        let summary = verify_theorem2_uniqueness(3, 2, DEFAULT_MAX_VISITS).unwrap();
        assert_eq!(summary.domain_size, 12);
        assert!(summary.all_pinned);
        assert_eq!(summary.pinned, 12);
    }

    #[test]
    fn theorem1_forward_holds_at_small_sizes() {
        assert!(verify_theorem1_forward(1, 3, 2, DEFAULT_MAX_VISITS).unwrap());
        assert!(verify_theorem1_forward(2, 3, 3, DEFAULT_MAX_VISITS).unwrap());
    }

    #[test]
    fn salient_state_round_trip() {
        let alts = AlternativeSet::canonical(3);
        let rule = Rule::new(RuleKind::StateSalient { state: 2 });
        let table =
            CfTable::tabulate(&rule, &alts, 3, DomainSpec::Full, DEFAULT_MAX_VISITS).unwrap();
        let cert = extract_salient_state(&table).unwrap().unwrap();
        assert_eq!(cert.j, 2);
        assert_eq!(cert.per_alternative_j, vec![2, 2, 2]);
        assert!(cert.verified_equal);
    }

    #[test]
    fn salient_state_absent_for_wdc_violator() {
        let alts = AlternativeSet::canonical(3);
        let rule = lookup("last-of-state-one").unwrap();
        let table =
            CfTable::tabulate(&rule, &alts, 2, DomainSpec::Full, DEFAULT_MAX_VISITS).unwrap();
        assert_eq!(extract_salient_state(&table).unwrap(), None);
    }

    #[test]
    fn prop2_violation_is_reproduced() {
        let w = verify_prop2_violation().unwrap();
        assert_eq!(w.pair, Some((Alt(0), Alt(1))));
        assert_eq!(w.profiles.len(), 2);
    }

    #[test]
    fn monotonicity_and_observation_agree_on_small_samples() {
        let prop1 = verify_prop1_equivalence(3, 2, 25, 7, DEFAULT_MAX_VISITS).unwrap();
        assert!(prop1.passed());
        assert!(prop1.comparisons.len() > 25);
        let obs = verify_observation(3, 2, 25, 11, DEFAULT_MAX_VISITS).unwrap();
        assert!(obs.passed());
        assert!(obs.vacuous > 0);
        assert!(obs.premise_holders > 0);
    }

    #[test]
    fn borda_reports_pass_quickly() {
        let loser = verify_borda_loser_exclusion(500, &[3, 4], &[3, 5], 3).unwrap();
        assert!(loser.passed());
        assert!(loser.with_loser > 0);
        let sum = verify_borda_sum_identity(200, 9).unwrap();
        assert!(sum.passed());
    }
}
