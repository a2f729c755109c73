//! Budgeted random checking.
//!
//! Each trial draws from a stream derived from the master seed and the
//! trial index, so runs replay exactly and trials are order-independent.
//! Two-profile axioms draw a base profile plus a partner built to satisfy
//! the axiom's premise (restriction-preserving resample, beat-set growth,
//! or a single demotion); premise-gated single-profile axioms draw
//! profiles inside the premise directly. A pass only means no violation
//! was found within the budget.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{assemble, exhaustive, Axiom, AxiomReport, CheckMode, Witness};
use crate::alts::{Alt, AlternativeSet};
use crate::domain::DomainSpec;
use crate::error::Result;
use crate::profile::Profile;
use crate::ranking::Ranking;
use crate::rules::ChoiceFn;
use crate::sample::{rng_for_index, sample_profile_in, sample_ranking};

pub fn check_random(
    cf: &dyn ChoiceFn,
    axiom: Axiom,
    alts: &Arc<AlternativeSet>,
    n: usize,
    domain: DomainSpec,
    seed: u64,
    budget: u64,
) -> Result<AxiomReport> {
    for trial in 0..budget {
        let mut rng = rng_for_index(seed, trial);
        if let Some(witness) = run_trial(cf, axiom, alts, n, domain, &mut rng)? {
            return Ok(assemble(
                cf,
                axiom,
                CheckMode::Random { seed, budget },
                Some(witness),
                trial + 1,
            ));
        }
    }
    Ok(assemble(cf, axiom, CheckMode::Random { seed, budget }, None, budget))
}

fn run_trial(
    cf: &dyn ChoiceFn,
    axiom: Axiom,
    alts: &Arc<AlternativeSet>,
    n: usize,
    domain: DomainSpec,
    rng: &mut impl Rng,
) -> Result<Option<Witness>> {
    let m = alts.len();
    let instance: Vec<Profile> = match axiom {
        Axiom::Wdc | Axiom::CondorcetWinner | Axiom::AntiCondorcetLoser => {
            vec![sample_profile_in(alts, n, domain, rng)?]
        }
        Axiom::Mpt | Axiom::ResoluteForPairs => {
            let (x, y) = distinct_pair(m, rng);
            let states = (0..n).map(|_| ranking_with_top_two(m, x, y, rng)).collect();
            let p = Profile::new(Arc::clone(alts), states)?;
            if !domain.contains(&p) {
                return Ok(None);
            }
            vec![p]
        }
        Axiom::Giia => {
            let p = sample_profile_in(alts, n, domain, rng)?;
            let (x, y) = distinct_pair(m, rng);
            let states = (1..=n)
                .map(|i| {
                    let dir = p.state(i)?.prefers(x, y);
                    Ok(ranking_with_pair_direction(m, x, y, dir, rng))
                })
                .collect::<Result<Vec<_>>>()?;
            let q = Profile::new(Arc::clone(alts), states)?;
            if !domain.contains(&q) {
                return Ok(None);
            }
            vec![p, q]
        }
        Axiom::WeakMonotonicity => {
            let p = sample_profile_in(alts, n, domain, rng)?;
            let x = Alt(rng.gen_range(0..m) as u8);
            let states = (1..=n)
                .map(|i| Ok(ranking_with_grown_below(p.state(i)?, x, rng)))
                .collect::<Result<Vec<_>>>()?;
            let q = Profile::new(Arc::clone(alts), states)?;
            if !domain.contains(&q) {
                return Ok(None);
            }
            vec![p, q]
        }
        Axiom::DownMonotonicity => {
            let p = sample_profile_in(alts, n, domain, rng)?;
            let state = rng.gen_range(1..=n);
            let pos = rng.gen_range(0..m - 1);
            let y = p.state(state)?.order()[pos];
            let q = p.demote_in_state(state, y)?.expect("pos is not last");
            if !domain.contains(&q) {
                return Ok(None);
            }
            vec![p, q]
        }
    };
    let choices = super::evaluate_all(cf, &instance)?;
    exhaustive::find_violation(axiom, &instance, &choices)
}

fn distinct_pair(m: usize, rng: &mut impl Rng) -> (Alt, Alt) {
    let a = rng.gen_range(0..m);
    let b = (a + rng.gen_range(1..m)) % m;
    (Alt(a as u8), Alt(b as u8))
}

/// Uniform ranking with x and y on the first two ranks in random order.
fn ranking_with_top_two(m: usize, x: Alt, y: Alt, rng: &mut impl Rng) -> Ranking {
    let mut rest: Vec<Alt> = (0..m)
        .map(|i| Alt(i as u8))
        .filter(|&a| a != x && a != y)
        .collect();
    rest.shuffle(rng);
    let mut order = if rng.gen() { vec![x, y] } else { vec![y, x] };
    order.extend(rest);
    Ranking::from_order(order, m).expect("constructed permutation")
}

/// Uniform ranking conditioned on the direction of x versus y.
fn ranking_with_pair_direction(m: usize, x: Alt, y: Alt, x_above: bool, rng: &mut impl Rng) -> Ranking {
    let mut order = sample_ranking(m, rng).order().to_vec();
    let px = order.iter().position(|&a| a == x).expect("x present");
    let py = order.iter().position(|&a| a == y).expect("y present");
    if (px < py) != x_above {
        order.swap(px, py);
    }
    Ranking::from_order(order, m).expect("swapped permutation")
}

/// Random ranking whose set of alternatives below x contains everything
/// below x in `base`, so x's beat sets can only grow.
fn ranking_with_grown_below(base: &Ranking, x: Alt, rng: &mut impl Rng) -> Ranking {
    let pos = base.order().iter().position(|&a| a == x).expect("x present");
    let mut below: Vec<Alt> = base.order()[pos + 1..].to_vec();
    let mut above: Vec<Alt> = Vec::new();
    for &a in &base.order()[..pos] {
        if rng.gen() {
            below.push(a);
        } else {
            above.push(a);
        }
    }
    above.shuffle(rng);
    below.shuffle(rng);
    let mut order = above;
    order.push(x);
    order.extend(below);
    Ranking::from_order(order, base.m()).expect("constructed permutation")
}
