//! Literal quantifier expansions of every axiom.
//!
//! These are deliberately unoptimized reference implementations: nested
//! loops over profiles, pairs, and states, comparing ranks directly and
//! never sharing the bitmask machinery of the fast scans. They exist so
//! tests can compare verdicts and first witnesses against the optimized
//! checkers on small full domains; beyond that they are far too slow.

use super::{
    assemble, evaluate_all, note_acl, note_cw, note_dm, note_giia, note_mpt, note_rfp, note_wdc,
    note_wm, Axiom, AxiomReport, CheckMode, Witness,
};
use crate::alts::Alt;
use crate::error::Result;
use crate::profile::Profile;
use crate::rules::{ChoiceFn, ChoiceSet};

pub fn check_on_naive(
    cf: &dyn ChoiceFn,
    axiom: Axiom,
    profiles: &[Profile],
) -> Result<AxiomReport> {
    let choices = evaluate_all(cf, profiles)?;
    let witness = find_violation_naive(axiom, profiles, &choices)?;
    Ok(assemble(cf, axiom, CheckMode::Exhaustive, witness, profiles.len() as u64))
}

pub fn find_violation_naive(
    axiom: Axiom,
    profiles: &[Profile],
    choices: &[ChoiceSet],
) -> Result<Option<Witness>> {
    if profiles.is_empty() {
        return Ok(None);
    }
    match axiom {
        Axiom::Wdc => wdc(profiles, choices),
        Axiom::Giia => giia(profiles, choices),
        Axiom::Mpt => mpt(profiles, choices),
        Axiom::WeakMonotonicity => weak_monotonicity(profiles, choices),
        Axiom::DownMonotonicity => down_monotonicity(profiles, choices),
        Axiom::ResoluteForPairs => resolute_for_pairs(profiles, choices),
        Axiom::CondorcetWinner => condorcet_winner(profiles, choices),
        Axiom::AntiCondorcetLoser => anti_condorcet_loser(profiles, choices),
    }
}

fn alts_of(p: &Profile) -> Vec<Alt> {
    (0..p.m()).map(|i| Alt(i as u8)).collect()
}

fn above_everywhere(p: &Profile, x: Alt, y: Alt) -> Result<bool> {
    for state in 1..=p.num_states() {
        let r = p.state(state)?;
        if r.rank_of(x)? > r.rank_of(y)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn states_preferring(p: &Profile, x: Alt, y: Alt) -> Result<Vec<usize>> {
    let mut states = Vec::new();
    for state in 1..=p.num_states() {
        let r = p.state(state)?;
        if r.rank_of(x)? < r.rank_of(y)? {
            states.push(state);
        }
    }
    Ok(states)
}

fn restriction_equal(a: &Profile, b: &Profile, x: Alt, y: Alt) -> Result<bool> {
    if a.num_states() != b.num_states() {
        return Ok(false);
    }
    for state in 1..=a.num_states() {
        let ra = a.state(state)?;
        let rb = b.state(state)?;
        let a_dir = ra.rank_of(x)? < ra.rank_of(y)?;
        let b_dir = rb.rank_of(x)? < rb.rank_of(y)?;
        if a_dir != b_dir {
            return Ok(false);
        }
    }
    Ok(true)
}

fn top_two_everywhere(p: &Profile, x: Alt, y: Alt) -> Result<bool> {
    for state in 1..=p.num_states() {
        let r = p.state(state)?;
        if r.rank_of(x)? > 2 || r.rank_of(y)? > 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn wdc(profiles: &[Profile], choices: &[ChoiceSet]) -> Result<Option<Witness>> {
    for (p, f) in profiles.iter().zip(choices) {
        for c in alts_of(p) {
            if !f.contains(c) {
                continue;
            }
            for d in alts_of(p) {
                if d != c && above_everywhere(p, d, c)? {
                    return Ok(Some(Witness {
                        profiles: vec![p.clone()],
                        pair: Some((d, c)),
                        chosen: Some(c),
                        state: None,
                        note: note_wdc(p, d, c),
                    }));
                }
            }
        }
    }
    Ok(None)
}

fn giia(profiles: &[Profile], choices: &[ChoiceSet]) -> Result<Option<Witness>> {
    for x in alts_of(&profiles[0]) {
        for y in alts_of(&profiles[0]) {
            if x == y {
                continue;
            }
            for (ri, (r, f)) in profiles.iter().zip(choices).enumerate() {
                if !(f.contains(x) && !f.contains(y)) {
                    continue;
                }
                for (rpi, (rp, fp)) in profiles.iter().zip(choices).enumerate() {
                    if rpi == ri || !fp.contains(y) {
                        continue;
                    }
                    if restriction_equal(r, rp, x, y)? {
                        return Ok(Some(Witness {
                            profiles: vec![r.clone(), rp.clone()],
                            pair: Some((x, y)),
                            chosen: Some(x),
                            state: None,
                            note: note_giia(r, x, y),
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn mpt(profiles: &[Profile], choices: &[ChoiceSet]) -> Result<Option<Witness>> {
    for (p, f) in profiles.iter().zip(choices) {
        for x in alts_of(p) {
            for y in alts_of(p) {
                if x == y || !top_two_everywhere(p, x, y)? {
                    continue;
                }
                let x_wins = states_preferring(p, x, y)?.len();
                let y_wins = states_preferring(p, y, x)?.len();
                if x_wins > y_wins && f.as_singleton() != Some(x) {
                    return Ok(Some(Witness {
                        profiles: vec![p.clone()],
                        pair: Some((x, y)),
                        chosen: Some(x),
                        state: None,
                        note: note_mpt(p, x, y, x_wins, f),
                    }));
                }
            }
        }
    }
    Ok(None)
}

fn weak_monotonicity(profiles: &[Profile], choices: &[ChoiceSet]) -> Result<Option<Witness>> {
    for (r, f) in profiles.iter().zip(choices) {
        for (rp, fp) in profiles.iter().zip(choices) {
            for x in alts_of(r) {
                if !f.contains(x) || fp.contains(x) {
                    continue;
                }
                let mut improves = true;
                for y in alts_of(r) {
                    if y == x {
                        continue;
                    }
                    let before = states_preferring(r, x, y)?;
                    let after = states_preferring(rp, x, y)?;
                    if !before.iter().all(|s| after.contains(s)) {
                        improves = false;
                        break;
                    }
                }
                if improves {
                    return Ok(Some(Witness {
                        profiles: vec![r.clone(), rp.clone()],
                        pair: None,
                        chosen: Some(x),
                        state: None,
                        note: note_wm(r, x),
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// The unique (state, demoted alternative) with `rp` = `r` after pushing
/// that alternative down one rank there, if the profiles are so related.
fn demotion_step(r: &Profile, rp: &Profile) -> Result<Option<(usize, Alt)>> {
    if r.num_states() != rp.num_states() {
        return Ok(None);
    }
    let mut found: Option<(usize, Alt)> = None;
    for state in 1..=r.num_states() {
        let a = r.state(state)?.order();
        let b = rp.state(state)?.order();
        if a == b {
            continue;
        }
        if found.is_some() {
            return Ok(None);
        }
        let k = (0..a.len()).find(|&k| a[k] != b[k]).expect("orders differ");
        let adjacent_swap = k + 1 < a.len()
            && a[k] == b[k + 1]
            && a[k + 1] == b[k]
            && a[k + 2..] == b[k + 2..];
        if !adjacent_swap {
            return Ok(None);
        }
        found = Some((state, a[k]));
    }
    Ok(found)
}

fn down_monotonicity(profiles: &[Profile], choices: &[ChoiceSet]) -> Result<Option<Witness>> {
    for (r, f) in profiles.iter().zip(choices) {
        for (rp, fp) in profiles.iter().zip(choices) {
            let Some((state, y)) = demotion_step(r, rp)? else {
                continue;
            };
            for x in alts_of(r) {
                if x != y && f.contains(x) && !fp.contains(x) {
                    return Ok(Some(Witness {
                        profiles: vec![r.clone(), rp.clone()],
                        pair: Some((x, y)),
                        chosen: Some(x),
                        state: Some(state),
                        note: note_dm(r, x, y, state),
                    }));
                }
            }
        }
    }
    Ok(None)
}

fn resolute_for_pairs(profiles: &[Profile], choices: &[ChoiceSet]) -> Result<Option<Witness>> {
    for (p, f) in profiles.iter().zip(choices) {
        for x in alts_of(p) {
            for y in alts_of(p) {
                if x.index() >= y.index() || !top_two_everywhere(p, x, y)? {
                    continue;
                }
                let ok = f.as_singleton() == Some(x) || f.as_singleton() == Some(y);
                if !ok {
                    return Ok(Some(Witness {
                        profiles: vec![p.clone()],
                        pair: Some((x, y)),
                        chosen: None,
                        state: None,
                        note: note_rfp(p, x, y, f),
                    }));
                }
            }
        }
    }
    Ok(None)
}

fn strict_winner(p: &Profile) -> Result<Option<Alt>> {
    let n = p.num_states();
    for x in alts_of(p) {
        let mut wins_all = true;
        for y in alts_of(p) {
            if y != x && 2 * states_preferring(p, x, y)?.len() <= n {
                wins_all = false;
                break;
            }
        }
        if wins_all {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

fn strict_loser(p: &Profile) -> Result<Option<Alt>> {
    let n = p.num_states();
    for x in alts_of(p) {
        let mut loses_all = true;
        for y in alts_of(p) {
            if y != x && 2 * states_preferring(p, y, x)?.len() <= n {
                loses_all = false;
                break;
            }
        }
        if loses_all {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

fn condorcet_winner(profiles: &[Profile], choices: &[ChoiceSet]) -> Result<Option<Witness>> {
    for (p, f) in profiles.iter().zip(choices) {
        let Some(w) = strict_winner(p)? else {
            continue;
        };
        if f.as_singleton() != Some(w) {
            return Ok(Some(Witness {
                profiles: vec![p.clone()],
                pair: None,
                chosen: Some(w),
                state: None,
                note: note_cw(p, w, f),
            }));
        }
    }
    Ok(None)
}

fn anti_condorcet_loser(profiles: &[Profile], choices: &[ChoiceSet]) -> Result<Option<Witness>> {
    for (p, f) in profiles.iter().zip(choices) {
        let Some(loser) = strict_loser(p)? else {
            continue;
        };
        if f.contains(loser) {
            return Ok(Some(Witness {
                profiles: vec![p.clone()],
                pair: None,
                chosen: Some(loser),
                state: None,
                note: note_acl(p, loser),
            }));
        }
    }
    Ok(None)
}
