//! Optimized exhaustive scans.
//!
//! Each scan reports the canonical first violation described at the module
//! root. The independence scan never loops over all profile pairs: profiles
//! are bucketed per ordered pair on their per-state direction bit-vector,
//! so two profiles land in one bucket exactly when their restrictions to
//! the pair agree in every state. Inside a bucket the earliest choosing
//! profile and the earliest breaching profile form the bucket's candidate,
//! which is provably the bucket's lexicographic minimum, and the smallest
//! candidate across buckets is exactly the witness the literal pair loop
//! would find first.

use std::collections::HashMap;

use super::{
    note_acl, note_cw, note_dm, note_giia, note_mpt, note_rfp, note_wdc, note_wm, Axiom, Witness,
};
use crate::alts::Alt;
use crate::error::Result;
use crate::profile::Profile;
use crate::rules::ChoiceSet;

pub fn find_violation(
    axiom: Axiom,
    profiles: &[Profile],
    choices: &[ChoiceSet],
) -> Result<Option<Witness>> {
    debug_assert_eq!(profiles.len(), choices.len());
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

fn wdc(profiles: &[Profile], choices: &[ChoiceSet]) -> Result<Option<Witness>> {
    for (p, f) in profiles.iter().zip(choices) {
        let n = p.num_states();
        let full = mask_full(n);
        for chosen in f.iter() {
            for d in (0..p.m()).map(|i| Alt(i as u8)) {
                if d == chosen {
                    continue;
                }
                if p.pair_mask(d, chosen) == full {
                    return Ok(Some(Witness {
                        profiles: vec![p.clone()],
                        pair: Some((d, chosen)),
                        chosen: Some(chosen),
                        state: None,
                        note: note_wdc(p, d, chosen),
                    }));
                }
            }
        }
    }
    Ok(None)
}

fn giia(profiles: &[Profile], choices: &[ChoiceSet]) -> Result<Option<Witness>> {
    let m = profiles[0].m();
    for xi in 0..m {
        for yi in 0..m {
            if xi == yi {
                continue;
            }
            let (x, y) = (Alt(xi as u8), Alt(yi as u8));
            // bucket key: bit i set iff x above y in state i + 1
            let mut buckets: HashMap<u64, (Option<usize>, Option<usize>)> = HashMap::new();
            for (ri, (p, f)) in profiles.iter().zip(choices).enumerate() {
                let slot = buckets.entry(p.pair_mask(x, y)).or_default();
                if slot.0.is_none() && f.contains(x) && !f.contains(y) {
                    slot.0 = Some(ri);
                }
                if slot.1.is_none() && f.contains(y) {
                    slot.1 = Some(ri);
                }
            }
            let mut best: Option<(usize, usize)> = None;
            for &(choosing, breaching) in buckets.values() {
                if let (Some(a), Some(b)) = (choosing, breaching) {
                    if best.is_none_or(|cur| (a, b) < cur) {
                        best = Some((a, b));
                    }
                }
            }
            if let Some((ri, rpi)) = best {
                let p = &profiles[ri];
                return Ok(Some(Witness {
                    profiles: vec![p.clone(), profiles[rpi].clone()],
                    pair: Some((x, y)),
                    chosen: Some(x),
                    state: None,
                    note: note_giia(p, x, y),
                }));
            }
        }
    }
    Ok(None)
}

fn mpt(profiles: &[Profile], choices: &[ChoiceSet]) -> Result<Option<Witness>> {
    for (p, f) in profiles.iter().zip(choices) {
        let Some((a, b)) = p.constant_top_two() else {
            continue;
        };
        let n = p.num_states();
        let a_wins = p.majority_count(a, b)?;
        let (x, y, wins) = if 2 * a_wins > n {
            (a, b, a_wins)
        } else if 2 * (n - a_wins) > n {
            (b, a, n - a_wins)
        } else {
            continue;
        };
        if f.as_singleton() != Some(x) {
            return Ok(Some(Witness {
                profiles: vec![p.clone()],
                pair: Some((x, y)),
                chosen: Some(x),
                state: None,
                note: note_mpt(p, x, y, wins, f),
            }));
        }
    }
    Ok(None)
}

fn weak_monotonicity(profiles: &[Profile], choices: &[ChoiceSet]) -> Result<Option<Witness>> {
    let m = profiles[0].m();
    // beat mask of (profile, x, y): states where x is above y
    let beat: Vec<Vec<u64>> = profiles
        .iter()
        .map(|p| {
            let mut row = vec![0u64; m * m];
            for xi in 0..m {
                for yi in 0..m {
                    if xi != yi {
                        row[xi * m + yi] = p.pair_mask(Alt(xi as u8), Alt(yi as u8));
                    }
                }
            }
            row
        })
        .collect();
    for (ri, f) in choices.iter().enumerate() {
        for (rpi, fp) in choices.iter().enumerate() {
            for x in f.iter() {
                if fp.contains(x) {
                    continue;
                }
                let xi = x.index();
                let improves = (0..m).all(|yi| {
                    yi == xi || beat[ri][xi * m + yi] & !beat[rpi][xi * m + yi] == 0
                });
                if improves {
                    let p = &profiles[ri];
                    return Ok(Some(Witness {
                        profiles: vec![p.clone(), profiles[rpi].clone()],
                        pair: None,
                        chosen: Some(x),
                        state: None,
                        note: note_wm(p, x),
                    }));
                }
            }
        }
    }
    Ok(None)
}

fn down_monotonicity(profiles: &[Profile], choices: &[ChoiceSet]) -> Result<Option<Witness>> {
    let index: HashMap<&Profile, usize> =
        profiles.iter().enumerate().map(|(i, p)| (p, i)).collect();
    for (p, f) in profiles.iter().zip(choices) {
        // demotion neighbors of p inside the checked set, by partner index;
        // (state, demoted) is unique per partner so the order is total
        let mut neighbors: Vec<(usize, usize, Alt)> = Vec::new();
        for state in 1..=p.num_states() {
            for yi in 0..p.m() {
                let y = Alt(yi as u8);
                if let Some(q) = p.demote_in_state(state, y)? {
                    if let Some(&rpi) = index.get(&q) {
                        neighbors.push((rpi, state, y));
                    }
                }
            }
        }
        neighbors.sort_unstable_by_key(|&(rpi, _, _)| rpi);
        for (rpi, state, y) in neighbors {
            for x in f.iter() {
                if x != y && !choices[rpi].contains(x) {
                    return Ok(Some(Witness {
                        profiles: vec![p.clone(), profiles[rpi].clone()],
                        pair: Some((x, y)),
                        chosen: Some(x),
                        state: Some(state),
                        note: note_dm(p, x, y, state),
                    }));
                }
            }
        }
    }
    Ok(None)
}

fn resolute_for_pairs(profiles: &[Profile], choices: &[ChoiceSet]) -> Result<Option<Witness>> {
    for (p, f) in profiles.iter().zip(choices) {
        let Some((a, b)) = p.constant_top_two() else {
            continue;
        };
        let ok = matches!(f.as_singleton(), Some(s) if s == a || s == b);
        if !ok {
            return Ok(Some(Witness {
                profiles: vec![p.clone()],
                pair: Some((a, b)),
                chosen: None,
                state: None,
                note: note_rfp(p, a, b, f),
            }));
        }
    }
    Ok(None)
}

fn condorcet_winner(profiles: &[Profile], choices: &[ChoiceSet]) -> Result<Option<Witness>> {
    for (p, f) in profiles.iter().zip(choices) {
        let Some(w) = p.strict_condorcet_winner() else {
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
        let Some(loser) = p.strict_condorcet_loser() else {
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

pub(crate) fn mask_full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
