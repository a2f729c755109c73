//! Built-in example profiles.
//!
//! These fixed matrices exercise the catalog rules and axiom checkers at
//! known outcomes; the `examples` command and the golden tests replay them.
//! Columns are listed top-to-bottom per state, in declared alternative order.

use crate::alts::AlternativeSet;
use crate::profile::Profile;

fn build(names: &[&str], cols: &[&[&str]]) -> Profile {
    let alts =
        AlternativeSet::new(names.iter().map(|s| s.to_string())).expect("corpus names are valid");
    Profile::from_columns(&alts, cols).expect("corpus matrices are valid")
}

/// Two five-state profiles over {x1, x2, x3} agreeing on the {x1, x2}
/// restriction everywhere, yet least-index plurality picks x1 at the first
/// and x2 at the second. Both have strict Condorcet winner x2.
pub fn example2_pair() -> (Profile, Profile) {
    let names = &["x1", "x2", "x3"];
    let r1 = build(
        names,
        &[
            &["x1", "x2", "x3"],
            &["x1", "x2", "x3"],
            &["x2", "x3", "x1"],
            &["x3", "x2", "x1"],
            &["x3", "x2", "x1"],
        ],
    );
    let r2 = build(
        names,
        &[
            &["x1", "x2", "x3"],
            &["x1", "x2", "x3"],
            &["x2", "x3", "x1"],
            &["x2", "x3", "x1"],
            &["x2", "x3", "x1"],
        ],
    );
    (r1, r2)
}

/// Four-state, four-alternative pair: the weak Condorcet set moves from
/// {x} to {x, w} after swapping the top two ranks of states 3 and 4, while
/// the {x, w} restriction never changes.
pub fn example3_pair() -> (Profile, Profile) {
    let names = &["x", "y", "z", "w"];
    let r = build(
        names,
        &[
            &["x", "y", "z", "w"],
            &["x", "y", "z", "w"],
            &["y", "w", "x", "z"],
            &["z", "w", "x", "y"],
        ],
    );
    let rp = build(
        names,
        &[
            &["x", "y", "z", "w"],
            &["x", "y", "z", "w"],
            &["w", "y", "x", "z"],
            &["w", "z", "x", "y"],
        ],
    );
    (r, rp)
}

/// Seven-state pair with a unique plurality winner on each side: x at the
/// first, y at the second, with the {x, y} restriction identical in every
/// state.
pub fn example4_pair() -> (Profile, Profile) {
    let names = &["x", "y", "z"];
    let r = build(
        names,
        &[
            &["x", "y", "z"],
            &["x", "y", "z"],
            &["x", "y", "z"],
            &["y", "z", "x"],
            &["y", "z", "x"],
            &["z", "y", "x"],
            &["z", "y", "x"],
        ],
    );
    let rp = build(
        names,
        &[
            &["x", "y", "z"],
            &["x", "y", "z"],
            &["x", "y", "z"],
            &["y", "z", "x"],
            &["y", "z", "x"],
            &["y", "z", "x"],
            &["y", "z", "x"],
        ],
    );
    (r, rp)
}

/// Five-state profile over {x, y, z, w} where plurality selects x, the
/// strict Condorcet loser; the strict winner is y; Borda scores are
/// x:11, y:14, z:13, w:12.
pub fn example5_profile() -> Profile {
    build(
        &["x", "y", "z", "w"],
        &[
            &["x", "y", "w", "z"],
            &["x", "y", "z", "w"],
            &["y", "z", "w", "x"],
            &["z", "w", "y", "x"],
            &["w", "z", "y", "x"],
        ],
    )
}

/// Five-state profile over {x, y, z, w} with strict Condorcet winner x but
/// Borda winner y; scores x:14, y:15, z:9, w:12.
pub fn example6_profile() -> Profile {
    build(
        &["x", "y", "z", "w"],
        &[
            &["x", "y", "w", "z"],
            &["x", "y", "w", "z"],
            &["x", "y", "w", "z"],
            &["z", "y", "w", "x"],
            &["w", "y", "z", "x"],
        ],
    )
}

/// Three-state profile whose first two ranks hold {x, y} in every state,
/// yet first-somewhere selects the non-singleton {x, y}.
pub fn note_rfp_profile() -> Profile {
    build(
        &["x", "y", "z"],
        &[&["x", "y", "z"], &["x", "y", "z"], &["y", "x", "z"]],
    )
}

/// Pair on which first-somewhere breaches independence: {x, z} restrictions
/// agree state-by-state, the first profile chooses {x, y} (so z is out),
/// the second chooses {x, z}.
pub fn note_giia_pair() -> (Profile, Profile) {
    let names = &["x", "y", "z"];
    let r = build(
        names,
        &[&["x", "y", "z"], &["x", "y", "z"], &["y", "z", "x"]],
    );
    let rp = build(
        names,
        &[&["x", "y", "z"], &["x", "y", "z"], &["z", "y", "x"]],
    );
    (r, rp)
}

/// Six-state pair, each with a unique weak Condorcet winner (x, then y),
/// agreeing on the {x, y} restriction in every state: selecting the unique
/// weak winner breaches independence.
pub fn prop2_pair() -> (Profile, Profile) {
    let names = &["x", "y", "z"];
    let r1 = build(
        names,
        &[
            &["x", "z", "y"],
            &["x", "z", "y"],
            &["x", "z", "y"],
            &["z", "y", "x"],
            &["y", "z", "x"],
            &["y", "x", "z"],
        ],
    );
    let r2 = build(
        names,
        &[
            &["x", "y", "z"],
            &["x", "y", "z"],
            &["z", "x", "y"],
            &["z", "y", "x"],
            &["y", "z", "x"],
            &["y", "z", "x"],
        ],
    );
    (r1, r2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alts::Alt;
    use crate::rules::{
        borda_scores, eval_first_somewhere, eval_plurality, eval_weak_condorcet,
    };

    #[test]
    fn example2_outcomes() {
        let (r1, r2) = example2_pair();
        let x1 = Alt(0);
        let x2 = Alt(1);
        assert_eq!(eval_plurality(&r1, true).unwrap().as_singleton(), Some(x1));
        assert_eq!(eval_plurality(&r2, true).unwrap().as_singleton(), Some(x2));
        assert_eq!(r1.strict_condorcet_winner(), Some(x2));
        assert_eq!(r2.strict_condorcet_winner(), Some(x2));
        assert!(r1.restriction_equal(&r2, x1, x2));
    }

    #[test]
    fn example3_outcomes() {
        let (r, rp) = example3_pair();
        let x = Alt(0);
        let w = Alt(3);
        assert_eq!(eval_weak_condorcet(&r).unwrap().members(), &[x]);
        assert_eq!(eval_weak_condorcet(&rp).unwrap().members(), &[x, w]);
        assert!(r.restriction_equal(&rp, x, w));
    }

    #[test]
    fn example4_outcomes() {
        let (r, rp) = example4_pair();
        let x = Alt(0);
        let y = Alt(1);
        assert_eq!(eval_plurality(&r, false).unwrap().members(), &[x]);
        assert_eq!(eval_plurality(&rp, false).unwrap().members(), &[y]);
        assert!(r.restriction_equal(&rp, x, y));
    }

    #[test]
    fn example5_outcomes() {
        let p = example5_profile();
        let (x, y, z, w) = (Alt(0), Alt(1), Alt(2), Alt(3));
        assert_eq!(eval_plurality(&p, false).unwrap().members(), &[x]);
        assert_eq!(p.strict_condorcet_loser(), Some(x));
        assert_eq!(p.strict_condorcet_winner(), Some(y));
        let tally = borda_scores(&p).unwrap();
        assert_eq!(tally.score(x), 11);
        assert_eq!(tally.score(y), 14);
        assert_eq!(tally.score(z), 13);
        assert_eq!(tally.score(w), 12);
    }

    #[test]
    fn example6_outcomes() {
        let p = example6_profile();
        let (x, y, z, w) = (Alt(0), Alt(1), Alt(2), Alt(3));
        assert_eq!(p.strict_condorcet_winner(), Some(x));
        let tally = borda_scores(&p).unwrap();
        assert_eq!(tally.score(x), 14);
        assert_eq!(tally.score(y), 15);
        assert_eq!(tally.score(z), 9);
        assert_eq!(tally.score(w), 12);
        assert_eq!(tally.winners().members(), &[y]);
    }

    #[test]
    fn note_outcomes() {
        let p = note_rfp_profile();
        let (x, y) = (Alt(0), Alt(1));
        assert_eq!(p.constant_top_two(), Some((x, y)));
        assert_eq!(eval_first_somewhere(&p).unwrap().members(), &[x, y]);

        let (r, rp) = note_giia_pair();
        let z = Alt(2);
        assert_eq!(eval_first_somewhere(&r).unwrap().members(), &[x, y]);
        assert_eq!(eval_first_somewhere(&rp).unwrap().members(), &[x, z]);
        assert!(r.restriction_equal(&rp, x, z));
    }

    #[test]
    fn prop2_outcomes() {
        let (r1, r2) = prop2_pair();
        let (x, y) = (Alt(0), Alt(1));
        assert_eq!(r1.weak_condorcet_winners(), vec![x]);
        assert_eq!(r2.weak_condorcet_winners(), vec![y]);
        assert!(r1.restriction_equal(&r2, x, y));
    }
}
