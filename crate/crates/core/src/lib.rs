//! Core library for state-dependent choice: profiles over states, choice
//! rules, axiom checking with canonical first witnesses, and mechanized
//! verification of the structural results that motivate the crate.

pub mod alts;
pub mod axioms;
pub mod corpus;
pub mod domain;
pub mod enumerate;
pub mod error;
pub mod multi;
pub mod profile;
pub mod ranking;
pub mod rules;
pub mod sample;
pub mod theorems;

pub use alts::{Alt, AlternativeSet};
pub use axioms::{check, check_on, violates, Axiom, AxiomReport, CheckMode, Verdict, Witness};
pub use domain::{in_domain, DomainSpec};
pub use enumerate::{
    collect_domain, enumerate_profiles, full_space_size, ProfileEnumerator, DEFAULT_MAX_VISITS,
};
pub use error::{Error, Result};
pub use multi::{convert, expand, strict_condorcet_variable, MultiProfile};
pub use profile::Profile;
pub use ranking::{factorial, Ranking};
pub use rules::{
    borda_scores, catalog, eval_borda, eval_first_somewhere, eval_last_of_state_one,
    eval_plurality, eval_s_sdr, eval_strict_condorcet, eval_weak_condorcet, lookup, BordaTally,
    ChoiceFn, ChoiceSet, Rule, RuleKind, RULE_NAME_PATTERNS,
};
pub use sample::{rng_for, rng_for_index, sample_profile, sample_profile_in, sample_ranking};
pub use theorems::{
    build_companion_profile, extract_salient_state, random_cf_table, verify_borda_loser_exclusion,
    verify_borda_sum_identity, verify_observation, verify_prop1_equivalence,
    verify_prop2_violation, verify_theorem1_forward, verify_theorem2_uniqueness, BordaLoserReport,
    BordaSumReport, CfTable, MonotonicityComparison, ObservationReport, Prop1Report,
    SalientStateCertificate, Thm2Summary,
};
