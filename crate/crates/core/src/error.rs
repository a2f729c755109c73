use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Input*` variants are caller mistakes, `OffDomain` is a rule applied to a
/// profile outside its declared domain, `ResourceLimit` is the exhaustive-mode
/// visit guard, and `Internal` signals a broken invariant (a bug).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alternative set: {0}")]
    InvalidAlternativeSet(String),

    #[error("alternative index {index} out of range for {m} alternatives")]
    UnknownAlternative { index: usize, m: usize },

    #[error("unknown alternative name '{0}'")]
    UnknownAlternativeName(String),

    #[error("ranking is not a permutation of the {m} alternatives")]
    NotAPermutation { m: usize },

    #[error("profile needs at least 2 states, got {0}")]
    TooFewStates(usize),

    #[error("profile supports at most 64 states, got {0}")]
    TooManyStates(usize),

    #[error("state index {index} out of range 1..={n}")]
    StateOutOfRange { index: usize, n: usize },

    #[error("the two alternatives must be distinct")]
    EqualAlternatives,

    #[error("alternative sets do not match")]
    AlternativeSetMismatch,

    #[error("invalid multi-profile: {0}")]
    InvalidMultiProfile(String),

    #[error("rule '{rule}' requires at least 3 alternatives, got {m}")]
    TooFewAlternatives { rule: String, m: usize },

    #[error("profile is outside the domain of rule '{rule}' ({reason})")]
    OffDomain { rule: String, reason: String },

    #[error("rule domain '{rule_domain}' does not cover checked domain '{checked}'")]
    DomainMismatch { rule_domain: String, checked: String },

    #[error("exhaustive enumeration would visit {visits} profiles, above the limit of {limit}")]
    ResourceLimit { visits: u64, limit: u64 },

    #[error("unknown rule '{name}'; valid rules: {valid}")]
    UnknownRule { name: String, valid: String },

    #[error("unknown axiom '{name}'; valid axioms: {valid}")]
    UnknownAxiom { name: String, valid: String },

    #[error("unknown domain '{name}'; valid domains: {valid}")]
    UnknownDomain { name: String, valid: String },

    #[error("profile not covered by the choice-function table")]
    NotInTable,

    #[error("choice-function table is not total on the full profile space")]
    TableNotFull,

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
