//! Alternative sets: the finite, ordered universe a profile ranks.
//!
//! The declared order of the names doubles as the tie-breaking order wherever
//! a resolute rule needs one (e.g. plurality with least-index tie-break).

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Index of an alternative within its [`AlternativeSet`].
#[derive(Debug, Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alt(pub u8);

impl Alt {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// An ordered set of distinct symbolic alternative labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlternativeSet {
    names: Vec<String>,
}

impl AlternativeSet {
    /// Builds a set from labels. Labels must be distinct, nonempty and
    /// whitespace-free; at most 64 alternatives are supported.
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidAlternativeSet("no alternatives".into()));
        }
        if names.len() > 64 {
            return Err(Error::InvalidAlternativeSet(format!(
                "{} alternatives, at most 64 supported",
                names.len()
            )));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidAlternativeSet(format!(
                    "label {} is empty",
                    i + 1
                )));
            }
            if name.chars().any(char::is_whitespace) {
                return Err(Error::InvalidAlternativeSet(format!(
                    "label '{name}' contains whitespace"
                )));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidAlternativeSet(format!(
                    "duplicate label '{name}'"
                )));
            }
        }
        Ok(Arc::new(AlternativeSet { names }))
    }

    /// The default alternative names for a generated profile space:
    /// `x y z w v` up to five alternatives, `x1..xm` beyond.
    pub fn canonical(m: usize) -> Arc<Self> {
        const SHORT: [&str; 5] = ["x", "y", "z", "w", "v"];
        let names: Vec<String> = if m <= SHORT.len() {
            SHORT[..m].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=m).map(|i| format!("x{i}")).collect()
        };
        Self::new(names).expect("canonical names are valid")
    }

    /// Number of alternatives (`m`).
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, alt: Alt) -> &str {
        &self.names[alt.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<Alt> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Alt(i as u8))
            .ok_or_else(|| Error::UnknownAlternativeName(name.to_string()))
    }

    pub fn contains(&self, alt: Alt) -> bool {
        alt.index() < self.names.len()
    }

    /// All alternatives in declared order.
    pub fn iter(&self) -> impl Iterator<Item = Alt> + '_ {
        (0..self.names.len()).map(|i| Alt(i as u8))
    }
}

impl fmt::Display for AlternativeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(" "))
    }
}
