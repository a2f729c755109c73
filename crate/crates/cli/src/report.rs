//! Run reports: one structure per invocation, rendered as text or JSON.
//! Timing is printed only in text mode so the JSON form is byte-identical
//! across repeated seeded runs.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use scx_core::{AlternativeSet, Witness};

use crate::doc::render_profile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
}

/// One checked statement and how it came out.
#[derive(Debug, Clone, Serialize)]
pub struct Assertion {
    pub label: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// A violation rendered for output: profiles in document format so they
/// can be fed back to `eval` or re-checked.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessDoc {
    pub rule: String,
    pub axiom: String,
    pub note: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chosen: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub state: Option<usize>,
    pub profiles: Vec<String>,
}

impl WitnessDoc {
    pub fn from_witness(rule: &str, axiom: &str, alts: &AlternativeSet, w: &Witness) -> Self {
        WitnessDoc {
            rule: rule.to_string(),
            axiom: axiom.to_string(),
            note: w.note.clone(),
            pair: w
                .pair
                .map(|(x, y)| [alts.name(x).to_string(), alts.name(y).to_string()]),
            chosen: w.chosen.map(|c| alts.name(c).to_string()),
            state: w.state,
            profiles: w.profiles.iter().map(render_profile).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub counts: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub assertions: Vec<Assertion>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<WitnessDoc>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            status: Status::Pass,
            seed: None,
            counts: BTreeMap::new(),
            assertions: Vec::new(),
            witnesses: Vec::new(),
        }
    }

    pub fn count(&mut self, key: &str, value: u64) {
        self.counts.insert(key.to_string(), value);
    }

    pub fn assert_that(&mut self, label: impl Into<String>, passed: bool, detail: Option<String>) {
        if !passed {
            self.status = Status::Fail;
        }
        self.assertions.push(Assertion {
            label: label.into(),
            passed,
            detail,
        });
    }

    pub fn exit_code(&self) -> u8 {
        match self.status {
            Status::Pass => 0,
            Status::Fail => 1,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self, elapsed_ms: u128) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: scx {}", self.command);
        let _ = writeln!(
            out,
            "status: {}",
            match self.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
            }
        );
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "seed: {seed}");
        }
        for (key, value) in &self.counts {
            let _ = writeln!(out, "{key}: {value}");
        }
        for a in &self.assertions {
            let mark = if a.passed { "pass" } else { "FAIL" };
            match &a.detail {
                Some(d) => {
                    let _ = writeln!(out, "[{mark}] {}: {d}", a.label);
                }
                None => {
                    let _ = writeln!(out, "[{mark}] {}", a.label);
                }
            }
        }
        for (i, w) in self.witnesses.iter().enumerate() {
            let _ = writeln!(out, "witness {} ({} vs {}):", i + 1, w.rule, w.axiom);
            let _ = writeln!(out, "  {}", w.note);
            if let Some([x, y]) = &w.pair {
                let _ = writeln!(out, "  pair: {x}, {y}");
            }
            if let Some(c) = &w.chosen {
                let _ = writeln!(out, "  chosen: {c}");
            }
            if let Some(s) = w.state {
                let _ = writeln!(out, "  state: {s}");
            }
            for (k, doc) in w.profiles.iter().enumerate() {
                let _ = writeln!(out, "  profile {}:", k + 1);
                for line in doc.lines() {
                    let _ = writeln!(out, "    {line}");
                }
            }
        }
        let _ = writeln!(out, "elapsed-ms: {elapsed_ms}");
        out
    }
}
