//! The five subcommands. Each returns a `RunReport` whose status drives
//! the exit code (pass 0, fail 1); operational problems (bad names,
//! unreadable files, resource ceilings) become `CliError` and exit 2.

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{ArgGroup, Args, ValueEnum};

use scx_core::multi::{convert, strict_condorcet_variable};
use scx_core::theorems::{
    verify_borda_loser_exclusion, verify_borda_sum_identity, verify_observation,
    verify_prop1_equivalence, verify_prop2_violation, verify_theorem1_forward,
    verify_theorem2_uniqueness,
};
use scx_core::{
    borda_scores, check, check_on, corpus, lookup, AlternativeSet, Axiom, CheckMode, ChoiceSet,
    DomainSpec, Profile, Rule,
};

use crate::doc::{parse_profile, render_profile, DocError};
use crate::report::{RunReport, WitnessDoc};

#[derive(Debug)]
pub struct CliError(pub String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<scx_core::Error> for CliError {
    fn from(e: scx_core::Error) -> Self {
        CliError(e.to_string())
    }
}

impl From<DocError> for CliError {
    fn from(e: DocError) -> Self {
        CliError(e.to_string())
    }
}

#[derive(Args)]
pub struct EvalArgs {
    /// Rule name (the README lists the catalog)
    #[arg(long)]
    pub rule: String,
    /// Salient state number when the rule is `s-sdr`
    #[arg(long)]
    pub param: Option<usize>,
    /// Profile documents to evaluate
    #[arg(required = true)]
    pub files: Vec<PathBuf>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["exhaustive", "random"])))]
pub struct CheckArgs {
    #[arg(long)]
    pub rule: String,
    #[arg(long)]
    pub param: Option<usize>,
    #[arg(long)]
    pub axiom: String,
    /// Number of alternatives
    #[arg(long)]
    pub m: usize,
    /// Number of states
    #[arg(long)]
    pub n: usize,
    /// Domain to enumerate or sample from
    #[arg(long, default_value = "full")]
    pub domain: String,
    /// Enumerate the whole domain
    #[arg(long)]
    pub exhaustive: bool,
    /// Sample seeded random instances instead
    #[arg(long)]
    pub random: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Trial budget in random mode
    #[arg(long, default_value_t = 100_000)]
    pub budget: u64,
}

#[derive(Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub rule: String,
    #[arg(long)]
    pub param: Option<usize>,
    #[arg(long)]
    pub axiom: String,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "full")]
    pub domain: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100_000)]
    pub budget: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    Thm1Forward,
    Thm2,
    Prop1,
    Prop2,
    Observation,
    BordaLoser,
    BordaSum,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub claim: Claim,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Salient state (thm1-forward only)
    #[arg(long)]
    pub j: Option<usize>,
    /// Sample or trial count for the randomized claims
    #[arg(long)]
    pub samples: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
}

fn resolve_rule(name: &str, param: Option<usize>) -> Result<Rule, CliError> {
    let full = match param {
        None => name.to_string(),
        Some(j) => {
            if name != "s-sdr" {
                return Err(CliError(format!(
                    "--param only applies to rule 's-sdr', not '{name}'"
                )));
            }
            format!("s-sdr:{j}")
        }
    };
    Ok(lookup(&full)?)
}

fn format_choice(set: &ChoiceSet, alts: &AlternativeSet) -> String {
    match set.as_singleton() {
        Some(a) => alts.name(a).to_string(),
        None => set.format(alts),
    }
}

pub fn run_eval(args: &EvalArgs, command: String) -> Result<RunReport, CliError> {
    let rule = resolve_rule(&args.rule, args.param)?;
    let mut report = RunReport::new(command);
    for path in &args.files {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError(format!("{}: {e}", path.display())))?;
        let doc = parse_profile(&text)
            .map_err(|e| CliError(format!("{}: {e}", path.display())))?;
        let p = doc
            .to_profile()
            .map_err(|e| CliError(format!("{}: {e}", path.display())))?;
        let choice = rule.evaluate(&p)?;
        report.assert_that(
            path.display().to_string(),
            true,
            Some(format_choice(&choice, p.alts())),
        );
    }
    report.count("profiles-evaluated", args.files.len() as u64);
    Ok(report)
}

pub fn run_check(args: &CheckArgs, command: String, max_visits: u64) -> Result<RunReport, CliError> {
    let rule = resolve_rule(&args.rule, args.param)?;
    let axiom = Axiom::parse(&args.axiom)?;
    let domain = DomainSpec::parse(&args.domain)?;
    if args.random && args.budget == 0 {
        return Err(CliError("budget must be at least 1".into()));
    }
    let alts = AlternativeSet::canonical(args.m);
    let mode = if args.exhaustive {
        CheckMode::Exhaustive
    } else {
        CheckMode::Random {
            seed: args.seed,
            budget: args.budget,
        }
    };
    let out = check(&rule, axiom, &alts, args.n, domain, mode, max_visits)?;
    let mut report = RunReport::new(command);
    if args.random {
        report.seed = Some(args.seed);
    }
    report.count("profiles-checked", out.profiles_checked);
    let passed = out.passed();
    let detail = if passed && args.random {
        Some(format!("no violation found in {} trials", out.profiles_checked))
    } else {
        None
    };
    report.assert_that(
        format!(
            "{} satisfies {} on domain {} at m={}, n={}",
            rule.name(),
            axiom.name(),
            domain.name(),
            args.m,
            args.n
        ),
        passed,
        detail,
    );
    if let Some(w) = &out.witness {
        report
            .witnesses
            .push(WitnessDoc::from_witness(&rule.name(), axiom.name(), &alts, w));
    }
    Ok(report)
}

pub fn run_search(
    args: &SearchArgs,
    command: String,
    max_visits: u64,
) -> Result<RunReport, CliError> {
    let rule = resolve_rule(&args.rule, args.param)?;
    let axiom = Axiom::parse(&args.axiom)?;
    let domain = DomainSpec::parse(&args.domain)?;
    if args.budget == 0 {
        return Err(CliError("budget must be at least 1".into()));
    }
    let alts = AlternativeSet::canonical(args.m);
    let mode = CheckMode::Random {
        seed: args.seed,
        budget: args.budget,
    };
    let out = check(&rule, axiom, &alts, args.n, domain, mode, max_visits)?;
    let mut report = RunReport::new(command);
    report.seed = Some(args.seed);
    report.count("trials", out.profiles_checked);
    match &out.witness {
        Some(w) => {
            report.assert_that(
                format!("no {} counterexample for {}", axiom.name(), rule.name()),
                false,
                Some(format!("witness found at trial {}", out.profiles_checked)),
            );
            report
                .witnesses
                .push(WitnessDoc::from_witness(&rule.name(), axiom.name(), &alts, w));
        }
        None => {
            report.assert_that(
                format!("no {} counterexample for {}", axiom.name(), rule.name()),
                true,
                Some(format!("absent after {} trials", out.profiles_checked)),
            );
        }
    }
    Ok(report)
}

pub fn run_verify(
    args: &VerifyArgs,
    command: String,
    max_visits: u64,
) -> Result<RunReport, CliError> {
    if args.j.is_some() && args.claim != Claim::Thm1Forward {
        return Err(CliError("--j only applies to claim thm1-forward".into()));
    }
    let mut report = RunReport::new(command);
    match args.claim {
        Claim::Thm1Forward => {
            let m = args.m.unwrap_or(3);
            let runs: Vec<(usize, usize)> = match (args.j, args.n) {
                (Some(j), Some(n)) => vec![(j, n)],
                (Some(_), None) => return Err(CliError("--j requires --n".into())),
                (None, Some(n)) => (1..=n).map(|j| (j, n)).collect(),
                (None, None) => vec![(1, 2), (2, 2), (1, 3), (2, 3)],
            };
            for (j, n) in runs {
                let ok = verify_theorem1_forward(j, m, n, max_visits)?;
                report.assert_that(
                    format!("s-sdr:{j} passes wdc and giia exhaustively at m={m}, n={n}"),
                    ok,
                    None,
                );
            }
        }
        Claim::Thm2 => {
            let (sizes, explicit) = match (args.m, args.n) {
                (Some(m), Some(n)) => (vec![(m, n)], true),
                (None, None) => (vec![(3, 2), (3, 3), (4, 3)], false),
                _ => return Err(CliError("--m and --n must be given together".into())),
            };
            for (m, n) in sizes {
                let s = verify_theorem2_uniqueness(m, n, max_visits)?;
                report.assert_that(
                    format!("companion propagation pins every profile at m={m}, n={n}"),
                    s.all_pinned,
                    Some(format!(
                        "{}/{} pinned via {} mpt pins and {} giia exclusions",
                        s.pinned, s.domain_size, s.mpt_pins, s.giia_exclusions
                    )),
                );
                if explicit || (m, n) == (3, 3) {
                    let rule = lookup("strict-condorcet")?;
                    let alts = AlternativeSet::canonical(m);
                    for axiom in [Axiom::Giia, Axiom::Mpt] {
                        let out = check(
                            &rule,
                            axiom,
                            &alts,
                            n,
                            DomainSpec::StrictCondorcet,
                            CheckMode::Exhaustive,
                            max_visits,
                        )?;
                        report.assert_that(
                            format!(
                                "strict-condorcet passes {} exhaustively at m={m}, n={n}",
                                axiom.name()
                            ),
                            out.passed(),
                            None,
                        );
                    }
                }
            }
        }
        Claim::Prop1 => {
            let (m, n) = (args.m.unwrap_or(3), args.n.unwrap_or(2));
            let samples = args.samples.unwrap_or(500);
            let seed = args.seed.unwrap_or(7);
            let out = verify_prop1_equivalence(m, n, samples, seed, max_visits)?;
            report.seed = Some(seed);
            report.count("functions-compared", out.comparisons.len() as u64);
            report.count("discrepancies", out.discrepancies);
            report.assert_that(
                format!("weak and down monotonicity verdicts coincide at m={m}, n={n}"),
                out.passed(),
                Some(format!(
                    "{} catalog rules and sampled tables compared",
                    out.comparisons.len()
                )),
            );
        }
        Claim::Prop2 => {
            let w = verify_prop2_violation()?;
            let (r1, r2) = corpus::prop2_pair();
            let alts = Arc::clone(r1.alts());
            let winners = |p: &Profile| {
                p.weak_condorcet_winners()
                    .iter()
                    .map(|&a| alts.name(a).to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            let (w1, w2) = (winners(&r1), winners(&r2));
            report.assert_that(
                "both profiles have a unique weak condorcet winner (x, then y)",
                w1 == "x" && w2 == "y",
                Some(format!("winners: {w1}, then {w2}")),
            );
            let (x, y) = w.pair.expect("violation carries its pair");
            report.assert_that(
                "the profiles agree on the {x, y} restriction in every state",
                r1.restriction_equal(&r2, x, y),
                None,
            );
            report.assert_that(
                "choosing the unique weak winner violates giia across the pair",
                true,
                Some(w.note.clone()),
            );
            report
                .witnesses
                .push(WitnessDoc::from_witness("weak-condorcet", "giia", &alts, &w));
        }
        Claim::Observation => {
            let (m, n) = (args.m.unwrap_or(3), args.n.unwrap_or(2));
            let samples = args.samples.unwrap_or(1000);
            let seed = args.seed.unwrap_or(11);
            let out = verify_observation(m, n, samples, seed, max_visits)?;
            report.seed = Some(seed);
            report.count("functions-checked", out.checked);
            report.count("premise-holders", out.premise_holders);
            report.count("vacuous", out.vacuous);
            report.count("implication-failures", out.implication_failures);
            report.assert_that(
                format!(
                    "resolute-for-pairs with weak monotonicity implies giia at m={m}, n={n}"
                ),
                out.passed(),
                out.first_failure
                    .as_ref()
                    .map(|label| format!("first failing function: {label}")),
            );
        }
        Claim::BordaLoser => {
            let trials = args.samples.unwrap_or(100_000);
            let seed = args.seed.unwrap_or(3);
            let m_range = args.m.map_or_else(|| vec![3, 4, 5], |m| vec![m]);
            let n_range = args.n.map_or_else(|| vec![3, 5, 7], |n| vec![n]);
            let out = verify_borda_loser_exclusion(trials, &m_range, &n_range, seed)?;
            report.seed = Some(seed);
            report.count("trials", out.trials);
            report.count("profiles-with-loser", out.with_loser);
            report.count("violations", out.violations);
            report.assert_that(
                "every strict condorcet loser is excluded by borda and scores below average",
                out.passed(),
                out.first_violation.as_ref().map(render_profile),
            );
        }
        Claim::BordaSum => {
            if args.m.is_some() || args.n.is_some() {
                return Err(CliError(
                    "claim borda-sum samples its own sizes; --m/--n do not apply".into(),
                ));
            }
            let trials = args.samples.unwrap_or(10_000);
            let seed = args.seed.unwrap_or(5);
            let out = verify_borda_sum_identity(trials, seed)?;
            report.seed = Some(seed);
            report.count("trials", out.trials);
            report.count("violations", out.violations);
            report.assert_that(
                "borda scores sum to n*m*(m+1)/2 on every sampled profile",
                out.passed(),
                None,
            );
        }
    }
    Ok(report)
}

pub fn run_examples(command: String, max_visits: u64) -> Result<RunReport, CliError> {
    let mut report = RunReport::new(command);
    example1(&mut report, max_visits)?;
    example2(&mut report)?;
    note_block(&mut report)?;
    example3(&mut report)?;
    prop2_block(&mut report)?;
    example4(&mut report)?;
    example5(&mut report)?;
    example6(&mut report)?;
    report.count("assertions", report.assertions.len() as u64);
    Ok(report)
}

fn assert_choice(
    report: &mut RunReport,
    label: &str,
    rule: &Rule,
    p: &Profile,
    expected: &str,
) -> Result<(), CliError> {
    let got = format_choice(&rule.evaluate(p)?, p.alts());
    let passed = got == expected;
    let detail = if passed {
        got
    } else {
        format!("expected {expected}, got {got}")
    };
    report.assert_that(label, passed, Some(detail));
    Ok(())
}

fn assert_violation_on(
    report: &mut RunReport,
    label: &str,
    rule: &Rule,
    axiom: Axiom,
    profiles: &[Profile],
) -> Result<(), CliError> {
    let out = check_on(rule, axiom, profiles)?;
    match &out.witness {
        Some(w) => {
            report.assert_that(label, true, Some(w.note.clone()));
            report.witnesses.push(WitnessDoc::from_witness(
                &rule.name(),
                axiom.name(),
                profiles[0].alts(),
                w,
            ));
        }
        None => {
            report.assert_that(label, false, Some("expected a violation, found none".into()));
        }
    }
    Ok(())
}

fn example1(report: &mut RunReport, max_visits: u64) -> Result<(), CliError> {
    let rule = lookup("last-of-state-one")?;
    let alts = AlternativeSet::canonical(3);
    let giia = check(
        &rule,
        Axiom::Giia,
        &alts,
        2,
        DomainSpec::Full,
        CheckMode::Exhaustive,
        max_visits,
    )?;
    report.assert_that(
        "example 1: last-of-state-one passes giia exhaustively at m=3, n=2",
        giia.passed(),
        Some(format!("{} profiles checked", giia.profiles_checked)),
    );
    let wdc = check(
        &rule,
        Axiom::Wdc,
        &alts,
        2,
        DomainSpec::Full,
        CheckMode::Exhaustive,
        max_visits,
    )?;
    match &wdc.witness {
        Some(w) => {
            report.assert_that(
                "example 1: last-of-state-one violates wdc",
                true,
                Some(w.note.clone()),
            );
            report
                .witnesses
                .push(WitnessDoc::from_witness(&rule.name(), Axiom::Wdc.name(), &alts, w));
        }
        None => {
            report.assert_that(
                "example 1: last-of-state-one violates wdc",
                false,
                Some("expected a violation, found none".into()),
            );
        }
    }
    Ok(())
}

fn example2(report: &mut RunReport) -> Result<(), CliError> {
    let (r1, r2) = corpus::example2_pair();
    let rule = lookup("plurality-least-index")?;
    assert_choice(report, "example 2: least-index plurality picks x1 at the first profile", &rule, &r1, "x1")?;
    assert_choice(report, "example 2: least-index plurality picks x2 at the second profile", &rule, &r2, "x2")?;
    let sc = lookup("strict-condorcet")?;
    assert_choice(report, "example 2: strict condorcet winner is x2 at the first profile", &sc, &r1, "x2")?;
    assert_choice(report, "example 2: strict condorcet winner is x2 at the second profile", &sc, &r2, "x2")?;
    assert_violation_on(
        report,
        "example 2: least-index plurality violates giia across the pair",
        &rule,
        Axiom::Giia,
        &[r1.clone(), r2],
    )?;
    let variable = strict_condorcet_variable(&convert(&r1))?;
    let got = format_choice(&variable, r1.alts());
    report.assert_that(
        "example 2: variable-state strict condorcet agrees on the multiplicity matrix",
        got == "x2",
        Some(got),
    );
    Ok(())
}

fn note_block(report: &mut RunReport) -> Result<(), CliError> {
    let rule = lookup("first-somewhere")?;
    let p = corpus::note_rfp_profile();
    assert_choice(
        report,
        "note: first-somewhere picks {x, y} on the pair-at-the-top profile",
        &rule,
        &p,
        "{x, y}",
    )?;
    let (r, rp) = corpus::note_giia_pair();
    assert_violation_on(
        report,
        "note: first-somewhere violates giia across the pair",
        &rule,
        Axiom::Giia,
        &[r, rp],
    )?;
    Ok(())
}

fn example3(report: &mut RunReport) -> Result<(), CliError> {
    let (r, rp) = corpus::example3_pair();
    let rule = lookup("weak-condorcet")?;
    assert_choice(report, "example 3: weak condorcet set is {x} at the first profile", &rule, &r, "x")?;
    assert_choice(report, "example 3: weak condorcet set is {x, w} at the second profile", &rule, &rp, "{x, w}")?;
    assert_violation_on(
        report,
        "example 3: the weak condorcet rule violates giia across the pair",
        &rule,
        Axiom::Giia,
        &[r, rp],
    )?;
    Ok(())
}

fn prop2_block(report: &mut RunReport) -> Result<(), CliError> {
    let (r1, r2) = corpus::prop2_pair();
    let rule = lookup("weak-condorcet")?;
    assert_choice(report, "proposition 2: unique weak winner x at the first profile", &rule, &r1, "x")?;
    assert_choice(report, "proposition 2: unique weak winner y at the second profile", &rule, &r2, "y")?;
    assert_violation_on(
        report,
        "proposition 2: choosing the unique weak winner violates giia",
        &rule,
        Axiom::Giia,
        &[r1, r2],
    )?;
    Ok(())
}

fn example4(report: &mut RunReport) -> Result<(), CliError> {
    let (r, rp) = corpus::example4_pair();
    let rule = lookup("plurality")?;
    assert_choice(report, "example 4: plurality picks {x} at the first profile", &rule, &r, "x")?;
    assert_choice(report, "example 4: plurality picks {y} at the second profile", &rule, &rp, "y")?;
    assert_violation_on(
        report,
        "example 4: plurality violates giia across the pair",
        &rule,
        Axiom::Giia,
        &[r, rp],
    )?;
    Ok(())
}

fn example5(report: &mut RunReport) -> Result<(), CliError> {
    let p = corpus::example5_profile();
    assert_choice(report, "example 5: plurality picks x", &lookup("plurality")?, &p, "x")?;
    let loser = p.strict_condorcet_loser().map(|a| p.alts().name(a).to_string());
    report.assert_that(
        "example 5: the plurality choice x is the strict condorcet loser",
        loser.as_deref() == Some("x"),
        loser,
    );
    assert_choice(report, "example 5: the strict condorcet winner is y", &lookup("strict-condorcet")?, &p, "y")?;
    assert_borda(report, "example 5", &p, &[("x", 11), ("y", 14), ("z", 13), ("w", 12)])?;
    Ok(())
}

fn example6(report: &mut RunReport) -> Result<(), CliError> {
    let p = corpus::example6_profile();
    assert_choice(report, "example 6: the strict condorcet winner is x", &lookup("strict-condorcet")?, &p, "x")?;
    assert_choice(report, "example 6: the borda winner is y", &lookup("borda")?, &p, "y")?;
    assert_borda(report, "example 6", &p, &[("x", 14), ("y", 15), ("z", 9), ("w", 12)])?;
    Ok(())
}

fn assert_borda(
    report: &mut RunReport,
    block: &str,
    p: &Profile,
    expected: &[(&str, u64)],
) -> Result<(), CliError> {
    let tally = borda_scores(p)?;
    let got: Vec<String> = p
        .alts()
        .iter()
        .map(|a| format!("{}:{}", p.alts().name(a), tally.score(a)))
        .collect();
    let want: Vec<String> = expected
        .iter()
        .map(|(name, s)| format!("{name}:{s}"))
        .collect();
    let passed = got == want;
    let detail = if passed {
        got.join(" ")
    } else {
        format!("expected {}, got {}", want.join(" "), got.join(" "))
    };
    report.assert_that(format!("{block}: borda scores"), passed, Some(detail));
    Ok(())
}
