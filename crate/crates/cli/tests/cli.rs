//! End-to-end tests of the `scx` binary: exit codes, parse errors,
//! witness round trips, and report determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use scx_cli::doc::{parse_profile, Doc};
use scx_core::{check_on, lookup, Axiom, Profile, Verdict};

fn scx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scx"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

const EXAMPLE6: &str = "4 5\nx x x z w\ny y y y y\nw w w w z\nz z z x x\n";

#[test]
fn eval_reports_the_choice_and_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "example6.prof", EXAMPLE6);
    let out = scx(&["eval", "--rule", "strict-condorcet", &path]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains(": x\n"));
}

#[test]
fn eval_expands_multiplicity_documents() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "ex2.prof",
        "multi 3 3\n2 1 2\nx1 x2 x3\nx2 x3 x2\nx3 x1 x1\n",
    );
    let out = scx(&["eval", "--rule", "strict-condorcet", &path]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains(": x2\n"));
}

#[test]
fn parse_errors_exit_two_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "bad.prof", "3 2\nx x\ny z\nz z\n");
    let out = scx(&["eval", "--rule", "borda", &path]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"));
}

#[test]
fn unknown_names_exit_two_listing_valid_ones() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "p.prof", EXAMPLE6);
    let out = scx(&["eval", "--rule", "nope", &path]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("strict-condorcet"));
    assert!(stderr(&out).contains("s-sdr:J"));

    let out = scx(&[
        "check", "--rule", "borda", "--axiom", "nope", "--m", "3", "--n", "2", "--exhaustive",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("down-monotonicity"));
}

#[test]
fn exhaustive_check_passes_and_fails_with_the_right_codes() {
    let out = scx(&[
        "check", "--rule", "s-sdr", "--param", "1", "--axiom", "wdc", "--m", "3", "--n", "2",
        "--exhaustive",
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = scx(&[
        "check", "--rule", "plurality", "--axiom", "giia", "--m", "3", "--n", "3", "--exhaustive",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("witness"));
}

#[test]
fn emitted_witnesses_reparse_and_reviolate() {
    let out = scx(&[
        "check", "--json", "--rule", "plurality", "--axiom", "giia", "--m", "3", "--n", "3",
        "--exhaustive",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let witness = &report["witnesses"][0];
    assert_eq!(witness["rule"], "plurality");
    let profiles: Vec<Profile> = witness["profiles"]
        .as_array()
        .unwrap()
        .iter()
        .map(|doc| {
            let Doc::Fixed(p) = parse_profile(doc.as_str().unwrap()).unwrap() else {
                panic!("witness profiles are fixed-state")
            };
            p
        })
        .collect();
    let rule = lookup("plurality").unwrap();
    let replay = check_on(&rule, Axiom::Giia, &profiles).unwrap();
    assert_eq!(replay.verdict, Verdict::Fail);
}

#[test]
fn search_exit_codes_track_discovery() {
    let out = scx(&[
        "search", "--rule", "plurality", "--axiom", "giia", "--m", "3", "--n", "7", "--domain",
        "unique-plurality", "--seed", "5", "--budget", "10000",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("witness"));

    let out = scx(&[
        "search", "--rule", "strict-condorcet", "--axiom", "giia", "--m", "3", "--n", "3",
        "--domain", "strict-condorcet", "--seed", "1", "--budget", "2000",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn seeded_json_reports_are_byte_identical() {
    let args = [
        "check", "--json", "--rule", "plurality", "--axiom", "giia", "--m", "3", "--n", "4",
        "--random", "--seed", "9", "--budget", "3000",
    ];
    let first = scx(&args);
    let second = scx(&args);
    assert_eq!(first.status.code(), second.status.code());
    assert_eq!(stdout(&first), stdout(&second));
    assert!(!stdout(&first).contains("elapsed"));
}

#[test]
fn verify_prop2_reproduces_the_violation() {
    let out = scx(&["verify", "--claim", "prop2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["status"], "pass");
    assert_eq!(report["witnesses"][0]["pair"][0], "x");
    assert_eq!(report["witnesses"][0]["pair"][1], "y");
    assert_eq!(
        report["witnesses"][0]["profiles"].as_array().unwrap().len(),
        2
    );
}

#[test]
fn resource_ceiling_exits_two() {
    let out = scx(&[
        "check", "--rule", "borda", "--axiom", "giia", "--m", "5", "--n", "4", "--exhaustive",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("limit"));

    let out = scx(&[
        "--max-visits", "10", "check", "--rule", "borda", "--axiom", "giia", "--m", "3", "--n",
        "2", "--exhaustive",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    let out = scx(&[]);
    assert_eq!(out.status.code(), Some(2));

    let out = scx(&["verify", "--claim", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));

    let out = scx(&[
        "check", "--rule", "borda", "--axiom", "giia", "--m", "3", "--n", "2",
    ]);
    assert_eq!(out.status.code(), Some(2), "a mode flag is required");
}
