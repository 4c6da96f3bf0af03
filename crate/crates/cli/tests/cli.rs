use std::process::{Command, Output};

use symconj::json::{schur_from_json, schur_to_json};

fn symconj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symconj"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8")
}

#[test]
fn expand_f5_lists_missing_shapes() {
    let out = symconj(&["expand", "fn", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("s(3,1,1)"));
    assert!(text.trim_end().ends_with("missing: (4,1) (2,1,1,1)"));
}

#[test]
fn expand_class_and_gn() {
    let out = symconj(&["expand", "class", "5,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("missing: none"));

    let out = symconj(&["expand", "gn", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("missing: (2,1)"));
}

#[test]
fn oracle_matches_formula_output() {
    for twisted in [false, true] {
        let mut base = vec!["--format", "json", "expand", "class", "3,2,1"];
        if twisted {
            base.push("--twisted");
        }
        let formula = stdout(&symconj(&base));
        base.push("--oracle");
        let brute = symconj(&base);
        assert_eq!(brute.status.code(), Some(0));
        assert_eq!(formula, stdout(&brute));
    }
}

#[test]
fn check_global_exit_codes() {
    assert_eq!(symconj(&["check-global", "7,1"]).status.code(), Some(0));

    let out = symconj(&["check-global", "5,3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("missing: (4,4) (2,2,2,2)"));

    assert_eq!(symconj(&["check-global", "3,3"]).status.code(), Some(1));
    assert_eq!(symconj(&["check-global", "--twisted", "5,3,1"]).status.code(), Some(0));
}

#[test]
fn verify_small_range() {
    let out = symconj(&["verify", "--max-n", "9"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("computed: (5,3,1)"));
    assert_eq!(symconj(&["verify", "--max-n", "1"]).status.code(), Some(2));
}

#[test]
fn lr_coefficients() {
    let lr = |l: &str, m: &str, n: &str| stdout(&symconj(&["lr", "--lambda", l, "--mu", m, "--nu", n]));
    assert_eq!(lr("3,2,1", "2,1", "2,1").trim(), "2");
    assert_eq!(lr("3,1", "2", "1,1").trim(), "1");
    assert_eq!(lr("4", "2", "1,1").trim(), "0");
}

#[test]
fn dressler_decompositions() {
    let run = |args: &[&str]| stdout(&symconj(args)).trim().to_string();
    assert_eq!(run(&["dressler", "9"]), "none");
    assert_eq!(run(&["dressler", "9", "--seed"]), "5,3,1");
    assert_eq!(run(&["dressler", "16"]), "13,3");
}

#[test]
fn json_dump_round_trips_byte_for_byte() {
    let out = symconj(&["--format", "json", "expand", "wlambda", "4,3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let parsed = schur_from_json(text.trim_end()).expect("parses");
    assert_eq!(schur_to_json(&parsed), text.trim_end());
}

#[test]
fn usage_and_scale_errors() {
    assert_eq!(symconj(&["check-global", "3,5"]).status.code(), Some(2));
    assert_eq!(symconj(&["check-global", "3, 1"]).status.code(), Some(2));
    assert_eq!(symconj(&["expand", "class", "a"]).status.code(), Some(2));
    assert_eq!(symconj(&["expand", "fn", "15"]).status.code(), Some(3));
    assert_eq!(symconj(&["expand", "class", "5,3", "--oracle"]).status.code(), Some(3));
}
