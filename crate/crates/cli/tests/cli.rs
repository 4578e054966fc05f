//! End-to-end tests driving the compiled binary.

use std::path::Path;
use std::process::{Command, Output};

fn bernid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bernid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn compute_commands_print_canonical_values() {
    let cases = [
        (vec!["bn", "12"], "-691/2730"),
        (vec!["bn", "0"], "1"),
        (vec!["bn", "1"], "-1/2"),
        (vec!["bpoly", "2"], "x^2 - x + 1/6"),
        (vec!["epoly", "2"], "x^2 - x"),
        (vec!["harmonic", "0"], "0"),
        (vec!["harmonic", "4"], "25/12"),
        (vec!["harmonic2", "4"], "205/144"),
    ];
    for (args, expect) in cases {
        let out = bernid(&args);
        assert_eq!(code(&out), 0, "{args:?} failed: {out:?}");
        assert_eq!(stdout(&out).trim(), expect, "wrong value for {args:?}");
    }
}

#[test]
fn egf_prints_coefficient_table() {
    let out = bernid(&["egf", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "t^0: 1\nt^1: -1/2\nt^2: 1/12\nt^3: 0\nt^4: -1/720\n"
    );
}

#[test]
fn verify_single_identity_passes() {
    let out = bernid(&["verify", "eq1", "--n-max", "25"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("eq1 n=25: ok"));
    assert!(text.contains("summary: 25 checks, 25 passed, 0 failed"));
}

#[test]
fn verify_all_smallest_grid_passes() {
    let out = bernid(&["verify", "all", "--n-max", "1"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn verify_multiple_ids_and_d_restriction() {
    let out = bernid(&["verify", "eq6", "--n-max", "10", "--d", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("eq6 n=10 d=2: ok"));
    assert!(!text.contains("d=3"), "--d must pin the offset grid");

    let out = bernid(&["verify", "eq2", "eq3", "--n-max", "8"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("summary: 16 checks, 16 passed, 0 failed"));
}

#[test]
fn verify_rejects_unknown_identity_with_exit_2() {
    let out = bernid(&["verify", "eq99", "--n-max", "3"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown identity"));
}

#[test]
fn usage_errors_exit_2() {
    // Negative n.
    let out = bernid(&["bn", "--", "-3"]);
    assert_eq!(code(&out), 2);
    // Unknown subcommand ("bad kind").
    let out = bernid(&["frobnicate", "3"]);
    assert_eq!(code(&out), 2);
    // Missing required argument.
    let out = bernid(&["verify"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn json_reports_are_schema_stable_and_deterministic() {
    let args = [
        "verify",
        "eq1",
        "eq3",
        "--n-max",
        "6",
        "--format",
        "json",
        "--workers",
        "1",
    ];
    let first = bernid(&args);
    let second = bernid(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout, "output must be byte-identical");

    let doc: serde_json::Value = serde_json::from_str(&stdout(&first)).expect("valid json");
    let reports = doc["reports"].as_array().expect("reports array");
    assert_eq!(reports.len(), 12);
    for report in reports {
        for field in ["id", "params", "lhs", "rhs", "equal", "witness"] {
            assert!(
                report.get(field).is_some(),
                "missing field {field} in {report}"
            );
        }
        assert_eq!(report["equal"], true);
        assert_eq!(report["witness"], "");
    }
    assert_eq!(doc["summary"]["total"], 12);
    assert_eq!(doc["summary"]["failed"], 0);
    assert_eq!(doc["summary"]["all_equal"], true);
}

#[test]
fn text_and_json_verdicts_agree() {
    let json_out = bernid(&[
        "verify", "eq3", "--n-max", "4", "--perturb", "eq3", "--format", "json",
    ]);
    let text_out = bernid(&["verify", "eq3", "--n-max", "4", "--perturb", "eq3"]);
    assert_eq!(code(&json_out), 1);
    assert_eq!(code(&text_out), 1);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&json_out)).expect("valid json");
    let json_failures = doc["summary"]["failed"].as_u64().expect("failed count");
    assert_eq!(json_failures, 4);
    assert!(stdout(&text_out).contains("summary: 4 checks, 0 passed, 4 failed"));
}

#[test]
fn number_theory_commands_pass() {
    let out = bernid(&["vsc", "--k-max", "12"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("vsc k=12: ok"));

    let out = bernid(&["wolstenholme", "--p-max", "60"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("wolstenholme p=59: ok"));
    assert!(!text.contains("p=2:") && !text.contains("p=3:"));

    let out = bernid(&["pintegral", "--p-max", "40", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    // Primes 5..37: eleven of them below 40, minus 2 and 3.
    assert_eq!(doc["summary"]["total"], 10);
}

#[test]
fn cache_save_load_and_preload() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bern.cache");
    let p = path.to_str().unwrap();

    let out = bernid(&["cache", "save", "--cache", p, "--n-max", "40"]);
    assert_eq!(code(&out), 0, "{out:?}");
    assert!(path.exists());

    let out = bernid(&["cache", "load", "--cache", p]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("loaded and verified 41"));

    // Other commands preload the cache when the flag is present.
    let out = bernid(&["bn", "12", "--cache", p]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "-691/2730");

    // A missing cache path is a note, not an error, for compute commands.
    let missing = dir.path().join("absent.cache");
    let out = bernid(&["bn", "2", "--cache", missing.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "1/6");
}

#[test]
fn cache_command_requires_path() {
    let out = bernid(&["cache", "save"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn corrupt_caches_are_refused_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bern.cache");
    let p = path.to_str().unwrap();
    assert_eq!(code(&bernid(&["cache", "save", "--cache", p, "--n-max", "20"])), 0);

    // Truncated: count no longer matches.
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    std::fs::write(&path, lines[..lines.len() - 1].join("\n") + "\n").unwrap();
    let out = bernid(&["cache", "load", "--cache", p]);
    assert_eq!(code(&out), 2);

    // Tampered entry 1 (always spot-checked).
    write_tampered(&path, 20, 1, "1/2");
    let out = bernid(&["cache", "load", "--cache", p]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("spot check"));

    // Preloading a corrupt cache also refuses with exit 2.
    let out = bernid(&["verify", "eq1", "--n-max", "3", "--cache", p]);
    assert_eq!(code(&out), 2);
}

/// Rewrites the cache file with `count` entries where entry `idx` is
/// replaced by `value`; all other entries are the honest ones.
fn write_tampered(path: &Path, upto: u32, idx: usize, value: &str) {
    let mut cache = bernid::sequences::SequenceCache::new();
    cache.ensure_bernoulli(upto);
    let mut lines = vec![
        "bernid-bernoulli-cache v1".to_owned(),
        format!("count {}", upto + 1),
    ];
    for (i, v) in cache.bernoulli_values().iter().enumerate() {
        lines.push(if i == idx {
            value.to_owned()
        } else {
            v.to_string()
        });
    }
    std::fs::write(path, lines.join("\n") + "\n").unwrap();
}

#[test]
fn tampered_third_entry_of_minimal_cache_is_refused() {
    // With three entries the random spot check always lands on index 2.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bern.cache");
    write_tampered(&path, 2, 2, "1/7");
    let out = bernid(&["cache", "load", "--cache", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("B_2"));
}

#[test]
fn workers_flag_accepted() {
    let out = bernid(&["verify", "eq1", "--n-max", "10", "--workers", "1"]);
    assert_eq!(code(&out), 0);
    let out = bernid(&["verify", "eq1", "--n-max", "10", "--workers", "0"]);
    assert_eq!(code(&out), 2);
}
