//! End-to-end tests of the `mfold` binary: exit codes, output formats, and
//! cache behavior.

use std::path::Path;
use std::process::{Command, Output};

fn mfold(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mfold"))
        .args(args)
        .env_remove("MFOLD_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn mfold_in(args: &[&str], cache_dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mfold"))
        .args(args)
        .env("MFOLD_CACHE_DIR", cache_dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

/// Counts from a csv or table body, skipping the header line.
fn last_column(text: &str) -> Vec<String> {
    text.lines()
        .skip(1)
        .map(|line| line.rsplit([',', ' ']).next().unwrap().trim().to_string())
        .collect()
}

#[test]
fn count_quartics_with_triple_point() {
    let out = mfold(&["count", "-d", "4", "-m", "3"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(last_column(&stdout(&out)), ["60"]);
}

#[test]
fn count_json_record() {
    let out = mfold(&[
        "count", "-d", "1", "-m", "1", "--theta", "1", "--format", "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout(&out).trim(),
        r#"{"d":1,"m":1,"theta":1,"r":2,"count":"1"}"#
    );
}

#[test]
fn count_exceptional_divisor() {
    // the class E itself: one rigid curve once the base point is fixed
    let out = mfold(&[
        "count", "-d", "0", "-m", "-1", "--theta", "2", "--format", "csv",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(last_column(&stdout(&out)), ["1"]);
}

#[test]
fn count_rejects_zero_class() {
    let out = mfold(&["count", "-d", "0", "-m", "0"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("(0, 0)"), "{}", stderr(&out));
}

#[test]
fn count_rejects_negative_computed_points() {
    let out = mfold(&["count", "-d", "2", "-m", "8"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("negative"), "{}", stderr(&out));
}

#[test]
fn count_with_explicit_points_off_the_gate() {
    let out = mfold(&["count", "-d", "3", "-m", "2", "--r", "5"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(last_column(&stdout(&out)), ["0"]);
}

#[test]
fn degree_guard_blocks_and_unlocks() {
    let blocked = mfold(&["count", "-d", "13", "-m", "3"]);
    assert_eq!(exit_code(&blocked), 2);
    assert!(stderr(&blocked).contains("--unsafe-degree"));

    let allowed = mfold(&[
        "oracle",
        "kontsevich",
        "-d",
        "13",
        "--unsafe-degree",
        "--format",
        "json",
    ]);
    assert_eq!(exit_code(&allowed), 0);
    let record: serde_json::Value = serde_json::from_str(stdout(&allowed).trim()).unwrap();
    let count = record["count"].as_str().unwrap();
    assert!(count.chars().all(|c| c.is_ascii_digit()) && count.len() > 10);
}

#[test]
fn table_preset_triple_free() {
    let out = mfold(&["table", "--preset", "triple-free", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        last_column(&stdout(&out)),
        ["60", "56400", "49177440", "56784765120", "91466185097280"]
    );
}

#[test]
fn table_custom_fixed_node() {
    let out = mfold(&[
        "table",
        "-m",
        "2",
        "--theta",
        "2",
        "--d-range",
        "3..8",
        "--format",
        "csv",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        last_column(&stdout(&out)),
        ["1", "96", "18132", "6506400", "4059366000", "4081597355136"]
    );
}

#[test]
fn table_plane_classes_reduce_to_plane_counts() {
    let out = mfold(&[
        "table",
        "-m",
        "0",
        "--theta",
        "2",
        "--d-range",
        "1..3",
        "--format",
        "csv",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(last_column(&stdout(&out)), ["1", "1", "12"]);
}

#[test]
fn table_rejects_conflicting_arguments() {
    let out = mfold(&["table", "--preset", "kontsevich", "-m", "2"]);
    assert_eq!(exit_code(&out), 2);
    let out = mfold(&["table", "-m", "2"]);
    assert_eq!(exit_code(&out), 2);
    let out = mfold(&["table", "--preset", "no-such-table"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("available"));
}

#[test]
fn formats_carry_the_same_numbers() {
    let csv = mfold(&["table", "--preset", "mfold-theta1", "--format", "csv"]);
    let json = mfold(&["table", "--preset", "mfold-theta1", "--format", "json"]);
    let text = mfold(&["table", "--preset", "mfold-theta1", "--format", "table"]);
    let from_csv = last_column(&stdout(&csv));
    let from_text = last_column(&stdout(&text));
    let parsed: serde_json::Value = serde_json::from_str(stdout(&json).trim()).unwrap();
    let from_json: Vec<String> = parsed
        .as_array()
        .unwrap()
        .iter()
        .map(|rec| rec["count"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(from_csv, from_json);
    assert_eq!(from_csv, from_text);
    assert_eq!(from_csv, ["12", "20", "30", "42", "56", "72"]);
}

#[test]
fn oracle_kontsevich_quintics() {
    let out = mfold(&["oracle", "kontsevich", "-d", "5", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(last_column(&stdout(&out)), ["87304"]);
}

#[test]
fn oracle_chern_values() {
    let out = mfold(&["oracle", "chern", "-d", "7", "-m", "6", "--format", "csv"]);
    assert_eq!(last_column(&stdout(&out)), ["840"]);
    let out = mfold(&[
        "oracle", "chern", "-d", "4", "-m", "3", "--theta", "2", "--format", "csv",
    ]);
    assert_eq!(last_column(&stdout(&out)), ["1"]);
    let out = mfold(&["oracle", "chern", "-d", "4", "-m", "1"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_passes_clean() {
    let out = mfold(&["verify"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("verify: PASS"), "{}", stdout(&out));
}

#[test]
fn verify_json_report() {
    let out = mfold(&["verify", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let report: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report["passed"], serde_json::Value::Bool(true));
    assert_eq!(report["tables"].as_array().unwrap().len(), 10);
}

#[test]
fn cache_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("memo.json");
    let cache_arg = cache.to_str().unwrap();

    let first = mfold(&["count", "-d", "4", "-m", "3", "--cache", cache_arg]);
    assert_eq!(exit_code(&first), 0);
    let bytes_first = std::fs::read(&cache).unwrap();

    let second = mfold(&["count", "-d", "4", "-m", "3", "--cache", cache_arg]);
    assert_eq!(stdout(&first), stdout(&second));
    let bytes_second = std::fs::read(&cache).unwrap();
    assert_eq!(bytes_first, bytes_second);

    // read-only and disabled modes leave the file alone and agree on values
    let read_only = mfold(&[
        "count",
        "-d",
        "4",
        "-m",
        "3",
        "--cache",
        cache_arg,
        "--cache-mode",
        "read-only",
    ]);
    assert_eq!(stdout(&read_only), stdout(&first));
    let disabled = mfold(&[
        "count",
        "-d",
        "4",
        "-m",
        "3",
        "--cache",
        cache_arg,
        "--cache-mode",
        "disabled",
    ]);
    assert_eq!(stdout(&disabled), stdout(&first));
    assert_eq!(std::fs::read(&cache).unwrap(), bytes_first);
}

#[test]
fn cache_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = mfold_in(&["count", "-d", "3", "-m", "2"], dir.path());
    assert_eq!(exit_code(&out), 0);
    assert!(dir.path().join("memo.json").exists());

    // a second run picks the cache up and verify audits it cleanly
    let again = mfold_in(&["count", "-d", "3", "-m", "2"], dir.path());
    assert_eq!(stdout(&out), stdout(&again));
    let verify = mfold_in(&["verify"], dir.path());
    assert_eq!(exit_code(&verify), 0);
    assert!(stdout(&verify).contains("cache"), "{}", stdout(&verify));
}

#[test]
fn verify_flags_corrupted_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("memo.json");
    std::fs::write(
        &cache,
        r#"{"version":1,"entries":[{"d":4,"m":3,"r":10,"theta":0,"count":"61"}]}"#,
    )
    .unwrap();
    let out = mfold(&["verify", "--cache", cache.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    let text = stdout(&out);
    assert!(
        text.contains("stored 61") && text.contains("recomputed 60"),
        "{text}"
    );
}

#[test]
fn unknown_cache_version_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("memo.json");
    std::fs::write(&cache, r#"{"version":2,"entries":[]}"#).unwrap();
    let out = mfold(&[
        "count",
        "-d",
        "3",
        "-m",
        "2",
        "--cache",
        cache.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("version"), "{}", stderr(&out));
}
