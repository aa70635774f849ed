use std::path::PathBuf;
use std::process::{Command, Output};

fn matconic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matconic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn check_golden(name: &str, args: &[&str]) {
    let first = matconic(args);
    assert_eq!(first.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&first.stderr));
    let second = matconic(args);
    assert_eq!(first.stdout, second.stdout, "{args:?} is not deterministic");
    assert_eq!(stdout(&first), golden(name), "{args:?} differs from {name}");
}

#[test]
fn golden_seq() {
    check_golden("seq_u_w5.csv", &["seq", "--which", "u", "--w", "5", "--count", "6", "--format", "csv"]);
    check_golden("seq_a_w7.json", &["seq", "--which", "a", "--w", "7", "--count", "6"]);
}

#[test]
fn golden_points() {
    check_golden("points_w5.jsonl", &["points", "--w", "5", "--count", "4", "--format", "json"]);
    check_golden("points_w9.jsonl", &["points", "--w", "9", "--count", "4"]);
}

#[test]
fn golden_solve() {
    check_golden("solve_c2_w5.jsonl", &["solve", "--conic", "C2", "--w", "5", "--count", "4"]);
    check_golden("solve_c3_w9.csv", &["solve", "--conic", "C3", "--w", "9", "--count", "3", "--format", "csv"]);
}

#[test]
fn golden_oracle() {
    check_golden("oracle_c_w6.jsonl", &["oracle", "--conic", "C", "--w", "6", "--bound", "30"]);
    check_golden("oracle_c2_w5.jsonl", &["oracle", "--conic", "C2", "--w", "5", "--bound", "20"]);
    check_golden("oracle_c3_w9.jsonl", &["oracle", "--conic", "C3", "--w", "9", "--bound", "20"]);
}

#[test]
fn golden_verify() {
    check_golden("verify_mv.json", &["verify", "--identity", "MV", "--n-max", "4"]);
}

#[test]
fn golden_oeis_check() {
    check_golden("oeis_check_w8.json", &["oeis-check", "--w", "8", "--count", "5"]);
}

#[test]
fn seq_csv_example() {
    let o = matconic(&["seq", "--which", "u", "--w", "5", "--count", "6", "--format", "csv"]);
    let text = stdout(&o);
    let values: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(values, ["0", "1", "5", "16", "45", "121"]);
}

#[test]
fn points_example_ends_at_p3() {
    let o = matconic(&["points", "--w", "5", "--count", "3", "--format", "json"]);
    let text = stdout(&o);
    let lines: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines[0]["records"], 3);
    let last = &lines[3];
    assert_eq!(last["x"], "4");
    assert_eq!(last["y"], serde_json::json!({"rat": "0", "rad": "1", "w": 5}));
}

#[test]
fn verify_all_reports_verified() {
    let o = matconic(&["verify", "--identity", "all", "--n-max", "30"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["payload"]["all_expected"], true);
    for r in v["payload"]["reports"].as_array().unwrap() {
        let expected = if r["erratum"] == true { "counterexample" } else { "verified" };
        assert_eq!(r["status"], expected, "{}", r["identity"]);
    }
}

// Exit codes: 2 for usage errors, 1 for domain errors and mismatches.

fn code(args: &[&str]) -> Option<i32> {
    matconic(args).status.code()
}

#[test]
fn exit_codes_seq() {
    assert_eq!(code(&["seq", "--which", "b", "--w", "6", "--count", "3"]), Some(0));
    assert_eq!(code(&["seq", "--which", "z", "--w", "6", "--count", "3"]), Some(2));
    assert_eq!(code(&["seq", "--which", "b", "--w", "6", "--count", "0"]), Some(2));
    assert_eq!(code(&["seq", "--which", "b", "--w", "3", "--count", "3"]), Some(1));
}

#[test]
fn exit_codes_points() {
    assert_eq!(code(&["points", "--w", "5", "--count", "2"]), Some(0));
    assert_eq!(code(&["points", "--w", "five", "--count", "2"]), Some(2));
    assert_eq!(code(&["points", "--w", "2", "--count", "2"]), Some(1));
}

#[test]
fn exit_codes_solve() {
    assert_eq!(code(&["solve", "--conic", "C2", "--w", "4", "--count", "2"]), Some(0));
    assert_eq!(code(&["solve", "--conic", "C4", "--w", "4", "--count", "2"]), Some(2));
    assert_eq!(code(&["solve", "--conic", "C", "--w", "5", "--count", "2"]), Some(1));
}

#[test]
fn exit_codes_oracle() {
    assert_eq!(code(&["oracle", "--conic", "C2", "--w", "8", "--bound", "3"]), Some(0));
    assert_eq!(code(&["oracle", "--conic", "C2", "--w", "8"]), Some(2));
    assert_eq!(code(&["oracle", "--conic", "C", "--w", "9", "--bound", "10"]), Some(1));
}

#[test]
fn exit_codes_verify() {
    assert_eq!(code(&["verify", "--identity", "S", "--n-max", "5"]), Some(0));
    assert_eq!(code(&["verify", "--identity", "X", "--n-max", "5"]), Some(2));
    assert_eq!(code(&["verify", "--identity", "S", "--n-max", "0"]), Some(1));
}

#[test]
fn exit_codes_oeis_check() {
    assert_eq!(code(&["oeis-check", "--w", "11", "--count", "20"]), Some(0));
    assert_eq!(code(&["oeis-check", "--w", "5", "--count", "3", "--fetch", "--data-dir", "x"]), Some(2));
    assert_eq!(code(&["oeis-check", "--w", "12", "--count", "3"]), Some(1));
    assert_eq!(code(&["oeis-check", "--w", "5", "--count", "41"]), Some(1));
}

#[test]
fn oeis_check_mismatch_exits_one() {
    let dir = std::env::temp_dir().join(format!("matconic-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("b004146.txt"), "0 0\n1 1\n2 6\n").unwrap();
    std::fs::write(dir.join("b001906.txt"), "0 0\n1 1\n2 3\n").unwrap();
    std::fs::write(dir.join("b002878.txt"), "0 1\n1 4\n2 11\n").unwrap();
    let o = matconic(&["oeis-check", "--w", "5", "--count", "3", "--data-dir", dir.to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).ok();
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["payload"]["sequences"][0]["first_mismatch"]["index"], 2);
    assert_eq!(v["payload"]["sequences"][0]["first_mismatch"]["expected"], "6");
    assert!(v["payload"]["sequences"][1]["first_mismatch"].is_null());
}
