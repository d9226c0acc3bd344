//! Runs the binary on the files in `tests/data` and compares stdout with
//! `tests/golden`. Set `INTGAMES_BLESS=1` to rewrite the golden files.

use std::path::Path;
use std::process::Command;

const CASES: &[(&str, &[&str], i32)] = &[
    (
        "classify_worked.txt",
        &["classify", "tests/data/worked.game", "tests/data/strong3.game"],
        0,
    ),
    (
        "classify_worked.json",
        &["--format", "json", "classify", "tests/data/worked.game"],
        0,
    ),
    (
        "membership_sel_core.json",
        &[
            "--format",
            "json",
            "membership",
            "--concept",
            "sel-core",
            "--x",
            "2,2",
            "tests/data/worked.game",
        ],
        0,
    ),
    (
        "membership_gen.txt",
        &["membership", "--concept", "gen", "--x", "2,2", "tests/data/worked.game"],
        1,
    ),
    (
        "membership_gen_true.txt",
        &[
            "membership",
            "--concept",
            "gen",
            "--x",
            "1,1,1",
            "tests/data/strong3.game",
        ],
        0,
    ),
    (
        "membership_selection.txt",
        &[
            "membership",
            "--concept",
            "core",
            "--selection",
            "tests/data/lower_of_worked.game",
            "--x",
            "1,2",
            "tests/data/worked.game",
        ],
        0,
    ),
    ("coincidence_worked.txt", &["coincidence", "tests/data/worked.game"], 1),
    (
        "coincidence_unit_pair.json",
        &["--format", "json", "coincidence", "tests/data/unit_pair.game"],
        1,
    ),
    (
        "coincidence_lower.txt",
        &["coincidence", "tests/data/lower_of_worked.game"],
        0,
    ),
    ("strong_strong3.txt", &["strong", "tests/data/strong3.game"], 0),
    (
        "strong_worked.json",
        &["--format", "json", "strong", "tests/data/worked.game"],
        0,
    ),
    ("family_sel_convex_3.txt", &["family", "sel-convex", "3"], 0),
    ("oracle_worked.txt", &["oracle", "tests/data/worked.game"], 0),
    (
        "oracle_random.txt",
        &["oracle", "--random", "3", "--seed", "5", "--players", "2"],
        0,
    ),
];

#[test]
fn cli_output_matches_golden_files() {
    let bless = std::env::var_os("INTGAMES_BLESS").is_some();
    let mut failures = Vec::new();
    for (golden, args, code) in CASES {
        let out = Command::new(env!("CARGO_BIN_EXE_intgames"))
            .args(*args)
            .current_dir(env!("CARGO_MANIFEST_DIR"))
            .output()
            .expect("binary runs");
        let stdout = String::from_utf8(out.stdout).expect("utf-8 output");
        let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(golden);
        if bless {
            std::fs::write(&path, &stdout).unwrap();
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_default();
        if stdout != expected {
            failures.push(format!(
                "{golden}: stdout differs\n--- got\n{stdout}--- expected\n{expected}"
            ));
        }
        if out.status.code() != Some(*code) {
            failures.push(format!("{golden}: exit {:?}, expected {code}", out.status.code()));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn stdin_is_read_when_no_file_is_given() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_intgames"))
        .args(["membership", "--concept", "sel-core", "--x", "2,2"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"players 2\n1 [1, 3]\n2 [1, 3]\n1,2 [1, 4]\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().lines().next(),
        Some("sel-core (2, 2): true")
    );
    assert!(out.status.success());
}

#[test]
fn malformed_input_reports_the_line() {
    let out = Command::new(env!("CARGO_BIN_EXE_intgames"))
        .args(["classify", "tests/golden/../data/missing.game"])
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}
