use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn p5hom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_p5hom")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const C5: &str = "H 2\nHEDGE 1 2\nG 5\nGEDGE 1 2\nGEDGE 2 3\nGEDGE 3 4\nGEDGE 4 5\nGEDGE 5 1\n";
const P5: &str = "H 2\nHEDGE 1 2\nG 5\nGEDGE 1 2\nGEDGE 2 3\nGEDGE 3 4\nGEDGE 4 5\n";

#[test]
fn solve_prints_report_and_solution() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "c5.txt", C5);
    let out = p5hom(&["solve", &inst, "--check"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("# algorithm: paper\n"));
    assert!(text.contains("# weight: 4/1\n"));
    assert!(text.contains("# exhaustive: true\n"));
    assert!(text.contains("# instance_sha256: "));
    assert!(text.contains("\nweight 4/1\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("vertex ")).count(), 4);

    let sol = write(dir.path(), "c5.sol", &text);
    let verified = p5hom(&["verify", &inst, &sol]);
    assert_eq!(verified.status.code(), Some(0));
    assert_eq!(stdout(&verified), "valid weight 4/1\n");
}

#[test]
fn algorithms_agree() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "c5.txt", C5);
    for extra in [&["--algorithm", "oracle"][..], &["--force-connected"], &["--parallel", "3"]] {
        let mut args = vec!["solve", inst.as_str()];
        args.extend_from_slice(extra);
        let out = p5hom(&args);
        assert_eq!(out.status.code(), Some(0), "{extra:?}");
        assert!(stdout(&out).contains("\nweight 4/1\n"), "{extra:?}");
    }
}

#[test]
fn verify_rejects_bad_solutions() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "c5.txt", C5);
    let clash = write(dir.path(), "clash.sol", "weight 2\nvertex 1 1\nvertex 2 1\n");
    let out = p5hom(&["verify", &inst, &clash]);
    assert_eq!(out.status.code(), Some(1));
    let wrong_weight = write(dir.path(), "wt.sol", "weight 3\nvertex 1 1\nvertex 2 2\n");
    assert_eq!(p5hom(&["verify", &inst, &wrong_weight]).status.code(), Some(1));
}

#[test]
fn p5_is_reported_with_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "p5.txt", P5);
    for cmd in ["solve", "check-p5free", "family", "blob"] {
        let out = p5hom(&[cmd, &inst]);
        assert_eq!(out.status.code(), Some(3), "{cmd}");
        assert!(stdout(&out).contains("induced P5 1 2 3 4 5"), "{cmd}");
    }
    // The oracle does not need P5-freeness.
    assert_eq!(p5hom(&["solve", &inst, "--algorithm", "oracle"]).status.code(), Some(0));
    let c5 = write(dir.path(), "c5.txt", C5);
    assert_eq!(stdout(&p5hom(&["check-p5free", &c5])), "P5-free\n");
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "H 2\nG 2\nGEDGE 1 3\n");
    let out = p5hom(&["solve", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    assert_eq!(p5hom(&["solve"]).status.code(), Some(2));
    assert_eq!(p5hom(&["solve", &bad, "--nope"]).status.code(), Some(2));
    assert_eq!(p5hom(&["solve", "/nonexistent/file"]).status.code(), Some(2));
    let c5 = write(dir.path(), "c5.txt", C5);
    assert_eq!(p5hom(&["solve", &c5, "--algorithm", "oracle", "--force-connected"]).status.code(), Some(2));
    assert_eq!(
        p5hom(&["difftest", "--trials", "1", "--max-n", "3", "--pattern", "Q", "--seed", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn family_and_blob_output() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "two.txt", "H 2\nHEDGE 1 2\nG 3\nGEDGE 1 2\n");
    let family = stdout(&p5hom(&["family", &inst]));
    let lines: Vec<&str> = family.lines().collect();
    assert!(lines.contains(&"1 2"));
    assert!(lines.contains(&"3"));
    let mut sorted = lines.clone();
    sorted.sort_by_key(|l| l.split(' ').map(|x| x.parse::<usize>().unwrap()).collect::<Vec<_>>());
    assert_eq!(lines, sorted);

    let blob = stdout(&p5hom(&["blob", &inst]));
    assert!(blob.lines().any(|l| l.starts_with("member ") && l.ends_with(": 1 2")));
    assert!(blob.ends_with("weight 3/1\n"));
}

#[test]
fn budget_flag_and_env() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "c5.txt", C5);
    let out = p5hom(&["solve", &inst, "--budget", "1", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("# exhaustive: false"));
    let out =
        Command::new(env!("CARGO_BIN_EXE_p5hom")).args(["solve", &inst]).env("P5HOM_BUDGET", "1").output().unwrap();
    assert!(stdout(&out).contains("# exhaustive: false"));
}

#[test]
fn gen_round_trips_through_solve() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["gen", "--family", "split", "--n", "7", "--k", "3", "--pattern", "path", "--seed", "11"];
    let text = stdout(&p5hom(&args));
    assert_eq!(text, stdout(&p5hom(&args)));
    let inst = write(dir.path(), "gen.txt", &text);
    assert_eq!(p5hom(&["solve", &inst, "--check"]).status.code(), Some(0));
    let other =
        stdout(&p5hom(&["gen", "--family", "split", "--n", "7", "--k", "3", "--pattern", "path", "--seed", "12"]));
    assert_ne!(text, other);
}

#[test]
fn difftest_passes_and_records_nothing_on_complete_patterns() {
    let dir = tempfile::tempdir().unwrap();
    let findings = dir.path().join("findings");
    let out = p5hom(&[
        "difftest",
        "--trials",
        "20",
        "--max-n",
        "6",
        "--pattern",
        "K3",
        "--seed",
        "4",
        "--parallel",
        "2",
        "--findings",
        findings.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("trials=20 ok=20 gaps=0 skipped=0 failures=0"));
    assert!(!findings.exists());
}
