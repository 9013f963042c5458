use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use barss_cli::RunResult;

fn config(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("configs").join(format!("{name}.barss"))
}

fn barss(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_barss")).args(args).output().unwrap()
}

fn with_config(command: &str, path: &Path, extra: &[&str]) -> Output {
    let mut args = vec![command, "--config", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    barss(&args)
}

fn write_temp(dir: &tempfile::TempDir, text: &str) -> PathBuf {
    let path = dir.path().join("algebra.barss");
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn axioms_on_exterior_pass() {
    let out = with_config("axioms", &config("exterior"), &["--trials", "10"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("corner sign: σ′(φ,i)"));
    assert!(text.ends_with("all axioms pass\n"));
}

#[test]
fn jacobi_violation_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let text = "[field]\nkind = rationals\n[algebra]\nn = 2\n[generators]\na = 2\nb = 5\n\
                [bracket]\n[a,a] = 2*b\n[a,b] = a^4\n[window]\nS = 2\nT = 8\nR = 1\n";
    let path = write_temp(&dir, text);
    let out = with_config("axioms", &path, &["--format", "json", "--trials", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let result: RunResult = serde_json::from_slice(&out.stdout).unwrap();
    let jacobi = result.axioms.iter().find(|a| a.id == "algebra.jacobi").unwrap();
    assert!(!jacobi.passed);
    assert_eq!(jacobi.failures[0].inputs, vec!["a", "a", "a"]);
}

#[test]
fn config_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "[field]\nkind = rationals\n[algebra]\nn = 2\nm = 3\n");
    let out = with_config("tor", &path, &[]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 5, column 1: unknown key `m` in [algebra]"), "{err}");

    let out = with_config("tor", Path::new("/nonexistent.barss"), &[]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(barss(&["frobnicate"]).status.code(), Some(2));
    let out = barss(&["diagram", "--kind", "bracket-shuffle", "--p", "3", "--q", "2", "--walk", "RUURR", "--corner", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn blow_up_exits_with_three() {
    let out = with_config("tor", &config("exterior"), &["--max-basis", "0"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr).unwrap().contains("above the limit 0"));
}

#[test]
fn tor_of_polynomial_algebra() {
    let out = with_config("tor", &config("polynomial"), &["--format", "json"]);
    assert!(out.status.success());
    let result: RunResult = serde_json::from_slice(&out.stdout).unwrap();
    let dims: Vec<Option<usize>> = result.tor.iter().map(|t| t.dimension).collect();
    let expected: Vec<Option<usize>> = (0..=12).map(|m| Some((m == 0 || m == 3) as usize)).collect();
    assert_eq!(dims, expected);
}

#[test]
fn exterior_page_two_is_diagonal() {
    let out = with_config("pages", &config("exterior"), &["--format", "json"]);
    let result: RunResult = serde_json::from_slice(&out.stdout).unwrap();
    let e2 = result.pages.iter().find(|p| p.page == "2").unwrap();
    let known: Vec<_> = e2.groups.iter().filter_map(|g| g.dimension.map(|d| (g.p, g.q, d))).collect();
    assert!(known.len() > 10);
    for (p, q, d) in known {
        assert_eq!(d, (p == q) as usize, "E^2_{{{p},{q}}}");
    }
    assert!(e2.groups.iter().any(|g| g.dimension.is_none()));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for command in ["pages", "bracket", "axioms"] {
        let args = ["--format", "json", "--seed", "3", "--trials", "5"];
        let extra: &[&str] = if command == "axioms" { &args } else { &args[..4] };
        let a = with_config(command, &config("odd-exterior"), extra);
        let b = with_config(command, &config("odd-exterior"), extra);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{command}");
    }
}

#[test]
fn json_round_trips() {
    for command in ["pages", "bracket", "tor", "axioms"] {
        let out = with_config(command, &config("sphere"), &["--format", "json"]);
        let text = String::from_utf8(out.stdout).unwrap();
        let result: RunResult = serde_json::from_str(&text).unwrap();
        assert_eq!(result.to_json(), text, "{command}");
        assert_eq!(result.conventions.first().unwrap().name, "entry weight");
    }
}

#[test]
fn out_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("tor.txt");
    let out = with_config("tor", &config("exterior"), &["--out", target.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert!(std::fs::read_to_string(target).unwrap().contains("Tor dimensions"));
}

#[test]
fn sphere_bracket_table() {
    let out = with_config("bracket", &config("sphere"), &["--format", "json"]);
    let result: RunResult = serde_json::from_slice(&out.stdout).unwrap();
    let aa = &result.brackets[0];
    assert_eq!((aa.left.as_str(), aa.right.as_str(), aa.value.as_str()), ("[a]", "[a]", "2*[b]"));
    assert_eq!(aa.target_bidegree, (1, 5));
    assert_eq!(aa.coordinates, vec!["2"]);
}
