use std::path::Path;
use std::process::{Command, Output};

fn eprgame(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eprgame")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn value(text: &str, key: &str) -> f64 {
    text.lines()
        .find_map(|l| l.strip_prefix(key).map(|v| v.trim().parse().unwrap()))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
}

#[test]
fn probs_sum_line() {
    let o = eprgame(&["probs", "--preset", "pd-paper", "--gamma", "0", "--i", "1", "--j", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "sum 1.000000000000"));
}

#[test]
fn probs_at_maximal_entanglement() {
    let o = eprgame(&["probs", "--preset", "pd-paper", "--gamma", "pi/2"]);
    let s = stdout(&o);
    assert!((value(&s, "P00") - 0.5).abs() < 1e-12);
    assert!(value(&s, "P01").abs() < 1e-12);
    assert!(value(&s, "P10").abs() < 1e-12);
    assert!((value(&s, "P11") - 0.5).abs() < 1e-12);
}

#[test]
fn malformed_config_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.toml");
    std::fs::write(&path, "[payoffs]\ng00 = \"three\"\n").unwrap();
    let o = eprgame(&["probs", "--config", path.to_str().unwrap(), "--gamma", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("configuration error"));

    let o = eprgame(&["probs", "--config", "/nonexistent/game.toml", "--gamma", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = eprgame(&["probs", "--preset", "pd-paper"]);
    assert_eq!(o.status.code(), Some(2), "γ missing");
    let o = eprgame(&["probs", "--preset", "pd-paper", "--gamma", "2.0"]);
    assert_eq!(o.status.code(), Some(2), "γ out of range");
    let o = eprgame(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn config_file_round() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sh.toml");
    std::fs::write(&path, "gamma = \"90deg\"\n[payoffs]\ng00 = 10\ng01 = 0\ng10 = 8\ng11 = 7\n").unwrap();
    let o = eprgame(&["payoff", "--config", path.to_str().unwrap(), "--x", "1", "--y", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!((value(&stdout(&o), "payoff_a") - 8.5).abs() < 1e-12);
}

#[test]
fn ne_listings() {
    let s = stdout(&eprgame(&["ne", "--preset", "pd-paper", "--gamma", "0"]));
    let rows: Vec<&str> = s.lines().filter(|l| l.starts_with("pure") || l.starts_with("mixed")).collect();
    assert_eq!(rows.len(), 1);
    assert!(rows[0].contains("(0.000000000000, 0.000000000000)") && rows[0].contains("payoff_a 2.000000000000"));

    let s = stdout(&eprgame(&["ne", "--preset", "pd-paper", "--gamma", "pi/2"]));
    assert!(s.contains("pure  (0.000000000000, 0.000000000000)  payoff_a 2.500000000000"));
    assert!(s.contains("pure  (1.000000000000, 1.000000000000)  payoff_a 2.500000000000"));

    let s = stdout(&eprgame(&["ne", "--preset", "sh-paper", "--gamma", "0"]));
    assert!(s.contains("mixed (0.777777777778, 0.777777777778)"));
    assert_eq!(s.lines().filter(|l| l.starts_with("pure")).count(), 2);
}

#[test]
fn ne_with_custom_angles_uses_general_relations() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("custom.toml");
    std::fs::write(
        &path,
        "[payoffs]\ng00 = 10\ng01 = 0\ng10 = 8\ng11 = 7\n[alice]\nangles = [0.4, 0.2, 1.0]\ndirections = [0, 2.6]\n",
    )
    .unwrap();
    let o = eprgame(&["ne", "--config", path.to_str().unwrap(), "--gamma", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l.starts_with("pure")));
}

fn sweep_rows(path: &Path) -> Vec<Vec<String>> {
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

#[test]
fn sweep_csv() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let o = eprgame(&["sweep", "--preset", "pd-paper", "--grid", "101", "--out", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let bytes = std::fs::read(&a).unwrap();
    assert_eq!(bytes, std::fs::read(&b).unwrap());
    let text = String::from_utf8(bytes).unwrap();
    assert_eq!(text.lines().next(), Some("gamma,x_star,y_star,payoff_a,payoff_b,kind,strict"));
    let rows = sweep_rows(&a);
    assert!(rows.len() >= 101);
    assert!(rows.iter().all(|r| r.len() == 7));
    assert_eq!(rows.last().unwrap()[0], format!("{:.12}", std::f64::consts::FRAC_PI_2));
}

#[test]
fn sweep_tracks_stag_hunt_mixed_profile() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sh.csv");
    let o = eprgame(&["sweep", "--preset", "sh-paper", "--grid", "51", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let mixed: Vec<f64> = sweep_rows(&path).iter().filter(|r| r[5] == "mixed").map(|r| r[1].parse().unwrap()).collect();
    assert_eq!(mixed.len(), 51);
    assert!((mixed[0] - 7.0 / 9.0).abs() < 1e-12);
    assert!((mixed[50] - 0.5).abs() < 1e-12);
    assert!(mixed.windows(2).all(|w| w[1] <= w[0]));
}

#[test]
fn sweep_errors() {
    assert_eq!(eprgame(&["sweep", "--preset", "pd-paper", "--grid", "1"]).status.code(), Some(2));
    let o = eprgame(&["sweep", "--preset", "pd-paper", "--out", "/nonexistent/dir/out.csv"]);
    assert_ne!(o.status.code(), Some(0));
}

#[test]
fn transition_command() {
    let s = stdout(&eprgame(&["transition", "--preset", "pd-paper"]));
    assert!((value(&s, "analytic") - 1.230959417).abs() < 1e-9);
    assert!((value(&s, "bisection") - (1.0f64 / 3.0).acos()).abs() < 1e-9);

    let o = eprgame(&["transition", "--preset", "sh-paper"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("no transition in [0, π/2]"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("edge.toml");
    std::fs::write(&path, "[payoffs]\ng00 = 3\ng01 = 0\ng10 = 3\ng11 = 2\n").unwrap();
    let s = stdout(&eprgame(&["transition", "--config", path.to_str().unwrap()]));
    assert_eq!(value(&s, "analytic"), 0.0);
}

#[test]
fn verify_command() {
    let o = eprgame(&["verify", "--samples", "1000", "--tol", "1e-10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS"));

    let o = eprgame(&["verify", "--samples", "1", "--seed", "5", "--tol", "0"]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("FAIL") && s.contains("first failing sample 0") && s.contains("kappa2"));

    assert_eq!(eprgame(&["verify", "--samples", "0"]).status.code(), Some(2));
}

#[test]
fn commands_are_deterministic() {
    for args in [
        &["verify", "--samples", "20", "--seed", "9"][..],
        &["ne", "--preset", "sh-paper", "--gamma", "0.7"][..],
    ] {
        assert_eq!(eprgame(args).stdout, eprgame(args).stdout);
    }
}
