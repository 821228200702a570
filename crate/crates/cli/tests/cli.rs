use std::fs;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_xiphase");

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("XI_ZERO_TABLE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn value<'a>(out: &'a str, key: &str) -> Option<&'a str> {
    out.lines().find_map(|l| l.strip_prefix(key)?.strip_prefix('='))
}

const SIGN_GRID: [&str; 12] = [
    "--t-min", "5", "--t-max", "60", "--t-steps", "200", "--eps-max", "0.45", "--eps-steps", "19", "--out", "",
];

fn sign_grid(out: &str) -> Vec<String> {
    let mut v: Vec<String> = SIGN_GRID.iter().map(|s| s.to_string()).collect();
    *v.last_mut().unwrap() = out.to_string();
    v
}

#[test]
fn characters_mod_four() {
    let o = run(&["characters", "--modulus", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(value(&out, "count"), Some("2"));
    assert_eq!(out.lines().filter(|l| l.starts_with("character=")).count(), 2);
}

#[test]
fn sign_scan_is_clean_and_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("p1.csv");
    let b = dir.path().join("p8.csv");
    let mut args = vec!["--parallelism".to_string(), "1".into(), "scan".into(), "sign".into()];
    args.extend(sign_grid(a.to_str().unwrap()));
    let o = Command::new(BIN).args(&args).output().unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(value(&stdout(&o), "violations"), Some("0"));
    let mut args = vec!["scan".to_string(), "sign".into(), "--parallelism".into(), "8".into()];
    args.extend(sign_grid(b.to_str().unwrap()));
    let o = Command::new(BIN).args(&args).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let (x, y) = (fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert!(!x.is_empty());
    assert_eq!(x, y);
    let text = String::from_utf8(x).unwrap();
    assert!(text.starts_with("t,eps,l_hat,dlogmag_deps,"));
    assert_eq!(text.lines().count(), 1 + 200 * 18);
}

#[test]
fn monotone_scan_for_a_character() {
    let o = run(&[
        "scan", "monotone", "--t-min", "0", "--t-max", "20", "--t-steps", "41", "--eps-max", "0.45",
        "--eps-steps", "19", "--modulus", "3",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(value(&stdout(&o), "function"), Some("3:1"));
}

#[test]
fn injected_zero_gives_exit_two() {
    let o = run(&[
        "scan", "sign", "--zero-sum", "--inject", "0.6,20", "--inject", "0.4,20", "--t-min", "18",
        "--t-max", "22", "--t-steps", "41", "--eps-max", "0.45", "--eps-steps", "19",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let v: usize = value(&stdout(&o), "violations").unwrap().parse().unwrap();
    assert!(v > 0);
}

#[test]
fn missing_table_is_an_error() {
    let o = run(&["zeros", "ingest", "missing_file.txt"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing_file.txt"));
}

#[test]
fn bad_zero_table_in_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "14.1\nabc\n").unwrap();
    let o = Command::new(BIN)
        .args(["scan", "sign", "--zero-sum", "--t-min", "5", "--t-max", "6", "--t-steps", "2"])
        .args(["--eps-max", "0.2", "--eps-steps", "3"])
        .env("XI_ZERO_TABLE", &path)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["characters", "--modulus", "4", "--nope"]).status.code(), Some(1));
    assert_eq!(run(&["--parallelism", "0", "characters", "--modulus", "4"]).status.code(), Some(1));
    assert_eq!(run(&["zeros", "--t-min", "0"]).status.code(), Some(1));
    assert_eq!(run(&["rsz", "--t", "3"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn zeros_round_trip_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z.txt");
    let o = run(&["zeros", "--t-min", "0", "--t-max", "12", "--modulus", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(value(&out, "count"), Some("2"));
    assert!(value(&out, "zero").unwrap().starts_with("6.02094890"));
    let o = run(&["zeros", "ingest", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(value(&out, "count"), Some("2"));
    assert_eq!(value(&out, "character"), Some("4:1"));
}

#[test]
fn maxmin_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.csv");
    let o = run(&["check", "maxmin", "--t-min", "10", "--t-max", "100", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value(&stdout(&o), "violations"), Some("0"));
    let csv = fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("t,kind,"));
    assert!(csv.lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn rsz_and_figure1() {
    let o = run(&["rsz", "--t", "100"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(value(&out, "n"), Some("3"));
    assert_eq!(value(&out, "z_im"), Some("0.00000000000e0"));
    let residual: f64 = value(&out, "residual").unwrap().parse().unwrap();
    assert!(residual < 0.01);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig1.csv");
    let o = run(&["figure1", "--t-list", "100,200,500", "--eps-steps", "51", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let csv = fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("t,eps,z2"));
    assert_eq!(lines.count(), 153);
}

#[test]
fn xi_point() {
    let o = run(&["xi", "--t", "10", "--eps", "0.25"]);
    assert_eq!(o.status.code(), Some(0));
    let re: f64 = value(&stdout(&o), "xi_re").unwrap().parse().unwrap();
    assert!((re - 0.037_678_954_127_617_58).abs() < 1e-12);
    assert_eq!(run(&["xi", "--t", "1", "--modulus", "8", "--index", "2"]).status.code(), Some(1));
}
