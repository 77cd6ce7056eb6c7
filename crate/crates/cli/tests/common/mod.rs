#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub const QUARTER_TURN_8: &str =
    "0.9238795325112867 -0.3826834323650898 0.3826834323650898 0.9238795325112867";
/// rotation(2.3)·boost(0.7)·rotation(−0.1), half-trace 0.569.
pub const ELLIPTIC: &str =
    "0.8442184794689707 -0.4115861958471358 1.8256455160314433 0.29446110590661867";
/// rotation(0.3)·boost(0.7)·rotation(−0.1), half-trace 1.249.
pub const HYPERBOLIC: &str =
    "1.9923609213986784 0.025399506095161443 0.2760151266978393 0.5054358560626536";

pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_latticeprop")
}

pub fn repo_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub fn config(name: &str) -> String {
    repo_root().join("configs").join(name).display().to_string()
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(bin())
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

pub fn split(s: &str) -> Vec<&str> {
    s.split_whitespace().collect()
}

/// A golden case: file name under tests/golden and the command line.
pub struct Golden {
    pub file: &'static str,
    pub args: Vec<String>,
}

fn case(file: &'static str, args: &str, matrix: Option<&str>) -> Golden {
    let mut v: Vec<String> = args
        .split_whitespace()
        .map(|a| match a.strip_prefix('@') {
            Some(name) => config(name),
            None => a.to_string(),
        })
        .collect();
    if let Some(m) = matrix {
        v.push("--".into());
        v.extend(m.split_whitespace().map(String::from));
    }
    Golden { file, args: v }
}

pub fn golden_cases() -> Vec<Golden> {
    vec![
        case("decompose_half_turn.json", "decompose", Some("0 -1 1 0")),
        case(
            "decompose_boost.csv",
            "decompose --format csv",
            Some("2.718281828 0 0 0.367879441"),
        ),
        case("decompose_elliptic.json", "decompose", Some(ELLIPTIC)),
        case(
            "power_eighth_turn.json",
            "power --N 8 --verify",
            Some(QUARTER_TURN_8),
        ),
        case(
            "power_million.csv",
            "power --N 1000000 --verify --format csv",
            Some(ELLIPTIC),
        ),
        case(
            "transmit_quarter_wave.csv",
            "transmit -i @quarter_wave.json",
            None,
        ),
        case(
            "transmit_homogeneous.json",
            "transmit -i @homogeneous.json --N 3 --format json",
            None,
        ),
        case("bands_delta_kp.csv", "bands -i @delta_kp.json", None),
        case(
            "bands_quarter_wave.json",
            "bands -i @quarter_wave.json --format json",
            None,
        ),
        case("bands_delta_free.csv", "bands -i @delta_free.json", None),
        case(
            "bench.json",
            "bench --N 1000,1000000,1000000000 --seed 7 --no-timings",
            None,
        ),
        case(
            "bench.csv",
            "bench --N 10,1000,100000 --seed 11 --no-timings --format csv",
            None,
        ),
    ]
}

pub enum GoldenCheck {
    Match,
    Written,
    Mismatch(String),
}

/// Runs a case twice and compares both outputs with the golden file.
/// `UPDATE_GOLDEN=1` rewrites the file instead.
pub fn check_golden(case: &Golden) -> GoldenCheck {
    let args: Vec<&str> = case.args.iter().map(String::as_str).collect();
    let first = run(&args);
    let second = run(&args);
    if !first.status.success() {
        return GoldenCheck::Mismatch(format!(
            "{}: exit {:?}: {}",
            case.file,
            first.status.code(),
            String::from_utf8_lossy(&first.stderr)
        ));
    }
    if first.stdout != second.stdout {
        return GoldenCheck::Mismatch(format!("{}: two runs differ", case.file));
    }
    let path = golden_dir().join(case.file);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &first.stdout).unwrap();
        return GoldenCheck::Written;
    }
    match std::fs::read(&path) {
        Ok(want) if want == first.stdout => GoldenCheck::Match,
        Ok(_) => GoldenCheck::Mismatch(format!("{}: output differs from golden file", case.file)),
        Err(e) => GoldenCheck::Mismatch(format!("{}: {e}", case.file)),
    }
}
