//! End-to-end tests of the qroc binary: exit codes, flags, determinism,
//! and the file formats it reads and writes.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qroc"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qroc-cli-{name}-{}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn write_state(dir: &Path, name: &str, diag: &[f64]) -> PathBuf {
    let n = diag.len();
    let rows: Vec<String> = (0..n)
        .map(|i| {
            let cells: Vec<String> = (0..n)
                .map(|j| format!("[{}, 0.0]", if i == j { diag[i] } else { 0.0 }))
                .collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    let path = dir.join(name);
    fs::write(
        &path,
        format!("{{\"dim\": {n}, \"matrix\": [{}]}}", rows.join(", ")),
    )
    .unwrap();
    path
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("process was killed by a signal")
}

#[test]
fn classical_succeeds_and_writes_the_artifact_set() {
    let dir = tmp("classical");
    let p = dir.join("p.json");
    let q = dir.join("q.json");
    fs::write(&p, "[0.7, 0.3]").unwrap();
    fs::write(&q, "[0.4, 0.6]").unwrap();

    let out = bin()
        .args(["classical"])
        .arg(&p)
        .arg(&q)
        .arg("--out")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    for name in ["optimal_curve.csv", "region.csv", "results.json", "fig1.svg"] {
        assert!(dir.join(name).is_file(), "missing {name}");
    }

    // every emitted curve point is inside the unit square
    let curve = fs::read_to_string(dir.join("optimal_curve.csv")).unwrap();
    let mut lines = curve.lines();
    assert_eq!(lines.next(), Some("fp,tp"));
    for line in lines {
        for cell in line.split(',') {
            let v: f64 = cell.parse().unwrap();
            assert!((0.0..=1.0).contains(&v), "out-of-range value {v}");
        }
    }
}

#[test]
fn runs_are_byte_identical_for_equal_seeds() {
    let base = tmp("determinism");
    let rho_p = write_state(&base, "rho_p.json", &[0.6, 0.3, 0.1]);
    let rho_n = write_state(&base, "rho_n.json", &[0.2, 0.3, 0.5]);

    let mut artifacts: Vec<Vec<(String, Vec<u8>)>> = Vec::new();
    for run in ["a", "b"] {
        let dir = base.join(run);
        fs::create_dir_all(&dir).unwrap();
        let out = bin()
            .args(["general"])
            .arg(&rho_p)
            .arg(&rho_n)
            .args(["--seed", "11", "--samples-per-rank", "40"])
            .arg("--out")
            .arg(&dir)
            .output()
            .unwrap();
        assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));

        let mut files: Vec<(String, Vec<u8>)> = fs::read_dir(&dir)
            .unwrap()
            .map(|e| e.unwrap())
            .map(|e| (e.file_name().into_string().unwrap(), fs::read(e.path()).unwrap()))
            .collect();
        files.sort();
        assert!(!files.is_empty());
        artifacts.push(files);
    }
    let b = artifacts.pop().unwrap();
    let a = artifacts.pop().unwrap();
    assert_eq!(a.len(), b.len());
    for ((name_a, bytes_a), (name_b, bytes_b)) in a.iter().zip(&b) {
        assert_eq!(name_a, name_b);
        assert_eq!(bytes_a, bytes_b, "{name_a} differs between runs");
    }
}

#[test]
fn format_flag_limits_artifact_families() {
    let dir = tmp("format");
    let p = dir.join("p.json");
    let q = dir.join("q.json");
    fs::write(&p, "[0.7, 0.3]").unwrap();
    fs::write(&q, "[0.4, 0.6]").unwrap();

    let out = bin()
        .args(["classical"])
        .arg(&p)
        .arg(&q)
        .args(["--format", "svg"])
        .arg("--out")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let names: Vec<String> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    assert!(names.iter().any(|n| n.ends_with(".svg")));
    assert!(
        !names.iter().any(|n| n.ends_with(".csv") || n == "results.json"),
        "non-SVG artifacts emitted under --format svg: {names:?}"
    );
}

#[test]
fn parse_and_validation_failures_exit_2_and_name_the_file() {
    let dir = tmp("errors");

    // unreadable path
    let missing = dir.join("missing.json");
    let out = bin()
        .args(["classical"])
        .arg(&missing)
        .arg(&missing)
        .arg("--out")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    assert!(
        String::from_utf8_lossy(&out.stderr).contains("missing.json"),
        "stderr does not name the offending file"
    );

    // distribution that does not normalize
    let bad = dir.join("bad.json");
    fs::write(&bad, "[0.9, 0.9]").unwrap();
    let good = dir.join("good.json");
    fs::write(&good, "[0.5, 0.5]").unwrap();
    let out = bin()
        .args(["classical"])
        .arg(&bad)
        .arg(&good)
        .arg("--out")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);

    // non-Hermitian state matrix
    let rho = dir.join("rho.json");
    fs::write(
        &rho,
        "{\"dim\": 2, \"matrix\": [[[0.5, 0.0], [0.3, 0.0]], [[0.0, 0.0], [0.5, 0.0]]]}",
    )
    .unwrap();
    let other = write_state(&dir, "other.json", &[0.5, 0.5]);
    let out = bin()
        .args(["general"])
        .arg(&rho)
        .arg(&other)
        .arg("--out")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);

    // unknown arguments are a usage error (clap exits 2)
    let out = bin().args(["classical", "--no-such-flag"]).output().unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn infeasible_unambiguous_pair_exits_3_but_reports() {
    let dir = tmp("infeasible");
    let rho_p = write_state(&dir, "rho_p.json", &[0.6, 0.4]);
    let rho_n = write_state(&dir, "rho_n.json", &[0.3, 0.7]);

    let out = bin()
        .args(["unambiguous"])
        .arg(&rho_p)
        .arg(&rho_n)
        .arg("--out")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(code(&out), 3, "full-rank pair must be infeasible");
    // the feasibility verdict is still written for inspection
    assert!(dir.join("feasibility.json").is_file());
}

#[test]
fn pure_and_scan_commands_produce_their_tables() {
    let dir = tmp("pure");
    let out = bin()
        .args(["pure", "0.64", "1.82", "--format", "csv"])
        .arg("--out")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(fs::read_dir(&dir).unwrap().count() > 0);

    let dir = tmp("scan");
    let out = bin()
        .args(["bhatta-scan", "11", "--format", "csv", "--tol", "1e-7"])
        .arg("--out")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let scan = fs::read_to_string(dir.join("bhatta_scan.csv")).unwrap();
    assert_eq!(scan.lines().count(), 12, "header plus one row per grid point");
}
