//! Black-box tests of the binary: report schema, cache behavior, and
//! exit codes.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_stretchlie"))
}

#[test]
fn json_report_schema() {
    let out = bin()
        .args(["verify", "--source", "G2", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let reports: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 2);
    for rep in reports {
        for key in [
            "version",
            "source",
            "target",
            "node_map",
            "stretched_edge",
            "w_word",
            "checks",
            "rows",
        ] {
            assert!(rep.get(key).is_some(), "missing key {key}");
        }
        let checks = &rep["checks"];
        for key in [
            "additive_closure",
            "root_lengths",
            "biconvex",
            "psi_compat",
            "brackets",
        ] {
            assert_eq!(checks[key], true, "check {key}");
        }
        assert_eq!(rep["stretched_edge"].as_array().unwrap().len(), 2);
        for row in rep["rows"].as_array().unwrap() {
            assert!(row["node"].is_u64());
            assert!(row["weyl_dim"].is_string(), "big ints are decimal strings");
            assert!(row["elapsed_ms"].is_u64());
            assert_eq!(row["status"], "EQUAL");
            assert!(row["demazure_dim"].is_string());
        }
    }
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("dims.json");
    let run = |cache_path: &std::path::Path| {
        let out = bin()
            .args([
                "verify",
                "--source",
                "F4",
                "--cache",
                cache_path.to_str().unwrap(),
            ])
            .output()
            .unwrap();
        assert!(out.status.success());
        String::from_utf8(out.stdout).unwrap()
    };
    let cold = run(&cache);
    assert!(cache.exists(), "cache file written");
    let warm = run(&cache);
    let strip = |s: &str| {
        s.lines()
            .filter(|l| !l.contains("elapsed_ms"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&cold), strip(&warm), "deterministic modulo timings");

    // A corrupt cache must be ignored, not trusted.
    std::fs::write(&cache, "{ not json").unwrap();
    let recovered = run(&cache);
    assert_eq!(strip(&cold), strip(&recovered));
}

#[test]
fn strict_flag_fails_on_skips() {
    let out = bin()
        .args(["verify", "--source", "E8", "--strict", "--out"])
        .arg(tempfile::NamedTempFile::new().unwrap().path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn skips_allowed_by_default() {
    let out = bin()
        .args(["verify", "--source", "E8", "--max-dim", "5000", "--out"])
        .arg(tempfile::NamedTempFile::new().unwrap().path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn invalid_invocation_exits_2() {
    let out = bin().args(["verify", "--source", "Z9"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args(["demazure", "--type", "A2", "--weight", "1,1,1", "--word", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["verify", "--format", "yaml"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn demazure_and_roots_subcommands() {
    let out = bin()
        .args(["demazure", "--type", "G2", "--weight", "0,1", "--word", "1,2,1,2,1,2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "7");

    let out = bin()
        .args(["roots", "--type", "G2", "--max-height", "10"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 6);
}

#[test]
fn csv_and_md_formats() {
    let out = bin()
        .args(["verify", "--source", "G2", "--format", "csv"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("source,target,node_map,stretched_edge"));
    assert_eq!(text.lines().count(), 5, "header plus four rows");

    let out = bin()
        .args(["verify", "--source", "G2", "--format", "md"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("## G2 -> G2~1"));
    assert!(text.contains("| status |"));
}
