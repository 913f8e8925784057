use std::fs;
use std::path::Path;
use std::process::Command;

use serde_json::Value;

use galoisdraw::cli::{dispatch, EXIT_ERROR, EXIT_OK, EXIT_UNKNOWN, EXIT_USAGE};

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["galoisdraw"];
    argv.extend_from_slice(args);
    let code = dispatch(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn read_json(p: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn spectral_report_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("h12.json");
    let r = run(&[
        "spectral",
        "--graph",
        "h12",
        "--matrix",
        "adjacency",
        "--json",
        path_str(&json),
    ]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.out.contains("Galois group: S_6"));
    let doc = read_json(&json);
    assert_eq!(doc["command"], "spectral");
    assert_eq!(doc["certificates"].as_array().unwrap().len(), 2);

    let v = run(&["verify", path_str(&json)]);
    assert_eq!(v.code, EXIT_OK, "{}{}", v.out, v.err);
}

#[test]
fn tampered_certificates_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("fr.json");
    assert_eq!(run(&["fr-p3", "--json", path_str(&json)]).code, EXIT_OK);
    let doc = read_json(&json);

    let edits: [(&str, fn(&mut Value)); 4] = [
        ("prime", |c| c["primes"]["ncycle"]["p"] = Value::from(11)),
        ("power", |c| {
            let p = c["primes"]["transposition"]["power"].as_u64().unwrap();
            c["primes"]["transposition"]["power"] = Value::from(p + 1);
        }),
        ("discriminant", |c| {
            let d: i128 = c["discriminant"].as_str().unwrap().parse().unwrap();
            c["discriminant"] = Value::from((d + 1).to_string());
        }),
        ("conclusion", |c| c["conclusion"] = Value::from("S_6")),
    ];
    for (name, edit) in edits {
        let mut bad = doc.clone();
        edit(&mut bad["certificates"][0]);
        let path = dir.path().join(format!("{}.json", name));
        fs::write(&path, serde_json::to_string_pretty(&bad).unwrap()).unwrap();
        let v = run(&["verify", path_str(&path)]);
        assert_eq!(v.code, EXIT_ERROR, "{} edit accepted: {}", name, v.out);
    }
}

#[test]
fn svg_figures_draw_every_circle_and_edge() {
    let dir = tempfile::tempdir().unwrap();
    let pack = dir.path().join("bipyr7.svg");
    let r = run(&["pack", "--graph", "bipyr:7", "--svg", path_str(&pack)]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let svg = fs::read_to_string(&pack).unwrap();
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
    assert_eq!(svg.matches("<circle").count(), 9);

    let layout = dir.path().join("cycle7.svg");
    let r = run(&["layout", "--graph", "cycle:7", "--svg", path_str(&layout)]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let svg = fs::read_to_string(&layout).unwrap();
    assert_eq!(svg.matches("<circle").count(), 7);
    assert_eq!(svg.matches("<line").count(), 7);
}

#[test]
fn packing_text_output_reloads() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("pack.txt");
    let r = run(&["pack", "--graph", "pack:2:5", "--out", path_str(&out)]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let text = fs::read_to_string(&out).unwrap();
    let rows: Vec<Vec<f64>> = text
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().map(|t| t.parse().unwrap()).collect())
        .collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r.len() == 3 && r[2] > 0.0));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["certify", "--poly", "1,0,0,0,1"]).code, EXIT_UNKNOWN);
    assert_eq!(run(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(run(&["charpoly", "--graph", "cycle:7"]).code, EXIT_USAGE);
    assert_eq!(
        run(&["charpoly", "--graph", "cycle:7:9", "--matrix", "adjacency"]).code,
        EXIT_ERROR
    );
    assert_eq!(
        run(&[
            "charpoly",
            "--graph",
            "cycle:7",
            "--matrix",
            "laplacian",
            "--rho",
            "1"
        ])
        .code,
        EXIT_ERROR
    );
    assert_eq!(
        run(&["lowerbound", "--graph", "cycle:8", "--model", "quadratic"]).code,
        EXIT_UNKNOWN
    );
    assert_eq!(
        run(&["lowerbound", "--graph", "cycle:7", "--model", "quadratic"]).code,
        EXIT_OK
    );
    assert_eq!(
        run(&["verify", "/nonexistent/report.json"]).code,
        EXIT_ERROR
    );
    assert_eq!(run(&["--help"]).code, EXIT_OK);
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let args = |p: &Path| {
        vec![
            "spectral",
            "--graph",
            "y9",
            "--matrix",
            "rlaplacian",
            "--rho",
            "2",
            "--json",
        ]
        .into_iter()
        .map(String::from)
        .chain([p.display().to_string()])
        .collect::<Vec<_>>()
    };
    let ra = run(&args(&a).iter().map(String::as_str).collect::<Vec<_>>());
    let rb = run(&args(&b).iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(ra.code, EXIT_OK);
    assert_eq!(ra.out, rb.out);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn seed_flag_and_environment() {
    let bin = env!("CARGO_BIN_EXE_galoisdraw");
    let base = Command::new(bin)
        .args(["certify", "--poly=-1,-1,0,0,0,1"])
        .output()
        .unwrap();
    assert!(base.status.success());
    let flagged = Command::new(bin)
        .args(["--seed", "99", "certify", "--poly=-1,-1,0,0,0,1"])
        .output()
        .unwrap();
    let env = Command::new(bin)
        .env("GALOISDRAW_SEED", "99")
        .args(["certify", "--poly=-1,-1,0,0,0,1"])
        .output()
        .unwrap();
    assert_eq!(base.stdout, flagged.stdout);
    assert_eq!(base.stdout, env.stdout);
    let bad = Command::new(bin)
        .env("GALOISDRAW_SEED", "many")
        .args(["certify", "--poly=-1,-1,0,0,0,1"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_ERROR));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("GALOISDRAW_SEED"));
}

#[test]
fn eliminate_respects_power_precedence() {
    let r = run(&["eliminate", "--p", "a^2 - b", "--q", "a - b^2"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.contains("Res_a = b^4 - b"), "{}", r.out);
    let r = run(&["eliminate", "--p", "a + b", "--q", "1 - a^2b"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.contains("Res_a = -b^3 + 1"), "{}", r.out);
}

#[test]
fn scans_print_their_tables() {
    let r = run(&["scan", "sophie-germain", "--limit", "30"]);
    assert_eq!(r.code, EXIT_OK);
    for p in ["2", "3", "5", "11", "23", "29"] {
        assert!(
            r.out.split(|c: char| !c.is_ascii_digit()).any(|t| t == p),
            "{} missing",
            p
        );
    }
}
