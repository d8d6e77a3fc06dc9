use std::fs;
use std::path::{Path, PathBuf};

use syzygy::cli::run;
use tempfile::TempDir;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("syzygy").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn worked(dir: &Path) -> String {
    write(dir, "worked.ideal", "ring 3\ngen x1^2*x2^2*x3\ngen x1^2*x3^2\ngen x2*x3^2\n")
        .to_string_lossy()
        .into_owned()
}

#[test]
fn betti_table_ends_with_pd() {
    let dir = TempDir::new().unwrap();
    let ideal = worked(dir.path());
    let (code, out, _) = call(&["betti", "--ideal", &ideal]);
    assert_eq!(code, 0);
    assert!(out.trim_end().ends_with("pd = 2"), "{out}");
    let (code, oracle, _) = call(&["betti", "--ideal", &ideal, "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(oracle, out);
}

#[test]
fn twin_of_example() {
    let dir = TempDir::new().unwrap();
    let (code, out, _) = call(&["twin", "--ideal", &worked(dir.path())]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("x1^2*x2^2, x3^2"));
    assert!(out.contains("field = q"));
}

#[test]
fn principal_pd() {
    let dir = TempDir::new().unwrap();
    let p = write(dir.path(), "principal.ideal", "ring 4\ngen x1^3*x4\n");
    let (code, out, _) = call(&["pd", "--ideal", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("pd = 1"));
}

#[test]
fn json_round_trips_and_is_stable() {
    let dir = TempDir::new().unwrap();
    let ideal = worked(dir.path());
    for field in ["q", "zp:32003"] {
        let (code, a, _) = call(&["betti", "--ideal", &ideal, "--json", "--field", field]);
        assert_eq!(code, 0);
        let (_, b, _) = call(&["betti", "--ideal", &ideal, "--json", "--field", field]);
        assert_eq!(a, b);
        let json: syzygy::minimize::BettiJson = serde_json::from_str(&a).unwrap();
        assert_eq!(json.field.to_string(), field);
        let ctx = syzygy::VarContext::new(3).unwrap();
        let table = syzygy::BettiTable::from_json(&json, &ctx).unwrap();
        assert_eq!(serde_json::to_string_pretty(&table.to_json()).unwrap() + "\n", a);
    }
}

#[test]
fn every_subcommand_reports_the_field() {
    let dir = TempDir::new().unwrap();
    let ideal = worked(dir.path());
    let runs: Vec<Vec<&str>> = vec![
        vec!["taylor", "--ideal", &ideal],
        vec!["taylor", "--stats", "--ideal", &ideal],
        vec!["minimize", "--ideal", &ideal],
        vec!["betti", "--ideal", &ideal],
        vec!["pd", "--ideal", &ideal],
        vec!["twin", "--ideal", &ideal],
        vec!["restrict", "--ideal", &ideal, "--mono", "x1^2*x3^2"],
        vec!["compress", "--twin", "--ideal", &ideal],
    ];
    for mut args in runs {
        args.extend(["--field", "zp:5"]);
        let (code, out, err) = call(&args);
        assert_eq!(code, 0, "{args:?}: {err}");
        assert!(out.contains("zp:5"), "{args:?}: {out}");
    }
}

#[test]
fn minimize_trace_lines() {
    let (code, out, _) = call(&["minimize", "--trace", "--gens", "x*y, y*z, x*z", "--ring", "x y z"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 1);
    let step: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(step["s"], 3);
    assert!(step["source"].is_array() && step["target"].is_array());
}

#[test]
fn restrict_and_compress() {
    let dir = TempDir::new().unwrap();
    let ideal = worked(dir.path());
    let (_, out, _) = call(&["restrict", "--ideal", &ideal, "--mono", "x1^2*x3^2"]);
    assert_eq!(out.lines().next(), Some("x1^2*x3^2"));
    let (_, out, _) = call(&["restrict", "--ideal", &ideal, "--mono", "x1"]);
    assert_eq!(out.lines().next(), Some("0"));
    let (code, _, err) = call(&["compress", "--ideal", &ideal]);
    assert_eq!(code, 2);
    assert!(err.contains("twin"), "{err}");
    let (code, out, _) = call(&["compress", "--twin", "--ideal", &ideal]);
    assert_eq!(code, 0);
    assert!(out.starts_with("y1*y2, y3\nalpha = (2, 2, 2)"), "{out}");
}

#[test]
fn random_output_parses_and_is_deterministic() {
    let args = ["random", "--n", "5", "--q", "7", "--max-deg", "4", "--seed", "3"];
    let (code, a, _) = call(&args);
    assert_eq!(code, 0);
    assert_eq!(call(&args).1, a);
    let ideal = syzygy::parse_ideal(&a).unwrap();
    assert!(ideal.q() <= 7);
    let (code, _, err) = call(&["random", "--n", "2", "--q", "9", "--max-deg", "2", "--squarefree"]);
    assert_eq!(code, 2);
    assert!(err.contains("candidate"), "{err}");
}

#[test]
fn error_messages_are_distinct() {
    let dir = TempDir::new().unwrap();
    let (code, _, missing) = call(&["betti", "--ideal", "/nonexistent/x.ideal"]);
    assert_eq!(code, 2);
    assert!(missing.contains("cannot read"));
    let bad = write(dir.path(), "bad.ideal", "ring 2\ngen x1^-1\n");
    let (code, _, parse) = call(&["betti", "--ideal", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(parse.contains("line 2"), "{parse}");
    let (code, _, infeasible) = call(&["verify", "t31", "--n", "3", "--k", "3"]);
    assert_eq!(code, 2);
    assert_ne!(missing, parse);
    assert_ne!(parse, infeasible);
}

#[test]
fn verify_subcommands() {
    let dir = TempDir::new().unwrap();
    let ideal = worked(dir.path());
    let (code, a, _) = call(&["verify", "t31", "--n", "4", "--k", "1", "--trials", "20", "--seed", "5"]);
    assert_eq!(code, 0);
    assert_eq!(call(&["verify", "t31", "--n", "4", "--k", "1", "--trials", "20", "--seed", "5"]).1, a);
    let report: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(report["theorem"], "t31");
    assert_eq!(report["passed"], 20);

    let (code, _, _) = call(&["verify", "t46", "--n", "3", "--trials", "20", "--field", "zp:32003"]);
    assert_eq!(code, 0);
    for which in ["c42", "t45", "compress"] {
        let out = dir.path().join(format!("{which}.json"));
        let (code, stdout, _) = call(&["verify", which, "--ideal", &ideal, "--out", out.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert!(stdout.is_empty());
        let report: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
        assert_eq!(report["theorem"], which);
        assert_eq!(report["failures"].as_array().unwrap().len(), 0);
    }
    let (code, _, _) = call(&["verify", "c42", "--trials", "10", "--seed", "1"]);
    assert_eq!(code, 0);
}
