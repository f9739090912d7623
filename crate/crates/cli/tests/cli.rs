//! Runs the `netphys` binary end to end on small files.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace { dir: tempfile::tempdir().unwrap() }
    }

    fn file(&self, name: &str, contents: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        std::fs::write(&path, contents).unwrap();
        path
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }
}

fn netphys(args: &[&str], input: &Path) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_netphys"));
    for a in args {
        if *a == "@" {
            cmd.arg(input);
        } else {
            cmd.arg(a);
        }
    }
    cmd.output().unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    let v: Value = serde_json::from_str(&stdout(out)).unwrap();
    assert_eq!(v["schema"], 1);
    v
}

fn failure(out: &Output) -> Value {
    assert!(!out.status.success());
    let v: Value = serde_json::from_str(String::from_utf8_lossy(&out.stderr).trim()).unwrap();
    assert_eq!(v["schema"], 1);
    v["error"].clone()
}

fn float(v: &Value) -> f64 {
    v.as_f64().unwrap_or_else(|| panic!("not a number: {v}"))
}

const C4: &str = "0 1\n1 2\n2 3\n3 0\n";
const P3: &str = "# P3\n0 1\n1 2\n";
const TWO_TRIANGLES: &str = "0 1\n1 2\n0 2\n2 3\n3 4\n4 5\n3 5\n";

#[test]
fn analyze_square() {
    let ws = Workspace::new();
    let c4 = ws.file("c4.txt", C4);
    let r = json(&netphys(&["analyze", "@", "--json"], &c4));
    assert_eq!(r["n"], 4);
    assert_eq!(r["m"], 4);
    assert_eq!(r["distances"]["diameter"], 2);
    assert_eq!(float(&r["clustering"]["average"]), 0.0);
    let e = std::f64::consts::E;
    let z = e * e + 2.0 + 1.0 / (e * e);
    assert!((float(&r["thermodynamics"]["z"]) - z).abs() < 1e-12 * z);
    let pr = r["centralities"]["pagerank"].as_array().unwrap();
    assert!(pr.iter().all(|p| (float(p) - 0.25).abs() < 1e-12));
}

#[test]
fn analyze_at_infinite_temperature() {
    let ws = Workspace::new();
    let path = ws.file("p5.txt", "0 1\n1 2\n2 3\n3 4\n");
    let r = json(&netphys(&["analyze", "@", "--beta", "0", "--json"], &path));
    assert!((float(&r["thermodynamics"]["entropy"]) - 5f64.ln()).abs() < 1e-12);
}

#[test]
fn analyze_text_mentions_the_basics() {
    let ws = Workspace::new();
    let text = stdout(&netphys(&["analyze", "@"], &ws.file("c4.txt", C4)));
    assert!(text.contains("nodes: 4\n"));
    assert!(text.contains("diameter: 2\n"));
}

#[test]
fn empty_file_is_a_parse_error() {
    let ws = Workspace::new();
    let err = failure(&netphys(&["analyze", "@"], &ws.file("empty.txt", "")));
    assert_eq!(err["kind"], "parse");
    assert_eq!(err["line"], 1);
}

#[test]
fn unknown_header_is_rejected_with_its_line() {
    let ws = Workspace::new();
    let err = failure(&netphys(&["analyze", "@"], &ws.file("bad.txt", "0 1\n# colour: blue\n")));
    assert_eq!(err["kind"], "parse");
    assert_eq!(err["line"], 2);
}

#[test]
fn missing_file_and_bad_usage() {
    let ws = Workspace::new();
    let missing = ws.path("missing.txt");
    assert_eq!(failure(&netphys(&["analyze", "@"], &missing))["kind"], "io");
    let out = netphys(&["frobnicate"], &missing);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(failure(&out)["kind"], "usage");
}

#[test]
fn tutte_of_the_square() {
    let ws = Workspace::new();
    let out = stdout(&netphys(&["polynomial", "@", "tutte"], &ws.file("c4.txt", C4)));
    assert_eq!(out, "x^3 + x^2 + x + y\n");
}

#[test]
fn potts_on_the_square() {
    let ws = Workspace::new();
    let r = json(&netphys(&["polynomial", "@", "potts", "--q", "2", "--K", "0.5", "--json"], &ws.file("c4.txt", C4)));
    let want = 12f64.mul_add(1f64.exp(), 2.0 * 2f64.exp() + 2.0);
    assert!((float(&r["value"]) - want).abs() < 1e-12 * want);
    let coeffs: Vec<i64> = r["coefficients"].as_array().unwrap().iter().map(|c| c.as_i64().unwrap()).collect();
    assert_eq!(coeffs, [2, 0, 12, 0, 2]);
}

#[test]
fn chromatic_of_the_square() {
    let ws = Workspace::new();
    let out = stdout(&netphys(&["polynomial", "@", "chromatic"], &ws.file("c4.txt", C4)));
    assert_eq!(out, "q^4 - 4*q^3 + 6*q^2 - 3*q\n");
}

#[test]
fn first_symanzik_of_two_triangles() {
    let ws = Workspace::new();
    let fig = ws.file("fig.txt", "0 3\n0 1\n1 2\n2 3\n0 2\nleg 1 p1\nleg 3 p2\n");
    let out = stdout(&netphys(&["polynomial", "@", "symanzik", "--first"], &fig));
    let mut terms: Vec<&str> = out.trim().split(" + ").collect();
    terms.sort();
    assert_eq!(terms, ["x1*x2", "x1*x3", "x1*x5", "x2*x4", "x2*x5", "x3*x4", "x3*x5", "x4*x5"]);
    let kirchhoff = stdout(&netphys(&["polynomial", "@", "kirchhoff"], &fig));
    assert_eq!(kirchhoff.trim().split(" + ").count(), 8);
}

#[test]
fn resistance_matrix_of_a_path() {
    let ws = Workspace::new();
    let r = json(&netphys(&["resistance", "@", "--matrix", "--json"], &ws.file("p3.txt", P3)));
    let want = [[0.0, 1.0, 2.0], [1.0, 0.0, 1.0], [2.0, 1.0, 0.0]];
    for (i, row) in r["matrix"].as_array().unwrap().iter().enumerate() {
        for (j, x) in row.as_array().unwrap().iter().enumerate() {
            assert!((float(x) - want[i][j]).abs() < 1e-12);
        }
    }
    let pair = json(&netphys(&["resistance", "@", "--pair", "0,2", "--method", "determinant", "--json"], &ws.file("p3.txt", P3)));
    assert!((float(&pair["pairs"][0]["omega"]) - 2.0).abs() < 1e-12);
}

#[test]
fn generation_is_reproducible() {
    let ws = Workspace::new();
    let (a, b) = (ws.path("a.txt"), ws.path("b.txt"));
    for out in [&a, &b] {
        let args = ["generate", "er", "--n", "100", "--p", "0.05", "--seed", "7", "--out", out.to_str().unwrap()];
        assert!(stdout(&netphys(&args, out)).is_empty());
    }
    let first = std::fs::read_to_string(&a).unwrap();
    assert_eq!(first, std::fs::read_to_string(&b).unwrap());
    assert!(first.contains("# provenance: netphys generate er n=100 p=0.05 seed=7\n"));
    let r = json(&netphys(&["analyze", "@", "--json", "--centrality", "degree"], &a));
    assert_eq!(r["n"], 100);
    for model in [["ws", "--n", "30", "--k", "4", "--p", "0.1"], ["ba", "--n", "30", "--d", "2", "--variant", "growth"]] {
        let mut args = vec!["generate"];
        args.extend(model);
        args.extend(["--seed", "11"]);
        assert_eq!(stdout(&netphys(&args, &a)), stdout(&netphys(&args, &a)));
    }
}

#[test]
fn consensus_reaches_the_mean() {
    let ws = Workspace::new();
    let g = ws.file("g.txt", TWO_TRIANGLES);
    let text = stdout(&netphys(&["dynamics", "consensus", "@", "--init", "3,-1,4,1,5,-9"], &g));
    assert!(text.starts_with("converged: true, value = 0.5\n"), "{text}");
    let r = json(&netphys(&["dynamics", "consensus", "@", "--json"], &g));
    assert_eq!(r["converged"], true);
    assert!((float(&r["value"]) - 2.5).abs() < 1e-12);
    let finals = r["summary"]["final_state"]["phi"].as_array().unwrap();
    assert!(finals.iter().all(|x| (float(x) - 2.5).abs() < 1e-7));
    let discrete = json(&netphys(&["dynamics", "consensus", "@", "--discrete", "--steps", "400", "--json"], &g));
    assert_eq!(discrete["converged"], true);
}

#[test]
fn consensus_csv_has_one_row_per_time_and_node() {
    let ws = Workspace::new();
    let csv = stdout(&netphys(&["dynamics", "consensus", "@", "--t-end", "1", "--dt", "0.5", "--csv"], &ws.file("c4.txt", C4)));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "time,node,phi");
    assert_eq!(lines.len(), 1 + 3 * 4);
}

#[test]
fn epidemics_conserve_population() {
    let ws = Workspace::new();
    let g = ws.file("g.txt", TWO_TRIANGLES);
    let sir = json(&netphys(&["dynamics", "sir", "@", "--infected", "0,4", "--json"], &g));
    let total: f64 = sir["final_mean"].as_array().unwrap().iter().map(|kv| float(&kv[1])).sum();
    assert!((total - 1.0).abs() < 1e-9);
    let sis = json(&netphys(&["dynamics", "sis", "@", "--json", "--recovery", "5"], &g));
    assert!(float(&sis["final_mean"][1][1]) < 1e-3);
    let err = failure(&netphys(&["dynamics", "sir", "@", "--infected", "9"], &g));
    assert_eq!(err["kind"], "usage");
}

#[test]
fn synchronizability_of_complete_graph() {
    let ws = Workspace::new();
    let k5: String = (0..5).flat_map(|i| (i + 1..5).map(move |j| format!("{i} {j}\n"))).collect();
    let r = json(&netphys(&["dynamics", "sync", "@", "--json"], &ws.file("k5.txt", &k5)));
    assert!((float(&r["eigenratio"]) - 1.0).abs() < 1e-10);
}

#[test]
fn communities_split_the_triangles() {
    let ws = Workspace::new();
    let g = ws.file("g.txt", TWO_TRIANGLES);
    for method in ["girvan-newman", "laplacian"] {
        let r = json(&netphys(&["communities", "@", "--method", method, "--json"], &g));
        assert_eq!(r["communities"], serde_json::json!([[0, 1, 2], [3, 4, 5]]));
        assert!((float(&r["modularity"]) - 5.0 / 14.0).abs() < 1e-12);
    }
}

#[test]
fn motif_census_and_scores() {
    let ws = Workspace::new();
    let g = ws.file("g.txt", TWO_TRIANGLES);
    let r = json(&netphys(&["motifs", "@", "--census-only", "--json"], &g));
    assert_eq!(r["census"]["triangle"], 2);
    assert_eq!(r["census"]["path"], 4);
    let scored = json(&netphys(&["motifs", "@", "--ensemble", "30", "--seed", "5", "--json"], &g));
    assert_eq!(scored["scores"].as_array().unwrap().len(), 2);
    assert_eq!(scored, json(&netphys(&["motifs", "@", "--ensemble", "30", "--seed", "5", "--json"], &g)));
    assert_eq!(failure(&netphys(&["motifs", "@", "--ensemble", "3"], &g))["kind"], "bad_params");
}

#[test]
fn floats_are_written_with_seventeen_digits() {
    let ws = Workspace::new();
    let out = stdout(&netphys(&["analyze", "@", "--json"], &ws.file("c4.txt", C4)));
    assert!(out.contains("\"average\": 0.0000000000000000e0"));
}
