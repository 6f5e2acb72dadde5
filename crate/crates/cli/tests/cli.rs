//! End-to-end runs of the `cyclocover` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cyclocover"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&o.stdout)))
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn gen(dir: &TempDir, name: &str, family: &str, params: &str) -> PathBuf {
    let p = dir.path().join(name);
    let o = run(&["gen", "--family", family, "--params", params, "--out", p.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn dem_on_c4() {
    let dir = TempDir::new().unwrap();
    let c4 = write(&dir, "c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    let o = run(&["solve", "--problem", "dem", "--method", "construct", "--graph", s(&c4), "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["size"], 2);
    assert_eq!(v["problem"], "dem");
}

#[test]
fn brute_limit_exits_3() {
    let dir = TempDir::new().unwrap();
    let p30 = gen(&dir, "p30.txt", "path", "30");
    let o = run(&["solve", "--problem", "dim", "--method", "brute", "--graph", s(&p30)]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("limit exceeded"));
}

#[test]
fn geodetic_on_path_is_the_endpoints() {
    let dir = TempDir::new().unwrap();
    let p = gen(&dir, "p7.txt", "path", "7");
    let o = run(&["solve", "--problem", "geodetic", "--graph", s(&p), "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["vertices"], serde_json::json!([0, 6]));
}

#[test]
fn solve_then_verify_round_trip() {
    let dir = TempDir::new().unwrap();
    let graphs = [
        gen(&dir, "b.txt", "bouquet", "2,5,3,2,1,2"),
        gen(&dir, "e.txt", "ears", "14,3"),
        gen(&dir, "r.txt", "random", "12,2"),
        gen(&dir, "t.txt", "theta", "1,2,3"),
    ];
    let problems = ["dim", "edim", "mdim", "doubly", "geodetic", "meg", "dem", "ipec", "ipp"];
    for g in &graphs {
        for p in problems {
            for method in ["construct", "brute"] {
                let o = run(&["solve", "--problem", p, "--method", method, "--graph", s(g)]);
                if p == "doubly" && code(&o) == 2 {
                    continue;
                }
                assert_eq!(code(&o), 0, "{p} {method} on {g:?}: {}", String::from_utf8_lossy(&o.stderr));
                let sol = write(&dir, "sol.json", &String::from_utf8_lossy(&o.stdout));
                let v = run(&["verify", "--problem", p, "--graph", s(g), "--solution", s(&sol), "--json"]);
                assert_eq!(code(&v), 0, "{p} {method} on {g:?}: {}", String::from_utf8_lossy(&v.stdout));
                assert_eq!(json(&v)["valid"], true);
            }
        }
    }
}

#[test]
fn tampered_solution_exits_1_with_witness() {
    let dir = TempDir::new().unwrap();
    let c5 = gen(&dir, "c5.txt", "cycle", "5");
    let o = run(&["solve", "--problem", "geodetic", "--graph", s(&c5), "--json"]);
    let mut v = json(&o);
    let verts = v["vertices"].as_array().unwrap()[1..].to_vec();
    v["size"] = Value::from(verts.len());
    v["vertices"] = Value::Array(verts);
    let sol = write(&dir, "bad.json", &v.to_string());
    let r = run(&["verify", "--problem", "geodetic", "--graph", s(&c5), "--solution", s(&sol)]);
    assert_eq!(code(&r), 1);
    let rep = json(&r);
    assert_eq!(rep["valid"], false);
    assert_eq!(rep["witness"]["kind"], "uncovered_vertex");
}

#[test]
fn verify_input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let c4 = gen(&dir, "c4.txt", "cycle", "4");
    let c9 = gen(&dir, "c9.txt", "cycle", "9");
    let o = run(&["solve", "--problem", "geodetic", "--graph", s(&c9), "--json"]);
    let mut v = json(&o);
    v["vertices"] = serde_json::json!([0, 8]);
    v["size"] = Value::from(2);
    let sol = write(&dir, "sol.json", &v.to_string());
    let r = run(&["verify", "--problem", "geodetic", "--graph", s(&c4), "--solution", s(&sol)]);
    assert_eq!(code(&r), 2);
    let r = run(&["verify", "--problem", "meg", "--graph", s(&c9), "--solution", s(&sol)]);
    assert_eq!(code(&r), 2, "problem mismatch");
    let junk = write(&dir, "junk.json", "not json");
    let r = run(&["verify", "--problem", "geodetic", "--graph", s(&c9), "--solution", s(&junk)]);
    assert_eq!(code(&r), 2);
}

#[test]
fn graph_input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let cases = ["3 2\n0 1\n0 5\n", "4 2\n0 1\n2 3\n", "2 1\n0 0\n", "x\n"];
    for (i, text) in cases.iter().enumerate() {
        let g = write(&dir, &format!("g{i}.txt"), text);
        let o = run(&["solve", "--problem", "dim", "--graph", s(&g)]);
        assert_eq!(code(&o), 2, "{text:?}");
    }
    let o = run(&["solve", "--problem", "nope", "--graph", "missing.txt"]);
    assert_eq!(code(&o), 2);
    let o = run(&["solve", "--problem", "dim", "--graph", "/nonexistent/file"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn doubly_needs_min_degree_two() {
    let dir = TempDir::new().unwrap();
    let p = gen(&dir, "p.txt", "path", "5");
    assert_eq!(code(&run(&["solve", "--problem", "doubly", "--graph", s(&p)])), 2);
}

#[test]
fn gen_output_parses_back() {
    let o = run(&["gen", "--family", "bouquet", "--params", "1,5,2,1,1"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("7 7\n"));
    assert_eq!(code(&run(&["gen", "--family", "bouquet", "--params", "1,4,0"])), 2);
    assert_eq!(code(&run(&["gen", "--family", "hypercube", "--params", "3"])), 2);
}

#[test]
fn seeded_gen_is_reproducible() {
    let a = run(&["gen", "--family", "random", "--params", "30,4", "--seed", "11"]);
    let b = run(&["gen", "--family", "random", "--params", "30,4", "--seed", "11"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn good_edges_json() {
    let dir = TempDir::new().unwrap();
    let c5 = gen(&dir, "c5.txt", "cycle", "5");
    let o = run(&["good-edges", "--graph", s(&c5), "--root", "0", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["edges"], serde_json::json!([[2, 3]]));
    assert_eq!(code(&run(&["good-edges", "--graph", s(&c5), "--root", "9"])), 2);
}

#[test]
fn bench_is_clean_and_byte_stable() {
    let args = ["bench", "--trials", "100", "--n", "25", "--cmax", "5", "--seed", "7", "--json"];
    let a = run(&args);
    assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stderr));
    let v = json(&a);
    assert_eq!(v["summary"]["violations"], 0);
    assert_eq!(v["summary"]["instances"], 100);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bench_tight_families_match_exact_values() {
    let o = run(&["bench", "--trials", "0", "--tight", "--families", "theta:1,1,1", "cycle:5@3", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let records = v["records"].as_array().unwrap();
    let exact = |id: &str, problem: &str| -> Value {
        let r = records.iter().find(|r| r["id"] == id).unwrap_or_else(|| panic!("{id}"));
        let p = r["problems"].as_array().unwrap().iter().find(|p| p["problem"] == problem).unwrap();
        p["exact"].clone()
    };
    // geodetic = 2k + l and ipp = 2k + l - 1 at a cut-vertex hub.
    assert_eq!(exact("bouquet[1, 5, 2, 1, 1]", "geodetic"), 4);
    assert_eq!(exact("bouquet[1, 5, 2, 1, 1]", "ipp"), 3);
    assert_eq!(exact("bouquet[2, 5, 5, 1, 1]", "geodetic"), 5);
    assert_eq!(exact("bouquet[2, 5, 5, 1, 1]", "ipp"), 4);
    assert_eq!(exact("k2k_plus_edge[3]", "geodetic"), 3);
    assert_eq!(exact("cycle[5]", "ipec"), 3);
    assert_eq!(records.len(), 8 + 3 + 4 + 2);
}

#[test]
fn bench_rejects_bad_family_spec() {
    assert_eq!(code(&run(&["bench", "--trials", "0", "--families", "cycle:x"])), 2);
}
