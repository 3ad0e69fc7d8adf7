mod common;

use std::path::PathBuf;
use std::process::Command;

use common::*;
use planar_canon::canonizer::canon_planar;
use planar_canon::cli_io::{parse_canon, parse_edge_list, run, shuffled, write_edge_list};

struct Output {
    code: i32,
    out: String,
    err: String,
}

fn call(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("planar-canon").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Output {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

/// A file under the system temp directory, removed on drop.
struct TempFile(PathBuf);

impl TempFile {
    fn new(name: &str, contents: &str) -> Self {
        let path = std::env::temp_dir().join(format!("planar-canon-{}-{name}", std::process::id()));
        std::fs::write(&path, contents).unwrap();
        TempFile(path)
    }

    fn path(&self) -> &str {
        self.0.to_str().unwrap()
    }
}

impl Drop for TempFile {
    fn drop(&mut self) {
        let _ = std::fs::remove_file(&self.0);
    }
}

fn fixture_arg(name: &str) -> String {
    fixture_path(name).to_str().unwrap().to_string()
}

#[test]
fn canon_prints_the_canon_text() {
    let r = call(&["canon", &fixture_arg("two_pairs.txt")]);
    assert_eq!(r.code, 0);
    assert!(r.out.starts_with("planar-canon v1 n=6 m=9\n"));
    let parsed = parse_canon(&r.out).unwrap();
    assert_eq!(parsed, canon_planar(&fixture("two_pairs.txt")).unwrap());
    assert!(r.err.is_empty());
}

#[test]
fn iso_accepts_a_relabeling() {
    let g = fixture("two_pairs.txt");
    let (h, _) = shuffled(&g, &mut rng(3));
    let file = TempFile::new("relabeled.txt", &write_edge_list(&h));
    let r = call(&["iso", &fixture_arg("two_pairs.txt"), file.path()]);
    assert_eq!((r.code, r.out.as_str()), (0, "ISOMORPHIC\n"));
}

#[test]
fn iso_rejects_counter_fixtures_and_traces_counters() {
    let r = call(&[
        "--trace",
        "iso",
        &fixture_arg("counters_g.txt"),
        &fixture_arg("counters_h.txt"),
    ]);
    assert_eq!((r.code, r.out.as_str()), (1, "NOT-ISOMORPHIC\n"));
    assert!(
        r.err
            .contains("graph=1 block=0 root=0-1 class=2 counter=(2,0)"),
        "{}",
        r.err
    );
    assert!(
        r.err
            .contains("graph=2 block=0 root=0-1 class=2 counter=(1,1)"),
        "{}",
        r.err
    );
}

#[test]
fn quiet_suppresses_the_verdict() {
    let r = call(&[
        "--quiet",
        "iso",
        &fixture_arg("counters_g.txt"),
        &fixture_arg("counters_h.txt"),
    ]);
    assert_eq!((r.code, r.out.as_str()), (1, ""));
}

#[test]
fn decompose_lists_pairs_and_components() {
    let r = call(&["decompose", &fixture_arg("two_pairs.txt")]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("block=0 pair=0 endpoints=0,1"), "{}", r.out);
    assert!(r.out.contains("endpoints=2,3"));
    assert_eq!(
        r.out.lines().filter(|l| l.contains(" component=")).count(),
        4
    );
    assert!(r.out.contains("kind=3-connected vertices=0,1,2,3"));
    let dot = call(&["decompose", "--dot", &fixture_arg("two_pairs.txt")]);
    assert_eq!(dot.code, 0);
    assert!(dot.out.starts_with("graph"));
    assert!(dot.out.trim_end().ends_with('}'));
}

#[test]
fn gen_is_deterministic_and_parseable() {
    let a = call(&[
        "gen",
        "--n",
        "12",
        "--seed",
        "9",
        "--profile",
        "3-connected",
    ]);
    let b = call(&[
        "gen",
        "--n",
        "12",
        "--seed",
        "9",
        "--profile",
        "3-connected",
    ]);
    assert_eq!(a.code, 0);
    assert_eq!(a.out, b.out);
    let g = parse_edge_list(&a.out).unwrap();
    assert_eq!(g.vertex_count(), 12);
    assert_eq!(call(&["gen", "--n", "5", "--profile", "wheel"]).code, 2);
}

#[test]
fn malformed_input_exits_2() {
    let file = TempFile::new("bad.txt", "3 2\n0 1\n1 x\n");
    let r = call(&["canon", file.path()]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("error"));
    assert_eq!(call(&["canon", "/nonexistent/graph.txt"]).code, 2);
    assert_eq!(call(&["frobnicate"]).code, 2);
}

#[test]
fn non_planar_input_exits_3() {
    let mut k5 = String::from("5 10\n");
    for u in 0..5 {
        for v in u + 1..5 {
            k5.push_str(&format!("{u} {v}\n"));
        }
    }
    let file = TempFile::new("k5.txt", &k5);
    let r = call(&["canon", file.path()]);
    assert_eq!(r.code, 3);
    assert!(r.out.is_empty());
}

#[test]
fn selftest_passes_on_small_orders() {
    let r = call(&["selftest", "--n", "5"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("n=5 classes=20"));
    assert!(r.out.contains("result=PASS"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_planar-canon");
    let status = Command::new(bin)
        .args([
            "iso",
            &fixture_arg("counters_g.txt"),
            &fixture_arg("counters_g.txt"),
        ])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let status = Command::new(bin)
        .args([
            "iso",
            &fixture_arg("counters_g.txt"),
            &fixture_arg("counters_h.txt"),
        ])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(1));
    assert_eq!(String::from_utf8_lossy(&status.stdout), "NOT-ISOMORPHIC\n");
}
