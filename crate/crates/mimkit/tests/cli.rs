//! End-to-end checks of the command-line interface, including exit codes.

use std::path::PathBuf;
use std::process::Command;

fn mimkit_bin() -> PathBuf {
    let mut p = PathBuf::from(env!("CARGO_BIN_EXE_mimkit"));
    if !p.exists() {
        p = PathBuf::from("target/debug/mimkit");
    }
    p
}

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(mimkit_bin())
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).to_string(),
        String::from_utf8_lossy(&out.stderr).to_string(),
        out.status.code().unwrap_or(-1),
    )
}

fn tempdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "mimkit-cli-{}-{:?}",
        std::process::id(),
        std::thread::current().id()
    ));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn classify_lines() {
    let (out, _, code) = run(&["classify", "2P2", "C4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("unbounded 6.2(vii)"), "{out}");

    let (out, _, code) = run(&["classify", "P4", "K5", "--format", "records"]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict bounded"));
    assert!(out.contains("case 6.1(i)"));

    let (out, _, code) = run(&["classify", "2P2", "K1,3+P1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("open problem-1"), "{out}");
}

#[test]
fn mimw_of_running_example() {
    let dir = tempdir();
    let path = dir.join("fig2.edgelist");
    let g = mimkit::decomposition::figure2_graph();
    std::fs::write(&path, mimkit::formats::edgelist_to_string(&g)).unwrap();
    let (out, _, code) = run(&["mimw", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1");
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn gen_wall_and_count() {
    let (out, _, code) = run(&["gen", "wall", "4", "4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("30 38\n"), "{out}");
}

#[test]
fn gen_witness_and_pipeline() {
    let dir = tempdir();
    let g_path = dir.join("wall.edgelist");
    let (out, _, code) = run(&[
        "gen",
        "wall",
        "3",
        "3",
        "--out",
        g_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{out}");
    // 1-subdivide everything: the split witnesses' first pipeline stage.
    let (out, _, code) = run(&[
        "transform",
        "subdivide-all:1",
        "--input",
        g_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("35 38\n"), "{out}"); // 16+19 vertices, 2*19 edges
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn decompose_certificate_line() {
    let dir = tempdir();
    let path = dir.join("net.edgelist");
    let net = mimkit::named::graph_from_name("net").unwrap();
    std::fs::write(&path, mimkit::formats::edgelist_to_string(&net)).unwrap();
    let out_path = dir.join("net.bdecomp");
    let (out, _, code) = run(&[
        "decompose",
        "--class",
        "2p2-k13",
        "--input",
        path.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("width 1 bound 1"), "{out}");
    // The emitted decomposition round-trips and evaluates to the width.
    let d = mimkit::formats::bdecomp_from_str(&std::fs::read_to_string(&out_path).unwrap())
        .unwrap();
    assert_eq!(
        mimkit::decomposition::mimw_of_decomposition(&net, &d).unwrap(),
        1
    );
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn enumerate_counts() {
    let (out, _, code) = run(&["enumerate", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 11);
}

#[test]
fn cutmim_cli() {
    let dir = tempdir();
    let path = dir.join("c4.edgelist");
    let c4 = mimkit::named::graph_from_name("C4").unwrap();
    std::fs::write(&path, mimkit::formats::edgelist_to_string(&c4)).unwrap();
    let (out, _, code) = run(&[
        "cutmim",
        "--input",
        path.to_str().unwrap(),
        "--side",
        "0,1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "2");
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn distinct_exit_codes() {
    // Parse error -> 2.
    let (_, err, code) = run(&["classify", "Q9", "P2"]);
    assert_eq!(code, 2, "{err}");
    // Size cap -> 3.
    let dir = tempdir();
    let path = dir.join("big.edgelist");
    let big = mimkit::named::complete_graph(12);
    std::fs::write(&path, mimkit::formats::edgelist_to_string(&big)).unwrap();
    let (_, err, code) = run(&["mimw", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 3, "{err}");
    // Class violation -> 4.
    let path2 = dir.join("2p2.edgelist");
    let g = mimkit::named::graph_from_name("2P2").unwrap();
    std::fs::write(&path2, mimkit::formats::edgelist_to_string(&g)).unwrap();
    let (_, err, code) = run(&[
        "decompose",
        "--class",
        "2p2-k13",
        "--input",
        path2.to_str().unwrap(),
    ]);
    assert_eq!(code, 4, "{err}");
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn lab_cli_quick_suite() {
    let dir = tempdir();
    let (out, _, code) = run(&[
        "lab",
        "thm47-alg",
        "--trials",
        "1",
        "--max-n",
        "5",
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("thm47-alg: pass"), "{out}");
    assert!(dir.join("index.txt").exists());
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn graph6_interop() {
    let dir = tempdir();
    let path = dir.join("g.g6");
    std::fs::write(&path, "DQc\n").unwrap();
    let (out, _, code) = run(&[
        "mimw",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "graph6",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1");
    let _ = std::fs::remove_dir_all(dir);
}
