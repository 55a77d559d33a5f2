//! End-to-end tests of the qmcut binary: JSON on stdout, diagnostics on
//! stderr, exit codes per contract.

use std::io::Write;
use std::process::{Command, Output};

fn qmcut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmcut"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_graph(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const WORKED: &str = "6\n1 2\n1 6\n1 4\n2 4\n2 6\n3 4\n3 6\n4 6\n5 6\n";

#[test]
fn decompose_worked_example() {
    let f = write_graph(WORKED);
    let out = qmcut(&["decompose", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    let v = json_of(&out);
    let terms = v["results"]["terms"].as_array().unwrap();
    let signs_sizes: Vec<(i64, i64)> = terms
        .iter()
        .map(|t| (t["sign"].as_i64().unwrap(), t["clique"].as_i64().unwrap()))
        .collect();
    assert_eq!(signs_sizes, vec![(1, 6), (-1, 5), (1, 4), (-1, 3), (1, 2)]);
    assert_eq!(v["results"]["tree"]["nodes"].as_array().unwrap().len(), 9);
    assert_eq!(v["results"]["fully_decomposable"], true);
}

#[test]
fn decompose_k5_single_node() {
    let f = write_graph("5\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n");
    let out = qmcut(&["decompose", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["results"]["tree"]["nodes"].as_array().unwrap().len(), 1);
}

#[test]
fn decompose_rejects_disconnected() {
    let f = write_graph("4\n1 2\n3 4\n");
    let out = qmcut(&["decompose", f.path().to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("disconnected"));
}

#[test]
fn eig_worked_example_exact() {
    let f = write_graph(WORKED);
    let out = qmcut(&["eig", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["results"]["overall_max"], 18);
    assert_eq!(v["results"]["exact"], true);
    let b33 = v["results"]["bounds"]
        .as_array()
        .unwrap()
        .iter()
        .find(|b| b["irrep"] == serde_json::json!([6, 3]))
        .unwrap();
    assert_eq!(b33["max"][0], 18);
}

#[test]
fn eig_star8_overall_max() {
    let f = write_graph("8\n1 8\n2 8\n3 8\n4 8\n5 8\n6 8\n7 8\n");
    let out = qmcut(&["eig", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["results"]["overall_max"], 16);
}

#[test]
fn eig_exact_mode_fails_on_residual_leaf() {
    // the 10-vertex example whose decomposition keeps a 6-vertex residual
    let f = write_graph(
        "10\n1 2\n1 3\n1 4\n1 10\n2 3\n2 10\n3 10\n4 5\n4 6\n4 10\n5 6\n5 10\n6 10\n7 8\n7 9\n7 10\n8 9\n8 10\n9 10\n",
    );
    let out = qmcut(&["eig", f.path().to_str().unwrap()]);
    assert!(!out.status.success());

    let out = qmcut(&["eig", f.path().to_str().unwrap(), "--mode", "bound"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["results"]["exact"], false);
    let max = v["results"]["overall_max"].as_f64().unwrap();
    assert!(max.is_finite() && max > 0.0);
}

#[test]
fn relax_triangle_level2_and_irrep() {
    let f = write_graph("3\n1 2\n1 3\n2 3\n");
    let out = qmcut(&["relax", f.path().to_str().unwrap(), "--level", "2", "--solve"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert!((v["results"]["value"].as_f64().unwrap() - 6.0).abs() < 1e-5);
    assert_eq!(v["results"]["status"], "converged");

    let f4 = write_graph("4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    let out = qmcut(&[
        "relax", f4.path().to_str().unwrap(), "--level", "1", "--irrep", "2", "--solve",
    ]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert!((v["results"]["value"].as_f64().unwrap() - 12.0).abs() < 1e-6);
    assert_eq!(v["results"]["irrep"], serde_json::json!([2, 2]));
}

#[test]
fn relax_export_writes_sdpa_file() {
    let f = write_graph("3\n1 2\n1 3\n2 3\n");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tri.dat-s");
    let out = qmcut(&[
        "relax", f.path().to_str().unwrap(), "--level", "1", "--export",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let doc = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = doc.lines().filter(|l| !l.starts_with('*')).collect();
    assert_eq!(lines[1], "1"); // one block
    assert_eq!(lines[2], "4"); // block size
}

#[test]
fn relax_rejects_level_three() {
    let f = write_graph("3\n1 2\n");
    let out = qmcut(&["relax", f.path().to_str().unwrap(), "--level", "3", "--solve"]);
    assert!(!out.status.success());
}

#[test]
fn oracle_k3_and_refusal() {
    let f = write_graph("3\n1 2\n1 3\n2 3\n");
    let out = qmcut(&["oracle", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert!(v["results"]["min"].as_f64().unwrap().abs() < 1e-9);
    assert!((v["results"]["max"].as_f64().unwrap() - 6.0).abs() < 1e-9);

    let mut big = String::from("20\n");
    for i in 1..20 {
        big.push_str(&format!("{} {}\n", i, i + 1));
    }
    let f = write_graph(&big);
    let out = qmcut(&["oracle", f.path().to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("too large"));
}

#[test]
fn verify_passes_and_reports_items() {
    let out = qmcut(&["verify"]);
    assert!(out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.lines().filter(|l| l.starts_with("PASS")).count() >= 12);
    let v = json_of(&out);
    assert_eq!(v["results"]["all_pass"], true);
}

#[test]
fn parse_error_exits_nonzero() {
    let f = write_graph("2\n1 1\n");
    let out = qmcut(&["oracle", f.path().to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("self-loop"));
}
