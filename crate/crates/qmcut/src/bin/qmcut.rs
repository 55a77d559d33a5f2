//! Command-line surface for the Quantum Max Cut pipeline: machine-readable
//! JSON on stdout, diagnostics on stderr, nonzero exit on any failure.

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qmcut::graph::{parse_graph, WeightedGraph};
use qmcut::ratio::{rat_display, rat_is_integer, rat_to_f64, Rat};
use qmcut::sdp;
use qmcut::symrep::TwoRowPartition;
use qmcut::tcd::{self, CliqueTerm, LeafProvider};
use qmcut::{verify, Error};

#[derive(Parser)]
#[command(name = "qmcut", about = "Quantum Max Cut bounds and exact values", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum EigMode {
    Exact,
    Bound,
}

#[derive(Clone, Copy, ValueEnum)]
enum Provider {
    Oracle,
    Sdp,
}

#[derive(Subcommand)]
enum Command {
    /// Tree clique decomposition and signed clique terms of a graph.
    Decompose {
        /// Graph file (edge-list format; `-` for stdin).
        graph: String,
    },
    /// Per-irrep extreme eigenvalues (exact) or bounds via the tree.
    Eig {
        graph: String,
        /// Number of extreme eigenvalues tracked per irrep.
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, value_enum, default_value_t = EigMode::Exact)]
        mode: EigMode,
        /// Bound provider for non-clique leaves (bound mode only).
        #[arg(long, value_enum, default_value_t = Provider::Oracle)]
        leaf_provider: Provider,
        /// Solver tolerance for SDP-provided bounds.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Build the level-1/2 swap relaxation and solve or export it.
    Relax {
        graph: String,
        #[arg(long, default_value_t = 1)]
        level: u8,
        /// Constrain to the two-row irrep [n-k, k].
        #[arg(long)]
        irrep: Option<usize>,
        /// Solve with the embedded interior-point method.
        #[arg(long)]
        solve: bool,
        /// Export SDPA sparse format to this path instead of solving.
        #[arg(long)]
        export: Option<String>,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Dense/matrix-free extreme eigenvalues of H_G (n <= 14).
    Oracle {
        graph: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Run the identity conformance suite.
    Verify,
}

fn read_graph(path: &str) -> Result<(WeightedGraph, String), Error> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path)?
    };
    Ok((parse_graph(&text)?, text))
}

fn digest(text: &str) -> String {
    // FNV-1a, enough to tie a report to its input
    let mut h: u64 = 0xcbf29ce484222325;
    for b in text.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    format!("{h:016x}")
}

fn rat_json(r: &Rat) -> serde_json::Value {
    if rat_is_integer(r) {
        if let Ok(v) = r.numer().try_into() {
            let v: i64 = v;
            return json!(v);
        }
    }
    json!(rat_to_f64(r))
}

fn run() -> Result<i32, Error> {
    let cli = Cli::parse();
    let start = Instant::now();
    match cli.command {
        Command::Decompose { graph } => {
            let (g, text) = read_graph(&graph)?;
            let tree = tcd::tree_clique_decomposition(&g)?;
            let terms: Vec<serde_json::Value> = tcd::signed_clique_terms(&tree)
                .into_iter()
                .map(|(sign, term)| match term {
                    CliqueTerm::Clique(v) => {
                        json!({"sign": sign, "clique": v.len(), "vertices": v})
                    }
                    CliqueTerm::Residual(h) => json!({"sign": sign, "residual": h.to_json()}),
                })
                .collect();
            let report = json!({
                "command": "decompose",
                "input_digest": digest(&text),
                "results": {
                    "tree": tree.to_json(),
                    "fully_decomposable": tcd::is_fully_decomposable(&tree),
                    "terms": terms,
                },
                "wall_ms": start.elapsed().as_millis() as u64,
            });
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            Ok(0)
        }
        Command::Eig { graph, r, mode, leaf_provider, tol } => {
            let (g, text) = read_graph(&graph)?;
            let provider = match mode {
                EigMode::Exact => LeafProvider::ExactOnly,
                EigMode::Bound => match leaf_provider {
                    Provider::Oracle => LeafProvider::Oracle { tol },
                    Provider::Sdp => LeafProvider::Sdp { tol },
                },
            };
            let report = tcd::extreme_eigenvalues(&g, r, provider)?;
            let bounds: Vec<serde_json::Value> = report
                .bounds
                .iter()
                .map(|b| {
                    json!({
                        "irrep": [b.partition.n, b.partition.k],
                        "max": b.max_eigs.iter().map(rat_json).collect::<Vec<_>>(),
                        "min": b.min_eigs.iter().map(rat_json).collect::<Vec<_>>(),
                        "exact": b.exact,
                    })
                })
                .collect();
            let out = json!({
                "command": "eig",
                "input_digest": digest(&text),
                "results": {
                    "bounds": bounds,
                    "overall_max": rat_json(&report.overall_max),
                    "overall_min": rat_json(&report.overall_min),
                    "overall_max_display": rat_display(&report.overall_max),
                    "exact": report.exact,
                },
                "wall_ms": start.elapsed().as_millis() as u64,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(0)
        }
        Command::Relax { graph, level, irrep, solve, export, tol } => {
            let (g, text) = read_graph(&graph)?;
            if level == 0 || level > 2 {
                return Err(Error::Invalid(format!(
                    "relaxation level {level} unsupported (only 1 and 2)"
                )));
            }
            let problem = match irrep {
                None => match level {
                    1 => sdp::build_level1(&g)?,
                    _ => sdp::build_level2(&g)?,
                },
                Some(k) => {
                    let part = TwoRowPartition::new(g.n(), k)?;
                    sdp::build_level_irrep(&g, level, part)?
                }
            };
            let mut results = json!({
                "graph": g.to_json(),
                "level": level,
                "matrix_dim": problem.block_dim(),
                "n_vars": problem.n_vars(),
            });
            if let Some(k) = irrep {
                results["irrep"] = json!([g.n() - k, k]);
            }
            let mut exit = 0;
            if let Some(path) = export {
                let doc = sdp::export_sdpa(&problem, true);
                std::fs::write(&path, doc)?;
                results["export"] = json!(path);
            } else if solve {
                let sol = sdp::solve(&problem, tol)?;
                results["value"] = json!(sol.value);
                results["status"] = json!(sol.status.as_str());
                results["iterations"] = json!(sol.iterations);
                if sol.status != sdp::SolveStatus::Converged {
                    exit = 2;
                }
            } else {
                return Err(Error::Invalid("pass --solve or --export PATH".into()));
            }
            let out = json!({
                "command": "relax",
                "input_digest": digest(&text),
                "results": results,
                "wall_ms": start.elapsed().as_millis() as u64,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(exit)
        }
        Command::Oracle { graph, tol } => {
            let (g, text) = read_graph(&graph)?;
            let (lo, hi) = qmcut::oracle::graph_extreme_eigenvalues(&g, tol)?;
            let out = json!({
                "command": "oracle",
                "input_digest": digest(&text),
                "results": {"n": g.n(), "min": lo, "max": hi, "tol": tol},
                "wall_ms": start.elapsed().as_millis() as u64,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(0)
        }
        Command::Verify => {
            let results = verify::run_all();
            let mut pass = true;
            for r in &results {
                pass &= r.pass;
                eprintln!(
                    "{} {}{}",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.name,
                    if r.detail.is_empty() || r.pass {
                        String::new()
                    } else {
                        format!(": {}", r.detail)
                    }
                );
            }
            let items: Vec<serde_json::Value> = results
                .iter()
                .map(|r| json!({"name": r.name, "pass": r.pass}))
                .collect();
            let out = json!({
                "command": "verify",
                "results": {"items": items, "all_pass": pass},
                "wall_ms": start.elapsed().as_millis() as u64,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(if pass { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(0) => ExitCode::SUCCESS,
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
