//! Relaxations constrained to a two-row irrep via the linear substitution
//! for the last generator, and their use as per-irrep eigenvalue bounds.

use qmcut::graph::WeightedGraph;
use qmcut::oracle;
use qmcut::sdp::{build_level_irrep, solve};
use qmcut::symrep::{eta, TwoRowPartition};

fn main() {
    println!("cliques: the constrained objective collapses to eta(n, k)");
    for n in 3..=5usize {
        let g = WeightedGraph::complete(n);
        for p in TwoRowPartition::all(n) {
            let prob = build_level_irrep(&g, 1, p).unwrap();
            let sol = solve(&prob, 1e-9).unwrap();
            println!(
                "  K{n} in {:>7}: level-1 value {:>12.8}  eta = {}",
                p.to_string(),
                sol.value,
                eta(p)
            );
        }
    }

    println!("\npath on 4 vertices: level-2 per-irrep bounds vs oracle spectra");
    let g = WeightedGraph::unit(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
    let spectra = oracle::irrep_spectra(&g).unwrap();
    for (p, eigs) in spectra {
        let prob = build_level_irrep(&g, 2, p).unwrap();
        let hi = solve(&prob, 1e-9).unwrap().value;
        let lo = -solve(&prob.negated_objective(), 1e-9).unwrap().value;
        println!(
            "  {:>7}: sdp [{lo:>11.7}, {hi:>11.7}]  oracle [{:>11.7}, {:>11.7}]",
            p.to_string(),
            eigs.first().unwrap(),
            eigs.last().unwrap()
        );
    }
}
