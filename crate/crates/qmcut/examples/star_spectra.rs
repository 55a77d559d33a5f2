//! Star graphs: the closed-form eigenvalues 2(n-k+1) and 2k per irrep
//! (n+2 in the rectangular case), against the brute-force spectrum.

use qmcut::graph::WeightedGraph;
use qmcut::oracle;
use qmcut::ratio::rat_to_f64;
use qmcut::tcd::{extreme_eigenvalues, LeafProvider};

fn main() {
    for n in 3..=9usize {
        let star = WeightedGraph::star(n);
        let report = extreme_eigenvalues(&star, 2, LeafProvider::ExactOnly).unwrap();
        print!("star {n:>2}: per-irrep values");
        let mut union: Vec<f64> = Vec::new();
        for b in &report.bounds {
            let mut vals: Vec<_> = b.max_eigs.iter().chain(&b.min_eigs).cloned().collect();
            vals.sort();
            vals.dedup();
            print!("  {}:{:?}", b.partition, vals.iter().map(rat_to_f64).collect::<Vec<_>>());
            union.extend(vals.iter().map(rat_to_f64));
        }
        union.sort_by(f64::total_cmp);
        union.dedup_by(|a, b| (*a - *b).abs() < 1e-9);

        let mut oracle_set = oracle::graph_spectrum(&star).unwrap();
        oracle_set.dedup_by(|a, b| (*a - *b).abs() < 1e-7);
        let matches = union.len() == oracle_set.len()
            && union.iter().zip(&oracle_set).all(|(a, b)| (a - b).abs() < 1e-9);
        println!("\n         union == oracle spectrum set: {matches}");
        assert!(matches);
    }
}
