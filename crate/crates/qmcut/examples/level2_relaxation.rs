//! Level-1 and level-2 swap relaxations against the dense oracle on small
//! graphs: the hierarchy is monotone and level-2 is numerically exact here.

use qmcut::graph::{connected_unit_graphs, WeightedGraph};
use qmcut::oracle;
use qmcut::sdp::{build_level1, build_level2, solve};

fn run(name: &str, g: &WeightedGraph) {
    let (_, hi) = oracle::graph_extreme_eigenvalues(g, 1e-10).unwrap();
    let v1 = solve(&build_level1(g).unwrap(), 1e-8).unwrap();
    let v2 = solve(&build_level2(g).unwrap(), 1e-8).unwrap();
    println!(
        "  {name:<14} oracle {hi:>12.8}  level-1 {:>12.8}  level-2 {:>12.8}  (err {:.1e})",
        v1.value,
        v2.value,
        (v2.value - hi).abs()
    );
}

fn main() {
    println!("named graphs:");
    run("triangle", &WeightedGraph::complete(3));
    run("star 5", &WeightedGraph::star(5));
    run("path 4", &WeightedGraph::unit(4, &[(1, 2), (2, 3), (3, 4)]).unwrap());
    run("cycle 5", &WeightedGraph::unit(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap());
    run(
        "worked 6",
        &WeightedGraph::unit(
            6,
            &[(1, 2), (1, 6), (1, 4), (2, 4), (2, 6), (3, 4), (3, 6), (4, 6), (5, 6)],
        )
        .unwrap(),
    );

    println!("\nall connected 4-vertex graphs:");
    for (i, g) in connected_unit_graphs(4).iter().enumerate() {
        run(&format!("graph {i}"), g);
    }
}
