//! Tree clique decomposition of two graphs: a fully decomposable 6-vertex
//! example and a 10-vertex graph with a residual leaf.

use qmcut::graph::WeightedGraph;
use qmcut::tcd::{is_fully_decomposable, signed_clique_terms, tree_clique_decomposition, CliqueTerm};

fn report(name: &str, g: &WeightedGraph) {
    let tree = tree_clique_decomposition(g).unwrap();
    println!("{name}: {} nodes, depth {}", tree.nodes().len(), tree.depth());
    for node in tree.nodes() {
        println!(
            "  v{:<2} depth {}  vertices {:?}  [{}]{}",
            node.id + 1,
            node.depth,
            node.graph.vertices(),
            node.graph.classify().as_str(),
            if node.children.is_empty() { "  (leaf)" } else { "" },
        );
    }
    println!("  fully decomposable: {}", is_fully_decomposable(&tree));
    print!("  H_G = ");
    let mut first = true;
    for (sign, term) in signed_clique_terms(&tree) {
        let s = if sign > 0 { "+" } else { "-" };
        match term {
            CliqueTerm::Clique(v) => print!("{}{} H(K{})", if first { "" } else { " " }, s, v.len()),
            CliqueTerm::Residual(h) => {
                print!("{}{} H(residual on {:?})", if first { "" } else { " " }, s, h.vertices())
            }
        }
        first = false;
    }
    println!("\n");
}

fn main() {
    let worked = WeightedGraph::unit(
        6,
        &[(1, 2), (1, 6), (1, 4), (2, 4), (2, 6), (3, 4), (3, 6), (4, 6), (5, 6)],
    )
    .unwrap();
    report("6-vertex worked example", &worked);

    let ten = WeightedGraph::unit(
        10,
        &[
            (1, 2), (1, 3), (1, 4), (1, 10), (2, 3), (2, 10), (3, 10),
            (4, 5), (4, 6), (4, 10), (5, 6), (5, 10), (6, 10),
            (7, 8), (7, 9), (7, 10), (8, 9), (8, 10), (9, 10),
        ],
    )
    .unwrap();
    report("10-vertex example with a residual leaf", &ten);

    report("star on 7 vertices", &WeightedGraph::star(7));
}
