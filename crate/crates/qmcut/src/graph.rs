//! Simple undirected graphs with exact rational edge weights.
//!
//! Vertex labels are 1-based. Induced subgraphs (as produced by
//! [`WeightedGraph::connected_components`]) keep their original labels, so a
//! graph is a sorted label set plus an edge list over those labels.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed};
use serde_json::json;

use crate::error::{Error, Result};
use crate::ratio::{parse_rat, rat_display, rat_to_f64, Rat};

/// Structural class of a graph, used by the tree clique decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphClass {
    Clique,
    Singleton,
    TotallyDisconnected,
    Other,
}

impl GraphClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            GraphClass::Clique => "clique",
            GraphClass::Singleton => "singleton",
            GraphClass::TotallyDisconnected => "totally-disconnected",
            GraphClass::Other => "other",
        }
    }
}

/// Undirected graph with nonnegative rational edge weights (default 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    /// Sorted vertex labels (1-based).
    vertices: Vec<u32>,
    /// Edges (i, j, w) with i < j, both in `vertices`, sorted by (i, j).
    edges: Vec<(u32, u32, Rat)>,
}

impl WeightedGraph {
    /// Graph on vertices 1..=n with the given weighted edges.
    pub fn new(n: usize, edges: Vec<(u32, u32, Rat)>) -> Result<Self> {
        Self::with_vertices((1..=n as u32).collect(), edges)
    }

    /// Graph on an explicit label set.
    pub fn with_vertices(mut vertices: Vec<u32>, edges: Vec<(u32, u32, Rat)>) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.is_empty() {
            return Err(Error::Invalid("graph needs at least one vertex".into()));
        }
        let vset: BTreeSet<u32> = vertices.iter().copied().collect();
        let mut norm: Vec<(u32, u32, Rat)> = Vec::with_capacity(edges.len());
        let mut seen = BTreeSet::new();
        for (a, b, w) in edges {
            if a == b {
                return Err(Error::Invalid(format!("self-loop at vertex {a}")));
            }
            if !vset.contains(&a) || !vset.contains(&b) {
                return Err(Error::Invalid(format!("edge ({a}, {b}) leaves the vertex set")));
            }
            if w.is_negative() {
                return Err(Error::Invalid(format!(
                    "negative weight {} on edge ({a}, {b})",
                    rat_display(&w)
                )));
            }
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if !seen.insert((i, j)) {
                return Err(Error::Invalid(format!("duplicate edge ({i}, {j})")));
            }
            norm.push((i, j, w));
        }
        norm.sort_by_key(|&(i, j, _)| (i, j));
        Ok(WeightedGraph { vertices, edges: norm })
    }

    /// Unit-weight graph on 1..=n.
    pub fn unit(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        Self::new(n, edges.iter().map(|&(a, b)| (a, b, Rat::one())).collect())
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for i in 1..=n as u32 {
            for j in (i + 1)..=n as u32 {
                edges.push((i, j, Rat::one()));
            }
        }
        WeightedGraph { vertices: (1..=n as u32).collect(), edges }
    }

    /// Star on n vertices with center n.
    pub fn star(n: usize) -> Self {
        let c = n as u32;
        let edges = (1..c).map(|i| (i, c, Rat::one())).collect();
        WeightedGraph { vertices: (1..=c).collect(), edges }
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(u32, u32, Rat)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_unit_weights(&self) -> bool {
        self.edges.iter().all(|(_, _, w)| w.is_one())
    }

    pub fn total_weight(&self) -> Rat {
        self.edges.iter().map(|(_, _, w)| w.clone()).sum()
    }

    /// True when the label set is exactly 1..=n.
    pub fn is_contiguous(&self) -> bool {
        self.vertices.iter().enumerate().all(|(k, &v)| v == k as u32 + 1)
    }

    /// Same graph with vertices relabeled to 1..=n (ascending by original
    /// label); returns the original labels in relabeled order.
    pub fn relabeled(&self) -> (WeightedGraph, Vec<u32>) {
        let map: BTreeMap<u32, u32> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(k, &v)| (v, k as u32 + 1))
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|(a, b, w)| (map[a], map[b], w.clone()))
            .collect();
        let g = WeightedGraph {
            vertices: (1..=self.n() as u32).collect(),
            edges,
        };
        (g, self.vertices.clone())
    }

    /// Set-complement within the complete graph on the same vertices; all
    /// complement edges get weight 1.
    pub fn complement(&self) -> WeightedGraph {
        let present: BTreeSet<(u32, u32)> =
            self.edges.iter().map(|&(i, j, _)| (i, j)).collect();
        let mut edges = Vec::new();
        for (a, &i) in self.vertices.iter().enumerate() {
            for &j in &self.vertices[a + 1..] {
                if !present.contains(&(i, j)) {
                    edges.push((i, j, Rat::one()));
                }
            }
        }
        WeightedGraph { vertices: self.vertices.clone(), edges }
    }

    fn adjacency(&self) -> BTreeMap<u32, Vec<u32>> {
        let mut adj: BTreeMap<u32, Vec<u32>> =
            self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for (i, j, _) in &self.edges {
            adj.get_mut(i).unwrap().push(*j);
            adj.get_mut(j).unwrap().push(*i);
        }
        adj
    }

    /// Connected components as induced subgraphs with original labels,
    /// ordered by smallest contained label.
    pub fn connected_components(&self) -> Vec<WeightedGraph> {
        let adj = self.adjacency();
        let mut unseen: BTreeSet<u32> = self.vertices.iter().copied().collect();
        let mut comps = Vec::new();
        while let Some(&start) = unseen.iter().next() {
            let mut stack = vec![start];
            let mut comp = BTreeSet::new();
            unseen.remove(&start);
            comp.insert(start);
            while let Some(u) = stack.pop() {
                for &w in &adj[&u] {
                    if unseen.remove(&w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            let vertices: Vec<u32> = comp.iter().copied().collect();
            let edges = self
                .edges
                .iter()
                .filter(|(i, j, _)| comp.contains(i) && comp.contains(j))
                .cloned()
                .collect();
            comps.push(WeightedGraph { vertices, edges });
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Exact structural class; `Clique` requires all C(n,2) edges.
    pub fn classify(&self) -> GraphClass {
        let n = self.n();
        if n == 1 {
            GraphClass::Singleton
        } else if self.edges.len() == n * (n - 1) / 2 {
            GraphClass::Clique
        } else if self.edges.is_empty() {
            GraphClass::TotallyDisconnected
        } else {
            GraphClass::Other
        }
    }

    /// Vertex-disjoint union; label sets must not intersect.
    pub fn disjoint_union(&self, other: &WeightedGraph) -> Result<WeightedGraph> {
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices);
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        let before = vertices.len();
        let g = WeightedGraph::with_vertices(vertices, edges)?;
        if g.n() != before {
            return Err(Error::Invalid("vertex sets overlap in disjoint union".into()));
        }
        Ok(g)
    }

    /// `{n, edges: [[i, j, w]]}`; a `vertices` field is added when the label
    /// set is not 1..=n.
    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<serde_json::Value> = self
            .edges
            .iter()
            .map(|(i, j, w)| json!([i, j, rat_to_f64(w)]))
            .collect();
        if self.is_contiguous() {
            json!({ "n": self.n(), "edges": edges })
        } else {
            json!({ "n": self.n(), "vertices": self.vertices, "edges": edges })
        }
    }
}

/// All connected unit-weight graphs on n labeled vertices, one representative
/// per isomorphism class, in a deterministic order. Brute-force enumeration;
/// intended for n <= 6.
pub fn connected_unit_graphs(n: usize) -> Vec<WeightedGraph> {
    assert!((2..=6).contains(&n), "enumeration supported for 2 <= n <= 6");
    let pairs: Vec<(u32, u32)> = {
        let mut v = Vec::new();
        for i in 1..=n as u32 {
            for j in (i + 1)..=n as u32 {
                v.push((i, j));
            }
        }
        v
    };
    let perms = permutations(n as u32);
    let mut seen: BTreeSet<Vec<(u32, u32)>> = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 1u32..(1 << pairs.len()) {
        let edges: Vec<(u32, u32)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = WeightedGraph::unit(n, &edges).unwrap();
        if !g.is_connected() {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut img: Vec<(u32, u32)> = edges
                    .iter()
                    .map(|&(a, b)| {
                        let (x, y) = (p[a as usize - 1], p[b as usize - 1]);
                        if x < y {
                            (x, y)
                        } else {
                            (y, x)
                        }
                    })
                    .collect();
                img.sort_unstable();
                img
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(g);
        }
    }
    out
}

fn permutations(n: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for v in 1..=n {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out
}

/// Parses the edge-list format: first line `n`, then lines `i j [w]` with an
/// optional rational weight (default 1). Blank lines and `#` comments are
/// skipped.
pub fn parse_graph(text: &str) -> Result<WeightedGraph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let first = lines
        .next()
        .ok_or_else(|| Error::Parse("empty graph document".into()))?;
    let n: usize = first
        .parse()
        .map_err(|_| Error::Parse(format!("expected vertex count, got `{first}`")))?;
    if n == 0 {
        return Err(Error::Parse("vertex count must be positive".into()));
    }
    let mut edges = Vec::new();
    for line in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() < 2 || fields.len() > 3 {
            return Err(Error::Parse(format!("malformed edge line `{line}`")));
        }
        let i: u32 = fields[0]
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex in `{line}`")))?;
        let j: u32 = fields[1]
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex in `{line}`")))?;
        if i < 1 || j < 1 || i as usize > n || j as usize > n {
            return Err(Error::Invalid(format!(
                "vertex out of range in `{line}` (n = {n})"
            )));
        }
        let w = if fields.len() == 3 { parse_rat(fields[2])? } else { Rat::one() };
        edges.push((i, j, w));
    }
    WeightedGraph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat_frac;

    #[test]
    fn parses_triangle() {
        let g = parse_graph("3\n1 2\n1 3\n2 3").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_unit_weights());
        assert_eq!(g.classify(), GraphClass::Clique);
    }

    #[test]
    fn parses_rational_weight() {
        let g = parse_graph("4\n1 2 1/2").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges()[0].2, rat_frac(1, 2));
    }

    #[test]
    fn rejects_self_loop() {
        assert!(parse_graph("2\n1 1").is_err());
    }

    #[test]
    fn rejects_duplicates_and_range() {
        assert!(parse_graph("3\n1 2\n2 1").is_err());
        assert!(parse_graph("3\n1 4").is_err());
        assert!(parse_graph("3\n1 2 -1").is_err());
    }

    #[test]
    fn complement_of_clique_is_edgeless() {
        let g = WeightedGraph::complete(5);
        let c = g.complement();
        assert_eq!(c.edge_count(), 0);
        assert_eq!(c.classify(), GraphClass::TotallyDisconnected);
        assert_eq!(c.complement(), g);
    }

    #[test]
    fn complement_of_star_is_clique_plus_isolated() {
        // star with center n: complement = K_{n-1} plus isolated vertex n
        let g = WeightedGraph::star(6);
        let c = g.complement();
        let comps = c.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].vertices(), &[1, 2, 3, 4, 5]);
        assert_eq!(comps[0].classify(), GraphClass::Clique);
        assert_eq!(comps[1].vertices(), &[6]);
        assert_eq!(comps[1].classify(), GraphClass::Singleton);
    }

    #[test]
    fn five_cycle_is_self_complementary() {
        let g = WeightedGraph::unit(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap();
        let c = g.complement();
        // C5 complement is again a 5-cycle (pentagram), same class and size
        assert_eq!(c.edge_count(), 5);
        assert!(c.is_connected());
        let cc = c.complement();
        assert_eq!(cc, g);
    }

    #[test]
    fn components_partition_vertices() {
        let g = WeightedGraph::unit(5, &[(1, 2), (1, 3), (2, 3), (4, 5)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].vertices(), &[1, 2, 3]);
        assert_eq!(comps[1].vertices(), &[4, 5]);
        let total: usize = comps.iter().map(|c| c.edge_count()).sum();
        assert_eq!(total, g.edge_count());
    }

    #[test]
    fn classify_cases() {
        assert_eq!(WeightedGraph::complete(4).classify(), GraphClass::Clique);
        assert_eq!(WeightedGraph::unit(1, &[]).unwrap().classify(), GraphClass::Singleton);
        assert_eq!(
            WeightedGraph::unit(3, &[]).unwrap().classify(),
            GraphClass::TotallyDisconnected
        );
        assert_eq!(
            WeightedGraph::unit(3, &[(1, 2)]).unwrap().classify(),
            GraphClass::Other
        );
    }
}
