//! Tree clique decomposition and exact per-irrep extreme eigenvalues.
//!
//! A connected graph is decomposed by repeatedly complementing and splitting
//! into connected components until every leaf has a connected or totally
//! disconnected complement. When all leaves are cliques, singletons, or
//! edgeless, the QMC Hamiltonian is a signed sum of clique Hamiltonians and
//! every per-irrep extreme eigenvalue is an exact integer, computed
//! bottom-up through Young branching and Minkowski combination. Otherwise
//! rigorous bounds are produced from a configurable provider for the
//! non-clique leaves.

use num_rational::BigRational;
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::{GraphClass, WeightedGraph};
use crate::ratio::Rat;
use crate::sdp;
use crate::symrep::{eta, lr_two_row, TwoRowPartition};

/// One node of the decomposition tree; the graph keeps original labels.
#[derive(Debug, Clone)]
pub struct TcdNode {
    pub id: usize,
    pub graph: WeightedGraph,
    pub children: Vec<usize>,
    pub depth: usize,
}

/// Rooted decomposition tree in BFS order (node 0 is the root, children are
/// sorted by smallest contained vertex label).
#[derive(Debug, Clone)]
pub struct TcdTree {
    nodes: Vec<TcdNode>,
}

impl TcdTree {
    pub fn nodes(&self) -> &[TcdNode] {
        &self.nodes
    }

    pub fn root(&self) -> &TcdNode {
        &self.nodes[0]
    }

    pub fn leaves(&self) -> impl Iterator<Item = &TcdNode> {
        self.nodes.iter().filter(|n| n.children.is_empty())
    }

    pub fn depth(&self) -> usize {
        self.nodes.iter().map(|n| n.depth).max().unwrap_or(0)
    }

    /// `{nodes: [{id, vertices, class, depth, children}]}` with 1-based ids.
    pub fn to_json(&self) -> serde_json::Value {
        let nodes: Vec<serde_json::Value> = self
            .nodes
            .iter()
            .map(|n| {
                json!({
                    "id": n.id + 1,
                    "vertices": n.graph.vertices(),
                    "class": n.graph.classify().as_str(),
                    "depth": n.depth,
                    "children": n.children.iter().map(|c| c + 1).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({ "nodes": nodes })
    }
}

/// Algorithm: split a node iff its complement is disconnected and not
/// totally disconnected; otherwise it is a leaf.
pub fn tree_clique_decomposition(graph: &WeightedGraph) -> Result<TcdTree> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    if !graph.has_unit_weights() {
        return Err(Error::NonUnitWeights);
    }
    let mut nodes = vec![TcdNode { id: 0, graph: graph.clone(), children: Vec::new(), depth: 0 }];
    let mut queue = vec![0usize];
    while let Some(idx) = queue.pop() {
        let complement = nodes[idx].graph.complement();
        let comps = complement.connected_components();
        let totally_disconnected = complement.edge_count() == 0;
        if comps.len() > 1 && !totally_disconnected {
            for comp in comps {
                let id = nodes.len();
                let depth = nodes[idx].depth + 1;
                nodes.push(TcdNode { id, graph: comp, children: Vec::new(), depth });
                nodes[idx].children.push(id);
                queue.push(id);
            }
            queue.sort_unstable_by(|a, b| b.cmp(a)); // process in id order
        }
    }
    Ok(TcdTree { nodes })
}

/// True iff every leaf graph is a clique, a singleton, or edgeless, which
/// is exactly when the exact integer eigenvalue path applies.
pub fn is_fully_decomposable(tree: &TcdTree) -> bool {
    tree.leaves().all(|l| l.graph.classify() != GraphClass::Other)
}

/// One signed term of the clique decomposition of H_G.
#[derive(Debug, Clone)]
pub enum CliqueTerm {
    /// Complete graph on the listed vertices.
    Clique(Vec<u32>),
    /// A non-clique leaf graph that did not decompose further.
    Residual(WeightedGraph),
}

/// Signed clique terms: every non-leaf node contributes the complete graph
/// on its vertices with sign (−1)^depth; clique leaves contribute clique
/// terms, residual leaves their own graphs; singleton and edgeless leaves
/// contribute nothing.
pub fn signed_clique_terms(tree: &TcdTree) -> Vec<(i8, CliqueTerm)> {
    let mut out = Vec::new();
    for node in tree.nodes() {
        let sign = if node.depth % 2 == 0 { 1 } else { -1 };
        if !node.children.is_empty() {
            out.push((sign, CliqueTerm::Clique(node.graph.vertices().to_vec())));
        } else {
            match node.graph.classify() {
                GraphClass::Clique => {
                    out.push((sign, CliqueTerm::Clique(node.graph.vertices().to_vec())))
                }
                GraphClass::Singleton | GraphClass::TotallyDisconnected => {}
                GraphClass::Other => out.push((sign, CliqueTerm::Residual(node.graph.clone()))),
            }
        }
    }
    out
}

/// Extreme eigenvalue lists of one irrep Hamiltonian: the r largest distinct
/// values descending and the r smallest ascending; `exact` marks provably
/// exact values (integers on the fully decomposable path) as opposed to
/// provider-derived bounds.
#[derive(Debug, Clone)]
pub struct IrrepSpectrumBounds {
    pub partition: TwoRowPartition,
    pub max_eigs: Vec<Rat>,
    pub min_eigs: Vec<Rat>,
    pub exact: bool,
}

/// Source of per-irrep bounds for leaves that are not cliques, singletons,
/// or edgeless.
#[derive(Debug, Clone, Copy)]
pub enum LeafProvider {
    /// Error out on any non-exact leaf.
    ExactOnly,
    /// Dense per-irrep spectra (leaf size <= 12, see
    /// [`crate::oracle::MAX_IRREP_N`]); numerically exact values, flagged
    /// inexact.
    Oracle { tol: f64 },
    /// Irrep-constrained level-2 relaxations (leaf size <= 8): upper bounds
    /// on maxima, lower bounds on minima; requires r = 1.
    Sdp { tol: f64 },
}

fn keep_extremes(values: impl IntoIterator<Item = Rat>, r: usize, largest: bool) -> Vec<Rat> {
    let mut v: Vec<Rat> = {
        let mut set: Vec<Rat> = values.into_iter().collect();
        set.sort();
        set.dedup();
        set
    };
    if largest {
        v.reverse();
    }
    v.truncate(r);
    v
}

/// One step of the bottom-up computation: bounds for every two-row irrep of
/// S_m from the per-child bounds, where the children are the connected
/// components of the complement (vertex counts must sum to m).
///
/// The children are consumed left to right through iterated
/// Littlewood–Richardson branching: the restriction to
/// S_{ν_1} × … × S_{ν_L} decomposes over TUPLES of child irreps whose joint
/// multiplicity is a product of two-row LR coefficients, and only realized
/// tuples may contribute. (Combining the single-subgroup branching sets
/// independently admits spurious tuples: the \[3,1\] irrep Hamiltonian of the
/// 4-cycle has spectrum {4, 8}, not {0, 4, 8}.) Partial Minkowski sums are
/// truncated to the r most extreme values per remaining-shape state, which
/// is exact since later contributions depend only on that shape.
pub fn inductive_step(
    m: usize,
    child_sizes: &[usize],
    child_bounds: &[Vec<IrrepSpectrumBounds>],
    r: usize,
) -> Result<Vec<IrrepSpectrumBounds>> {
    if child_sizes.iter().sum::<usize>() != m {
        return Err(Error::Invalid(format!(
            "child vertex counts {child_sizes:?} do not sum to {m}"
        )));
    }
    if child_sizes.len() != child_bounds.len() || child_bounds.is_empty() {
        return Err(Error::Invalid("child size/bounds length mismatch".into()));
    }
    let lookup = |bounds: &[IrrepSpectrumBounds], p: TwoRowPartition| -> Result<IrrepSpectrumBounds> {
        bounds
            .iter()
            .find(|b| b.partition == p)
            .cloned()
            .ok_or_else(move || Error::Invalid(format!("missing child irrep {p}")))
    };
    let exact = child_bounds.iter().flatten().all(|b| b.exact);

    let mut out = Vec::new();
    for lambda in TwoRowPartition::all(m) {
        let eta_l = Rat::from_integer(eta(lambda));
        // state: remaining shape -> (r smallest, r largest) partial sums
        let mut states: std::collections::BTreeMap<TwoRowPartition, (Vec<Rat>, Vec<Rat>)> =
            std::collections::BTreeMap::new();
        states.insert(lambda, (vec![Rat::from_integer(0.into())], vec![Rat::from_integer(0.into())]));
        let mut done: Option<(Vec<Rat>, Vec<Rat>)> = None;

        for (j, &nu) in child_sizes.iter().enumerate() {
            let last = j + 1 == child_sizes.len();
            let mut next: std::collections::BTreeMap<TwoRowPartition, (Vec<Rat>, Vec<Rat>)> =
                std::collections::BTreeMap::new();
            for (zeta, (smalls, larges)) in &states {
                let mut feed = |xi: TwoRowPartition,
                                target: Option<TwoRowPartition>|
                 -> Result<()> {
                    let child = lookup(&child_bounds[j], xi)?;
                    let new_smalls = keep_extremes(
                        smalls
                            .iter()
                            .flat_map(|s| child.min_eigs.iter().map(move |e| s + e)),
                        r,
                        false,
                    );
                    let new_larges = keep_extremes(
                        larges
                            .iter()
                            .flat_map(|s| child.max_eigs.iter().map(move |e| s + e)),
                        r,
                        true,
                    );
                    let slot = match target {
                        Some(zp) => next.entry(zp).or_insert_with(|| (Vec::new(), Vec::new())),
                        None => done.get_or_insert_with(|| (Vec::new(), Vec::new())),
                    };
                    slot.0 = keep_extremes(
                        slot.0.iter().cloned().chain(new_smalls),
                        r,
                        false,
                    );
                    slot.1 = keep_extremes(
                        slot.1.iter().cloned().chain(new_larges),
                        r,
                        true,
                    );
                    Ok(())
                };
                if last {
                    // the final child must carry the whole remaining shape
                    debug_assert_eq!(zeta.n, nu);
                    feed(*zeta, None)?;
                } else {
                    for xi in TwoRowPartition::all(nu) {
                        for zp in TwoRowPartition::all(zeta.n - nu) {
                            if lr_two_row(*zeta, xi, zp) {
                                feed(xi, Some(zp))?;
                            }
                        }
                    }
                }
            }
            states = next;
        }

        let (smallest_sums, largest_sums) =
            done.ok_or_else(|| Error::Invalid("empty branching in inductive step".into()))?;
        let max_eigs: Vec<Rat> = smallest_sums.iter().map(|s| &eta_l - s).collect();
        let min_eigs: Vec<Rat> = largest_sums.iter().map(|s| &eta_l - s).collect();
        out.push(IrrepSpectrumBounds { partition: lambda, max_eigs, min_eigs, exact });
    }
    Ok(out)
}

fn exact_leaf_bounds(graph: &WeightedGraph, r: usize) -> Option<Vec<IrrepSpectrumBounds>> {
    let m = graph.n();
    match graph.classify() {
        GraphClass::Singleton | GraphClass::TotallyDisconnected => Some(
            TwoRowPartition::all(m)
                .into_iter()
                .map(|p| IrrepSpectrumBounds {
                    partition: p,
                    max_eigs: vec![Rat::from_integer(0.into())],
                    min_eigs: vec![Rat::from_integer(0.into())],
                    exact: true,
                })
                .collect(),
        ),
        GraphClass::Clique => Some(
            TwoRowPartition::all(m)
                .into_iter()
                .map(|p| IrrepSpectrumBounds {
                    partition: p,
                    max_eigs: vec![Rat::from_integer(eta(p))],
                    min_eigs: vec![Rat::from_integer(eta(p))],
                    exact: true,
                })
                .collect(),
        ),
        GraphClass::Other => {
            let _ = r;
            None
        }
    }
}

fn provider_leaf_bounds(
    graph: &WeightedGraph,
    r: usize,
    provider: LeafProvider,
) -> Result<Vec<IrrepSpectrumBounds>> {
    let (g, _) = graph.relabeled();
    let m = g.n();
    match provider {
        LeafProvider::ExactOnly => Err(Error::NotFullyDecomposable),
        LeafProvider::Oracle { tol } => {
            let _ = tol;
            let spectra = crate::oracle::irrep_spectra(&g)?;
            Ok(spectra
                .into_iter()
                .map(|(p, eigs)| {
                    let rats: Vec<Rat> = eigs
                        .iter()
                        .map(|v| BigRational::from_float(*v).unwrap_or_else(|| Rat::from_integer(0.into())))
                        .collect();
                    IrrepSpectrumBounds {
                        partition: p,
                        max_eigs: keep_extremes(rats.clone(), r, true),
                        min_eigs: keep_extremes(rats, r, false),
                        exact: false,
                    }
                })
                .collect())
        }
        LeafProvider::Sdp { tol } => {
            if r != 1 {
                return Err(Error::Invalid(
                    "the SDP bound provider supports only r = 1".into(),
                ));
            }
            if m > 8 {
                return Err(Error::TooLarge(format!(
                    "leaf with {m} vertices is too large for the SDP bound provider"
                )));
            }
            let mut out = Vec::new();
            for p in TwoRowPartition::all(m) {
                let prob = sdp::build_level_irrep(&g, 2, p)?;
                let max_sol = sdp::solve(&prob, tol)?;
                let min_sol = sdp::solve(&prob.negated_objective(), tol)?;
                // a near-converged stall still yields a valid bound once
                // padded by the remaining duality gap
                let accept = |s: &sdp::SdpSolution| -> Result<f64> {
                    if s.status == sdp::SolveStatus::Converged || s.rel_gap <= 1e-5 {
                        Ok(s.rel_gap.max(0.0) * 2.0 * (1.0 + s.value.abs()))
                    } else {
                        Err(Error::Solver(format!(
                            "irrep relaxation did not converge on a {m}-vertex leaf"
                        )))
                    }
                };
                let pad_max = accept(&max_sol)?;
                let pad_min = accept(&min_sol)?;
                let to_rat = |v: f64| BigRational::from_float(v).unwrap_or_else(|| Rat::from_integer(0.into()));
                out.push(IrrepSpectrumBounds {
                    partition: p,
                    max_eigs: vec![to_rat(max_sol.value + pad_max)],
                    min_eigs: vec![to_rat(-min_sol.value - pad_min)],
                    exact: false,
                });
            }
            Ok(out)
        }
    }
}

/// Full result of the tree clique eigenvalue computation.
#[derive(Debug, Clone)]
pub struct EigReport {
    pub bounds: Vec<IrrepSpectrumBounds>,
    pub overall_max: Rat,
    pub overall_min: Rat,
    pub exact: bool,
}

/// Per-irrep extreme eigenvalues (or bounds) of H_G via the tree clique
/// decomposition; exact integers when the tree is fully decomposable.
pub fn extreme_eigenvalues(
    graph: &WeightedGraph,
    r: usize,
    provider: LeafProvider,
) -> Result<EigReport> {
    if r < 1 {
        return Err(Error::Invalid("r must be positive".into()));
    }
    let tree = tree_clique_decomposition(graph)?;
    extreme_eigenvalues_of_tree(&tree, r, provider)
}

pub fn extreme_eigenvalues_of_tree(
    tree: &TcdTree,
    r: usize,
    provider: LeafProvider,
) -> Result<EigReport> {
    let n_nodes = tree.nodes().len();
    let mut bounds: Vec<Option<Vec<IrrepSpectrumBounds>>> = vec![None; n_nodes];
    // children always have larger BFS ids, so reverse order is bottom-up
    for idx in (0..n_nodes).rev() {
        let node = &tree.nodes()[idx];
        let b = if node.children.is_empty() {
            match exact_leaf_bounds(&node.graph, r) {
                Some(b) => b,
                None => provider_leaf_bounds(&node.graph, r, provider)?,
            }
        } else {
            let sizes: Vec<usize> = node
                .children
                .iter()
                .map(|c| tree.nodes()[*c].graph.n())
                .collect();
            let child_bounds: Vec<Vec<IrrepSpectrumBounds>> = node
                .children
                .iter()
                .map(|c| bounds[*c].clone().unwrap())
                .collect();
            inductive_step(node.graph.n(), &sizes, &child_bounds, r)?
        };
        bounds[idx] = Some(b);
    }
    let root = bounds[0].take().unwrap();
    let overall_max = root
        .iter()
        .map(|b| b.max_eigs[0].clone())
        .max()
        .expect("at least one irrep");
    let overall_min = root
        .iter()
        .map(|b| b.min_eigs[0].clone())
        .min()
        .expect("at least one irrep");
    let exact = root.iter().all(|b| b.exact);
    Ok(EigReport { bounds: root, overall_max, overall_min, exact })
}



#[cfg(test)]
mod sweep_tests {
    use super::*;
    use crate::graph::connected_unit_graphs;
    use crate::ratio::rat_to_f64;

    /// Exhaustive check on all connected 6-vertex graphs: wherever the tree
    /// decomposes fully, the exact r = 2 per-irrep lists must reproduce the
    /// oracle's two most extreme distinct eigenvalues in every irrep.
    #[test]
    fn exact_sweep_six_vertices() {
        let mut decomposable = 0usize;
        for g in connected_unit_graphs(6) {
            let tree = tree_clique_decomposition(&g).unwrap();
            if !is_fully_decomposable(&tree) {
                continue;
            }
            decomposable += 1;
            let report = extreme_eigenvalues(&g, 2, LeafProvider::ExactOnly).unwrap();
            assert!(report.exact);
            let spectra = crate::oracle::irrep_spectra(&g).unwrap();
            for b in &report.bounds {
                let (_, eigs) = spectra.iter().find(|(p, _)| *p == b.partition).unwrap();
                let mut distinct = eigs.clone();
                distinct.dedup_by(|a, b| (*a - *b).abs() < 1e-7);
                let top: Vec<f64> = distinct.iter().rev().take(b.max_eigs.len()).copied().collect();
                let bottom: Vec<f64> = distinct.iter().take(b.min_eigs.len()).copied().collect();
                assert_eq!(b.max_eigs.len(), top.len(), "{:?} {}", g.edges(), b.partition);
                for (exact, oracle) in b.max_eigs.iter().zip(&top) {
                    assert!(
                        (rat_to_f64(exact) - oracle).abs() < 1e-8,
                        "{:?} {} max {exact} vs {oracle}",
                        g.edges(),
                        b.partition
                    );
                }
                for (exact, oracle) in b.min_eigs.iter().zip(&bottom) {
                    assert!(
                        (rat_to_f64(exact) - oracle).abs() < 1e-8,
                        "{:?} {} min {exact} vs {oracle}",
                        g.edges(),
                        b.partition
                    );
                }
            }
        }
        assert!(decomposable >= 20, "only {decomposable} decomposable graphs");
    }
}
