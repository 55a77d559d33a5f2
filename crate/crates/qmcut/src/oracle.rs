//! Dense brute-force ground truth: explicit swap matrices, Quantum Max Cut
//! Hamiltonians, and extreme eigenvalues for small qubit counts.
//!
//! Conventions: qubit 1 is the most significant bit of the basis index.
//! Full matrices are materialized up to n = 12 and full spectra computed up
//! to n = 10 (every swap word preserves Hamming weight, so dense spectra are
//! computed per weight sector); extreme eigenvalues are served matrix-free
//! by Lanczos up to n = 14. Beyond these caps the oracle refuses.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::ratio::{rat_to_f64, Rat};
use crate::swap::{SwapMonomial, SwapPolynomial};
use crate::symrep::{eta, TwoRowPartition};

/// Largest n for which a 2^n x 2^n matrix is materialized.
pub const MAX_DENSE_N: usize = 12;
/// Largest n for which full spectra are computed.
pub const MAX_SPECTRUM_N: usize = 10;
/// Hard cap for matrix-free extreme-eigenvalue queries.
pub const MAX_ORACLE_N: usize = 14;
/// Cap for per-irrep spectra (sector diagonalization with the clique shift).
pub const MAX_IRREP_N: usize = 12;

/// Real symmetric matrix of dimension 2^n.
#[derive(Debug, Clone)]
pub struct DenseHermitian {
    qubits: usize,
    mat: DMatrix<f64>,
}

impl DenseHermitian {
    pub fn zeros(qubits: usize) -> Result<DenseHermitian> {
        if qubits > MAX_DENSE_N {
            return Err(Error::TooLarge(format!(
                "dense 2^{qubits} matrix exceeds the n <= {MAX_DENSE_N} cap"
            )));
        }
        let dim = 1usize << qubits;
        Ok(DenseHermitian { qubits, mat: DMatrix::zeros(dim, dim) })
    }

    pub fn identity(qubits: usize) -> Result<DenseHermitian> {
        let mut h = DenseHermitian::zeros(qubits)?;
        h.mat.fill_with_identity();
        Ok(h)
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.mat
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.mat.iter().fold(0.0, |a, v| a.max(v.abs()))
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        let m = &self.mat;
        for r in 0..m.nrows() {
            for c in (r + 1)..m.ncols() {
                if (m[(r, c)] - m[(c, r)]).abs() > tol {
                    return false;
                }
            }
        }
        true
    }

    pub fn add_scaled(&mut self, other: &DenseHermitian, c: f64) {
        self.mat.zip_apply(&other.mat, |a, b| *a += c * b);
    }

    pub fn mul(&self, other: &DenseHermitian) -> DenseHermitian {
        DenseHermitian { qubits: self.qubits, mat: &self.mat * &other.mat }
    }
}

/// Applies a qubit-position permutation (destination map, 0-based) to a
/// basis index.
fn apply_perm(n: usize, dst: &[u8], b: usize) -> usize {
    let mut out = 0usize;
    for (q, &d) in dst.iter().enumerate() {
        let bit = (b >> (n - 1 - q)) & 1;
        out |= bit << (n - 1 - d as usize);
    }
    out
}

/// The permutation matrix exchanging tensor factors i and j.
pub fn swap_matrix(n: usize, i: usize, j: usize) -> Result<DenseHermitian> {
    if i == j || i < 1 || j < 1 || i > n || j > n {
        return Err(Error::Invalid(format!("bad swap indices ({i}, {j}) for n = {n}")));
    }
    let m = SwapMonomial::gen(n, i, j)?;
    evaluate_polynomial(&SwapPolynomial::monomial(m))
}

/// Substitutes swap matrices into a polynomial. Each word is a basis-index
/// permutation, so no matrix products are formed.
pub fn evaluate_polynomial(p: &SwapPolynomial) -> Result<DenseHermitian> {
    let n = p.ambient_n();
    let mut h = DenseHermitian::zeros(n)?;
    let dim = h.dim();
    for (m, c) in p.terms() {
        let dst = m.permutation();
        let cf = rat_to_f64(c);
        for b in 0..dim {
            h.mat[(apply_perm(n, &dst, b), b)] += cf;
        }
    }
    Ok(h)
}

/// Dense QMC Hamiltonian Σ 2w_{ij}(I − SW_{ij}).
pub fn hamiltonian_matrix(graph: &WeightedGraph) -> Result<DenseHermitian> {
    let (g, _) = graph.relabeled();
    evaluate_polynomial(&SwapPolynomial::hamiltonian(&g)?)
}

fn weight_sectors(n: usize) -> Vec<Vec<usize>> {
    let mut sectors = vec![Vec::new(); n + 1];
    for b in 0..(1usize << n) {
        sectors[b.count_ones() as usize].push(b);
    }
    sectors
}

/// Weighted index-permutation terms of a Hamiltonian-like operator.
struct PermOperator {
    n: usize,
    terms: Vec<(f64, Vec<u8>)>,
    diag: f64,
}

impl PermOperator {
    fn hamiltonian(graph: &WeightedGraph) -> PermOperator {
        let (g, _) = graph.relabeled();
        let n = g.n();
        let mut terms = Vec::new();
        let mut diag = 0.0;
        for (i, j, w) in g.edges() {
            let wf = rat_to_f64(w);
            diag += 2.0 * wf;
            let mut dst: Vec<u8> = (0..n as u8).collect();
            dst.swap(*i as usize - 1, *j as usize - 1);
            terms.push((-2.0 * wf, dst));
        }
        PermOperator { n, terms, diag }
    }

    fn apply(&self, v: &[f64], out: &mut [f64]) {
        for (o, x) in out.iter_mut().zip(v) {
            *o = self.diag * x;
        }
        for (c, dst) in &self.terms {
            for (b, x) in v.iter().enumerate() {
                out[apply_perm(self.n, dst, b)] += c * x;
            }
        }
    }

    /// Dense block of the operator on one weight sector.
    fn sector_block(&self, sector: &[usize]) -> DMatrix<f64> {
        let pos: std::collections::HashMap<usize, usize> =
            sector.iter().enumerate().map(|(k, &b)| (b, k)).collect();
        let mut m = DMatrix::zeros(sector.len(), sector.len());
        for (k, &b) in sector.iter().enumerate() {
            m[(k, k)] += self.diag;
            for (c, dst) in &self.terms {
                let b2 = apply_perm(self.n, dst, b);
                m[(pos[&b2], k)] += c;
            }
        }
        m
    }
}

/// Full spectrum of the QMC Hamiltonian of a graph, ascending (n <= 10).
pub fn graph_spectrum(graph: &WeightedGraph) -> Result<Vec<f64>> {
    let n = graph.n();
    if n > MAX_SPECTRUM_N {
        return Err(Error::TooLarge(format!(
            "full spectrum supported for n <= {MAX_SPECTRUM_N}, got {n}"
        )));
    }
    let op = PermOperator::hamiltonian(graph);
    let mut eigs = Vec::with_capacity(1 << n);
    for sector in weight_sectors(n) {
        let block = op.sector_block(&sector);
        let es = SymmetricEigen::new(block);
        eigs.extend(es.eigenvalues.iter().copied());
    }
    eigs.sort_by(f64::total_cmp);
    Ok(eigs)
}

/// Extreme eigenvalues of the QMC Hamiltonian of a graph within `tol`.
/// Dense per-sector diagonalization for n <= 10, matrix-free Lanczos above
/// (n <= 14).
pub fn graph_extreme_eigenvalues(graph: &WeightedGraph, tol: f64) -> Result<(f64, f64)> {
    let n = graph.n();
    if n <= MAX_SPECTRUM_N {
        let eigs = graph_spectrum(graph)?;
        return Ok((eigs[0], eigs[eigs.len() - 1]));
    }
    if n > MAX_ORACLE_N {
        return Err(Error::TooLarge(format!(
            "oracle supports n <= {MAX_ORACLE_N}, got {n}"
        )));
    }
    let op = PermOperator::hamiltonian(graph);
    let dim = 1usize << n;
    lanczos_extremes(dim, |v, out| op.apply(v, out), tol)
}

/// Extreme eigenvalues of an explicit matrix within `tol`; dense solver for
/// dim <= 2^10, Lanczos on the stored matrix above.
pub fn extreme_eigenvalues(h: &DenseHermitian, tol: f64) -> Result<(f64, f64)> {
    let dim = h.dim();
    if dim <= (1 << MAX_SPECTRUM_N) {
        let es = SymmetricEigen::new(h.mat.clone());
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for v in es.eigenvalues.iter() {
            lo = lo.min(*v);
            hi = hi.max(*v);
        }
        Ok((lo, hi))
    } else {
        lanczos_extremes(dim, |v, out| {
            let vv = DVector::from_column_slice(v);
            let r = &h.mat * vv;
            out.copy_from_slice(r.as_slice());
        }, tol)
    }
}

/// Lanczos with full reorthogonalization; converges on both spectrum ends.
fn lanczos_extremes(
    dim: usize,
    apply: impl Fn(&[f64], &mut [f64]),
    tol: f64,
) -> Result<(f64, f64)> {
    let tol = tol.max(1e-13);
    let max_iter = 400.min(dim);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x51ab5);
    let mut v: Vec<f64> = (0..dim).map(|_| rng.gen::<f64>() - 0.5).collect();
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter_mut().for_each(|x| *x /= norm);

    let mut basis: Vec<Vec<f64>> = vec![v.clone()];
    let mut alphas: Vec<f64> = Vec::new();
    let mut betas: Vec<f64> = Vec::new();
    let mut w = vec![0.0; dim];

    for k in 0..max_iter {
        apply(&basis[k], &mut w);
        let alpha: f64 = w.iter().zip(&basis[k]).map(|(a, b)| a * b).sum();
        alphas.push(alpha);
        // full reorthogonalization, twice for stability
        for _ in 0..2 {
            for q in &basis {
                let d: f64 = w.iter().zip(q).map(|(a, b)| a * b).sum();
                w.iter_mut().zip(q).for_each(|(a, b)| *a -= d * b);
            }
        }
        let beta = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if k >= 2 || beta < 1e-12 {
            let m = alphas.len();
            let mut t = DMatrix::zeros(m, m);
            for i in 0..m {
                t[(i, i)] = alphas[i];
                if i + 1 < m {
                    t[(i, i + 1)] = betas[i];
                    t[(i + 1, i)] = betas[i];
                }
            }
            let es = SymmetricEigen::new(t);
            let mut lo = (f64::INFINITY, 0usize);
            let mut hi = (f64::NEG_INFINITY, 0usize);
            for (idx, ev) in es.eigenvalues.iter().enumerate() {
                if *ev < lo.0 {
                    lo = (*ev, idx);
                }
                if *ev > hi.0 {
                    hi = (*ev, idx);
                }
            }
            let res = |idx: usize| beta * es.eigenvectors[(m - 1, idx)].abs();
            if beta < 1e-12 || (res(lo.1) < tol && res(hi.1) < tol) {
                return Ok((lo.0, hi.0));
            }
        }
        if beta < 1e-12 {
            break;
        }
        betas.push(beta);
        let next: Vec<f64> = w.iter().map(|x| x / beta).collect();
        basis.push(next);
    }
    Err(Error::Solver("Lanczos did not converge within the iteration budget".into()))
}

/// Full spectra of the QMC irrep Hamiltonians of a graph, one list per
/// two-row partition (n <= 10).
///
/// Uses that H_{K_n} is central: the spectrum of H + c·H_{K_n} splits into
/// bands c·η_k + [0, ‖H‖] once c is large enough, attributing every
/// eigenvalue of H to its irrep.
pub fn irrep_spectra(graph: &WeightedGraph) -> Result<Vec<(TwoRowPartition, Vec<f64>)>> {
    let n = graph.n();
    if n > MAX_IRREP_N {
        return Err(Error::TooLarge(format!(
            "irrep spectra supported for n <= {MAX_IRREP_N}, got {n}"
        )));
    }
    let (g, _) = graph.relabeled();
    let hnorm = 4.0 * rat_to_f64(&g.total_weight());
    let c = hnorm + 8.0;
    let op_h = PermOperator::hamiltonian(&g);
    let clique = WeightedGraph::complete(n);
    let op_k = PermOperator::hamiltonian(&clique);

    let parts = TwoRowPartition::all(n);
    let etas: Vec<f64> = parts
        .iter()
        .map(|p| rat_to_f64(&Rat::from_integer(eta(*p))))
        .collect();
    let mut buckets: Vec<Vec<f64>> = vec![Vec::new(); parts.len()];

    for sector in weight_sectors(n) {
        let mut block = op_h.sector_block(&sector);
        block += op_k.sector_block(&sector);
        // block currently holds H + H_K; rescale the clique part to c
        let extra = op_k.sector_block(&sector) * (c - 1.0);
        block += extra;
        let es = SymmetricEigen::new(block);
        for ev in es.eigenvalues.iter() {
            let mut assigned = false;
            for (k, e) in etas.iter().enumerate() {
                let t = ev - c * e;
                if (-1.0..=hnorm + 1.0).contains(&t) {
                    buckets[k].push(t);
                    assigned = true;
                    break;
                }
            }
            if !assigned {
                return Err(Error::Solver(format!(
                    "irrep bucketing failed for eigenvalue {ev}"
                )));
            }
        }
    }
    for b in &mut buckets {
        b.sort_by(f64::total_cmp);
    }
    Ok(parts.into_iter().zip(buckets).collect())
}


#[cfg(test)]
mod equivalence_tests {
    use super::*;
    use crate::ratio::rat_i64;
    use crate::swap::monomial::{Gen, SwapMonomial};
    use crate::swap::pauli::fingerprint;
    use rand::{Rng, SeedableRng};

    /// evaluate_polynomial(p) = 0 iff fingerprint(p) is empty, on random
    /// polynomials (independent consistency check of the isomorphism).
    #[test]
    fn evaluation_zero_iff_fingerprint_empty() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in 3..=6usize {
            let gens = Gen::alphabet(n);
            for trial in 0..40 {
                let mut p = SwapPolynomial::zero(n);
                for _ in 0..rng.gen_range(1..=4) {
                    let deg = rng.gen_range(0..=3);
                    let word: Vec<Gen> =
                        (0..deg).map(|_| gens[rng.gen_range(0..gens.len())]).collect();
                    p.add_term(SwapMonomial::new(n, word).unwrap(), rat_i64(rng.gen_range(-2..=2)));
                }
                // make half the trials exact ideal members
                let p = if trial % 2 == 0 {
                    p.sub(&crate::swap::rewrite::reduce_rewrite(&p)).unwrap()
                } else {
                    p
                };
                let zero_matrix = evaluate_polynomial(&p).unwrap().max_abs_entry() < 1e-12;
                let zero_fp = fingerprint(&p).is_empty();
                assert_eq!(zero_matrix, zero_fp, "n={n} trial={trial}");
            }
        }
    }

    /// Per-irrep complement shift: eigs(H^λ_{G^c}) = η_λ − eigs(H^λ_G) for
    /// unit-weight G on n <= 6 with both sides from the dense oracle.
    #[test]
    fn complement_shift_per_irrep() {
        let graphs = [
            WeightedGraph::star(5),
            WeightedGraph::unit(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap(),
            WeightedGraph::unit(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap(),
        ];
        for g in graphs {
            let spectra_g = irrep_spectra(&g).unwrap();
            let spectra_c = irrep_spectra(&g.complement()).unwrap();
            for ((p, eig_g), (p2, eig_c)) in spectra_g.iter().zip(&spectra_c) {
                assert_eq!(p, p2);
                let e = crate::ratio::rat_to_f64(&Rat::from_integer(eta(*p)));
                let mut shifted: Vec<f64> = eig_g.iter().map(|v| e - v).collect();
                shifted.sort_by(f64::total_cmp);
                assert_eq!(shifted.len(), eig_c.len());
                for (a, b) in shifted.iter().zip(eig_c) {
                    assert!((a - b).abs() < 1e-8, "{p}: {a} vs {b}");
                }
            }
        }
    }
}
