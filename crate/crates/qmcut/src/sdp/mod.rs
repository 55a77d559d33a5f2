//! Moment-matrix SDP relaxations of Quantum Max Cut over the swap algebra:
//! level-1 and level-2 builders, the two-row-irrep constrained variants,
//! SDPA export, and an embedded interior-point solver.

pub mod sdpa;
pub mod solver;

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::ratio::{rat_to_f64, Rat};
use crate::swap::basis::{basis_b2, derive_basis, Expander};
use crate::swap::monomial::{Gen, SwapMonomial};
use crate::swap::poly::SwapPolynomial;
use crate::symrep::{eta_hat, TwoRowPartition};

pub use sdpa::{export_sdpa, parse_sdpa, SdpaFile};
pub use solver::{solve, solve_numeric, SdpSolution, SolveStatus};

/// Sparse affine expression c0 + Σ c_i · var_i with exact rational
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AffineExpr {
    pub constant: Rat,
    /// (variable index, coefficient), sorted by index, no zero coefficients.
    pub terms: Vec<(usize, Rat)>,
}

impl AffineExpr {
    pub fn constant_only(c: Rat) -> AffineExpr {
        AffineExpr { constant: c, terms: Vec::new() }
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        let mut v = rat_to_f64(&self.constant);
        for (i, c) in &self.terms {
            v += rat_to_f64(c) * x[*i];
        }
        v
    }
}

// Internal sparse row: index 0 is the constant, index i >= 1 is variable i-1.
type Row = BTreeMap<usize, Rat>;

fn row_add(row: &mut Row, idx: usize, c: &Rat) {
    if c.is_zero() {
        return;
    }
    match row.entry(idx) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get() + c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// Exact Gauss elimination with back-substitution; pivots on the largest
/// variable index so grlex-large pseudomoments are expressed through small
/// ones.
#[derive(Default)]
struct Eliminator {
    subs: BTreeMap<usize, Row>, // pivot var index (>= 1) -> rhs row (x_p = rhs)
    infeasible: bool,
}

impl Eliminator {
    fn substitute(&self, row: &mut Row) {
        while let Some((p, coeff)) = row
            .iter()
            .rev()
            .find(|(k, _)| **k >= 1 && self.subs.contains_key(*k))
            .map(|(k, v)| (*k, v.clone()))
        {
            row.remove(&p);
            let rhs = &self.subs[&p];
            for (k, c) in rhs {
                row_add(row, *k, &(&coeff * c));
            }
        }
    }

    /// Adds the constraint `row == 0`.
    fn add_constraint(&mut self, mut row: Row) {
        self.substitute(&mut row);
        let pivot = row.keys().rev().find(|&&k| k >= 1).copied();
        match pivot {
            None => {
                if !row.is_empty() {
                    self.infeasible = true;
                }
            }
            Some(p) => {
                let a = row.remove(&p).unwrap();
                let rhs: Row = row.iter().map(|(k, c)| (*k, -(c / &a))).collect();
                self.subs.insert(p, rhs);
            }
        }
    }
}

/// Real symmetric moment-matrix SDP: maximize an affine objective subject to
/// the affine-entry block being positive semidefinite. The variable for the
/// monomial 1 is pinned to 1 (it is the constant part of every entry).
#[derive(Debug, Clone)]
pub struct SdpProblem {
    block_dim: usize,
    variables: Vec<String>,
    /// Distinct affine rows; `entry_idx` maps (r, c) row-major into it.
    entry_rows: Vec<AffineExpr>,
    entry_idx: Vec<u32>,
    objective: AffineExpr,
    infeasible: bool,
}

impl SdpProblem {
    pub fn block_dim(&self) -> usize {
        self.block_dim
    }

    pub fn n_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn objective(&self) -> &AffineExpr {
        &self.objective
    }

    pub fn entry(&self, r: usize, c: usize) -> &AffineExpr {
        &self.entry_rows[self.entry_idx[r * self.block_dim + c] as usize]
    }

    pub fn is_infeasible(&self) -> bool {
        self.infeasible
    }

    /// Same feasible set, negated objective (for minimization runs).
    pub fn negated_objective(&self) -> SdpProblem {
        let mut p = self.clone();
        p.objective.constant = -p.objective.constant.clone();
        for (_, c) in &mut p.objective.terms {
            *c = -c.clone();
        }
        p
    }

    /// Pins entry (r, c) to an exact value, eliminating variables; an
    /// inconsistent pin marks the problem infeasible.
    pub fn pin_entry(&mut self, r: usize, c: usize, value: Rat) {
        let mut row: Row = BTreeMap::new();
        let e = self.entry(r, c).clone();
        row_add(&mut row, 0, &(&e.constant - &value));
        for (i, cf) in &e.terms {
            row_add(&mut row, i + 1, cf);
        }
        let mut elim = Eliminator::default();
        elim.add_constraint(row);
        if elim.infeasible {
            self.infeasible = true;
            return;
        }
        let rewrite = |expr: &AffineExpr| -> AffineExpr {
            let mut row: Row = BTreeMap::new();
            row_add(&mut row, 0, &expr.constant);
            for (i, c) in &expr.terms {
                row_add(&mut row, i + 1, c);
            }
            elim.substitute(&mut row);
            row_to_affine(&row)
        };
        self.entry_rows = self.entry_rows.iter().map(&rewrite).collect();
        self.objective = rewrite(&self.objective);
    }

    /// Numeric form: block-dim, constant matrix G0, per-variable coefficient
    /// matrices G_i (upper-triangle triplets), objective coefficients, and
    /// objective constant. The block constraint is G0 + Σ x_i G_i ⪰ 0.
    pub fn to_numeric(&self) -> NumericSdp {
        let n = self.block_dim;
        let m = self.n_vars();
        let mut g0 = vec![0.0; n * n];
        let mut coeffs: Vec<Vec<(usize, usize, f64)>> = vec![Vec::new(); m];
        for r in 0..n {
            for c in r..n {
                let e = self.entry(r, c);
                let v = rat_to_f64(&e.constant);
                if v != 0.0 {
                    g0[r * n + c] = v;
                    g0[c * n + r] = v;
                }
                for (i, cf) in &e.terms {
                    coeffs[*i].push((r, c, rat_to_f64(cf)));
                }
            }
        }
        let mut b = vec![0.0; m];
        for (i, c) in &self.objective.terms {
            b[*i] = rat_to_f64(c);
        }
        NumericSdp {
            block_dim: n,
            g0,
            coeffs,
            objective: b,
            objective_constant: rat_to_f64(&self.objective.constant),
        }
    }
}

/// Floating-point view of an [`SdpProblem`].
pub struct NumericSdp {
    pub block_dim: usize,
    /// Row-major dense constant block G0.
    pub g0: Vec<f64>,
    /// Per-variable upper-triangle triplets (r, c, coeff), r <= c.
    pub coeffs: Vec<Vec<(usize, usize, f64)>>,
    pub objective: Vec<f64>,
    pub objective_constant: f64,
}

fn row_to_affine(row: &Row) -> AffineExpr {
    let mut e = AffineExpr::default();
    for (k, c) in row {
        if *k == 0 {
            e.constant = c.clone();
        } else {
            e.terms.push((k - 1, c.clone()));
        }
    }
    e
}

/// Shared machinery for the plain builders: expansion of moment entries over
/// a derived basis, keyed by word permutation.
struct MomentBuilder {
    n: usize,
    basis: Vec<SwapMonomial>,
    expander: Expander,
}

impl MomentBuilder {
    fn new(n: usize, basis: Vec<SwapMonomial>) -> Result<MomentBuilder> {
        let expander = Expander::new(&basis)?;
        Ok(MomentBuilder { n, basis, expander })
    }

    fn expansion_row(&mut self, p: &SwapPolynomial) -> Result<Row> {
        let coeffs = self.expander.expand(p)?;
        let mut row = Row::new();
        for (i, c) in coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                row.insert(i, c); // basis index 0 is the monomial 1 == constant
            }
        }
        Ok(row)
    }

    /// Assembles the problem from expansion rows per moment entry plus the
    /// objective row, eliminating the exact linear identifications implied by
    /// matrix symmetry (real pseudomoments give L(m) = L(m*)).
    fn assemble(
        &self,
        veronese_len: usize,
        entries: Vec<Row>,
        objective: Row,
    ) -> SdpProblem {
        let nv = veronese_len;
        debug_assert_eq!(entries.len(), nv * nv);
        let mut elim = Eliminator::default();
        for r in 0..nv {
            for c in (r + 1)..nv {
                let mut diff = entries[r * nv + c].clone();
                for (k, v) in &entries[c * nv + r] {
                    row_add(&mut diff, *k, &-v.clone());
                }
                if !diff.is_empty() {
                    elim.add_constraint(diff);
                }
            }
        }
        let mut rewritten: Vec<Row> = entries;
        for row in &mut rewritten {
            elim.substitute(row);
        }
        let mut obj = objective;
        elim.substitute(&mut obj);

        // compact to the variables actually used, in grlex (basis) order
        let mut used: BTreeMap<usize, usize> = BTreeMap::new();
        for row in rewritten.iter().chain(std::iter::once(&obj)) {
            for k in row.keys().filter(|k| **k >= 1) {
                used.insert(*k, 0);
            }
        }
        for (pos, (_, slot)) in used.iter_mut().enumerate() {
            *slot = pos;
        }
        let variables: Vec<String> = used
            .keys()
            .map(|k| self.basis[*k].to_string())
            .collect();
        let compact = |row: &Row| -> AffineExpr {
            let mut e = AffineExpr::default();
            for (k, c) in row {
                if *k == 0 {
                    e.constant = c.clone();
                } else {
                    e.terms.push((used[k], c.clone()));
                }
            }
            e
        };

        let mut entry_rows: Vec<AffineExpr> = Vec::new();
        let mut dedupe: HashMap<String, u32> = HashMap::new();
        let mut entry_idx = Vec::with_capacity(nv * nv);
        for row in &rewritten {
            let e = compact(row);
            let key = format!("{e:?}");
            let idx = *dedupe.entry(key).or_insert_with(|| {
                entry_rows.push(e.clone());
                (entry_rows.len() - 1) as u32
            });
            entry_idx.push(idx);
        }
        SdpProblem {
            block_dim: nv,
            variables,
            entry_rows,
            entry_idx,
            objective: compact(&obj),
            infeasible: elim.infeasible,
        }
    }
}

fn level1_veronese(n: usize) -> Vec<SwapMonomial> {
    let mut v = vec![SwapMonomial::one(n)];
    for g in Gen::alphabet(n) {
        v.push(SwapMonomial::new(n, vec![g]).unwrap());
    }
    v
}

/// Level-1 moment relaxation with an arbitrary symmetric objective
/// polynomial of degree <= 2.
pub fn build_level1_with_objective(n: usize, objective: &SwapPolynomial) -> Result<SdpProblem> {
    if n < 2 {
        return Err(Error::Invalid("level-1 relaxation needs n >= 2".into()));
    }
    let mut mb = MomentBuilder::new(n, basis_b2(n)?)?;
    let veronese = level1_veronese(n);
    build_plain(&mut mb, &veronese, objective)
}

/// Level-1 swap relaxation of max eig(H_G): Veronese (1, s_ij), entries
/// expanded in B2.
pub fn build_level1(graph: &WeightedGraph) -> Result<SdpProblem> {
    let (g, _) = graph.relabeled();
    build_level1_with_objective(g.n(), &SwapPolynomial::hamiltonian(&g)?)
}

/// Level-2 swap relaxation: moment matrix indexed by B2, entries expanded in
/// the degree-4 derived basis. Resource-bounded to n <= 8.
pub fn build_level2(graph: &WeightedGraph) -> Result<SdpProblem> {
    let (g, _) = graph.relabeled();
    let n = g.n();
    if n < 2 {
        return Err(Error::Invalid("level-2 relaxation needs n >= 2".into()));
    }
    if n > 8 {
        return Err(Error::TooLarge(format!(
            "level-2 relaxation supports n <= 8, got {n}"
        )));
    }
    let mut mb = MomentBuilder::new(n, derive_basis(n, 4)?)?;
    let veronese = basis_b2(n)?;
    build_plain(&mut mb, &veronese, &SwapPolynomial::hamiltonian(&g)?)
}

fn build_plain(
    mb: &mut MomentBuilder,
    veronese: &[SwapMonomial],
    objective: &SwapPolynomial,
) -> Result<SdpProblem> {
    let nv = veronese.len();
    let mut entries = Vec::with_capacity(nv * nv);
    for r in 0..nv {
        let left = veronese[r].reversed();
        for v in veronese.iter() {
            let word = left.concat(v)?;
            entries.push(mb.expansion_row(&SwapPolynomial::monomial(word))?);
        }
    }
    let obj = mb.expansion_row(objective)?;
    Ok(mb.assemble(nv, entries, obj))
}

/// Substitutes every occurrence of s_{n−1,n} using the irrep constraint
/// s_{n−1,n} = η̂ − Σ_{(i,j) ≠ (n−1,n)} s_{ij}, repeating until none remain.
pub fn irrep_substitute(p: &SwapPolynomial, part: TwoRowPartition) -> Result<SwapPolynomial> {
    let n = p.ambient_n();
    if part.n != n {
        return Err(Error::AmbientMismatch(part.n, n));
    }
    if n < 2 {
        return Err(Error::Invalid("irrep substitution needs n >= 2".into()));
    }
    let target = Gen::new(n - 1, n)?;
    let ehat = Rat::from_integer(eta_hat(part));
    let others: Vec<Gen> = Gen::alphabet(n).into_iter().filter(|g| *g != target).collect();
    let mut work = p.clone();
    loop {
        let mut next = SwapPolynomial::zero(n);
        let mut changed = false;
        for (m, c) in work.terms() {
            match m.word().iter().position(|g| *g == target) {
                None => next.add_term(m.clone(), c.clone()),
                Some(pos) => {
                    changed = true;
                    let left = &m.word()[..pos];
                    let right = &m.word()[pos + 1..];
                    let shorter: Vec<Gen> =
                        left.iter().chain(right.iter()).copied().collect();
                    next.add_term(SwapMonomial::new(n, shorter)?, c * &ehat);
                    for g in &others {
                        let mut w: Vec<Gen> = left.to_vec();
                        w.push(*g);
                        w.extend_from_slice(right);
                        next.add_term(SwapMonomial::new(n, w)?, -c.clone());
                    }
                }
            }
        }
        work = next;
        if !changed {
            return Ok(work);
        }
    }
}

/// Constrained canonical form: alternate basis expansion with the jucys
/// substitution until no s_{n−1,n}-monomial carries a coefficient. The
/// substitution strictly decreases grlex leading monomials, so the loop
/// terminates.
fn constrained_row(
    mb: &mut MomentBuilder,
    part: TwoRowPartition,
    p: &SwapPolynomial,
) -> Result<Row> {
    let n = mb.n;
    let target = Gen::new(n - 1, n)?;
    let mut poly = irrep_substitute(p, part)?;
    let cap = (n * (n - 1) / 2).pow(4).max(64);
    for _ in 0..cap {
        let row = mb.expansion_row(&poly)?;
        let bad: Vec<usize> = row
            .keys()
            .filter(|&&k| mb.basis[k].word().contains(&target))
            .copied()
            .collect();
        if bad.is_empty() {
            return Ok(row);
        }
        let mut next = SwapPolynomial::zero(n);
        for (k, c) in &row {
            next.add_term(mb.basis[*k].clone(), c.clone());
        }
        poly = irrep_substitute(&next, part)?;
    }
    Err(Error::Solver("irrep reduction did not stabilize".into()))
}

/// Builds the level-1 or level-2 relaxation of max eig(H_G^{[n−k,k]}): the
/// Veronese is substituted and pruned to a spanning subset, and every moment
/// entry is reduced to its constrained form.
pub fn build_level_irrep(
    graph: &WeightedGraph,
    level: u8,
    part: TwoRowPartition,
) -> Result<SdpProblem> {
    let (g, _) = graph.relabeled();
    let n = g.n();
    if part.n != n {
        return Err(Error::AmbientMismatch(part.n, n));
    }
    if n < 2 {
        return Err(Error::Invalid("irrep relaxation needs n >= 2".into()));
    }
    let (basis, veronese) = match level {
        1 => (basis_b2(n)?, level1_veronese(n)),
        2 => {
            if n > 8 {
                return Err(Error::TooLarge(format!(
                    "level-2 relaxation supports n <= 8, got {n}"
                )));
            }
            (derive_basis(n, 4)?, basis_b2(n)?)
        }
        _ => return Err(Error::Invalid("relaxation level must be 1 or 2".into())),
    };
    let mut mb = MomentBuilder::new(n, basis)?;

    // keep the subset of Veronese words whose constrained forms span
    let mut kept: Vec<SwapMonomial> = Vec::new();
    let mut pivots: BTreeMap<usize, Row> = BTreeMap::new();
    for w in veronese {
        let mut red = constrained_row(&mut mb, part, &SwapPolynomial::monomial(w.clone()))?;
        while let Some((lead, pivot)) = red
            .keys()
            .next_back()
            .and_then(|lead| pivots.get(lead).map(|p| (*lead, p.clone())))
        {
            let scale = red[&lead].clone() / pivot[&lead].clone();
            for (k, v) in pivot {
                row_add(&mut red, k, &-(&scale * &v));
            }
        }
        if let Some(&lead) = red.keys().next_back() {
            kept.push(w);
            pivots.insert(lead, red);
        }
    }

    let nv = kept.len();
    let mut entries = Vec::with_capacity(nv * nv);
    for r in 0..nv {
        let left = kept[r].reversed();
        for v in kept.iter() {
            let word = left.concat(v)?;
            entries.push(constrained_row(&mut mb, part, &SwapPolynomial::monomial(word))?);
        }
    }
    let obj = constrained_row(&mut mb, part, &SwapPolynomial::hamiltonian(&g)?)?;
    Ok(mb.assemble(nv, entries, obj))
}
