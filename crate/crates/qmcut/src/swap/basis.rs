//! Linear bases for bounded-degree slices of the swap algebra and exact
//! expansion of polynomials over them.
//!
//! Independence and expansion are decided on Pauli fingerprints, viewed as
//! sparse rational vectors indexed by (Pauli word, real/imaginary part).
//! Since swap monomials expand to real matrices, rational rank here agrees
//! with complex rank, and expansions have real rational coefficients.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ratio::Rat;
use crate::swap::monomial::{Gen, SwapMonomial};
use crate::swap::pauli::PauliFingerprint;
use crate::swap::poly::SwapPolynomial;

type Key = (u64, u8); // (pauli word, 0 = re / 1 = im)
type SparseVec = BTreeMap<Key, Rat>;

fn fingerprint_vec(fp: &PauliFingerprint) -> SparseVec {
    let mut v = SparseVec::new();
    for (w, c) in fp.terms() {
        if !c.re.is_zero() {
            v.insert((w.0, 0), c.re.clone());
        }
        if !c.im.is_zero() {
            v.insert((w.0, 1), c.im.clone());
        }
    }
    v
}

struct Row {
    coeffs: SparseVec,  // leading (smallest-key) coefficient is 1
    expansion: Vec<Rat>, // row as a combination of inserted independent vectors
}

/// Incremental exact echelon form with expansion tracking.
#[derive(Default)]
struct Echelon {
    rows: BTreeMap<Key, Row>,
    rank: usize,
}

enum Inserted {
    Independent(usize),
    Dependent,
}

impl Echelon {
    /// Reduces `v` against the pivot rows; returns the residual and the
    /// accumulated combination over previously inserted vectors.
    fn reduce(&self, mut v: SparseVec) -> (SparseVec, Vec<Rat>) {
        let mut combo = vec![Rat::zero(); self.rank];
        while let Some((key, row)) = v
            .iter()
            .next()
            .and_then(|(k, _)| self.rows.get(k).map(|row| (*k, row)))
        {
            let factor = v.get(&key).unwrap().clone();
            for (k, c) in &row.coeffs {
                let delta = c * &factor;
                match v.entry(*k) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = e.get() - delta;
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                }
            }
            for (t, c) in row.expansion.iter().enumerate() {
                combo[t] = &combo[t] + &(c * &factor);
            }
        }
        (v, combo)
    }

    fn insert(&mut self, v: SparseVec) -> Inserted {
        let (residual, combo) = self.reduce(v);
        if residual.is_empty() {
            return Inserted::Dependent;
        }
        let index = self.rank;
        let (&pivot, lead) = residual.iter().next().unwrap();
        let lead = lead.clone();
        let coeffs: SparseVec = residual.iter().map(|(k, c)| (*k, c / &lead)).collect();
        // residual = basisvec_index - sum(combo) => normalized row expansion
        let mut expansion = combo;
        expansion.push(Rat::zero());
        let mut row_exp = vec![Rat::zero(); index + 1];
        for (t, c) in expansion.iter().enumerate().take(index) {
            row_exp[t] = -(c / &lead);
        }
        row_exp[index] = Rat::from_integer(1.into()) / lead;
        self.rows.insert(pivot, Row { coeffs, expansion: row_exp });
        self.rank += 1;
        Inserted::Independent(index)
    }
}

/// The basis B2 of the span of degree <= 2 monomials:
/// {1} ∪ {s_ij} ∪ {s_ij s_ik : i<j<k} ∪ {s_ij s_kl : i<j, i<k<l, disjoint},
/// in grlex order.
pub fn basis_b2(n: usize) -> Result<Vec<SwapMonomial>> {
    if n < 2 {
        return Err(Error::Invalid("basis_b2 requires n >= 2".into()));
    }
    let mut out = vec![SwapMonomial::one(n)];
    for g in Gen::alphabet(n) {
        out.push(SwapMonomial::new(n, vec![g])?);
    }
    let mut quads = Vec::new();
    for a in Gen::alphabet(n) {
        for b in Gen::alphabet(n) {
            let keep = if a.is_disjoint(&b) {
                a.i() < b.i()
            } else {
                a.i() == b.i() && a.j() < b.j()
            };
            if keep {
                quads.push(SwapMonomial::new(n, vec![a, b])?);
            }
        }
    }
    quads.sort();
    out.extend(quads);
    Ok(out)
}

/// Cardinality of B2 per its closed form, (3n⁴−14n³+33n²−22n+24)/24.
pub fn b2_cardinality(n: usize) -> usize {
    let n = n as i64;
    ((3 * n.pow(4) - 14 * n.pow(3) + 33 * n * n - 22 * n + 24) / 24) as usize
}

fn check_derive_limits(n: usize, d: usize) -> Result<()> {
    if n < 2 || d < 1 {
        return Err(Error::Invalid("derive_basis requires n >= 2, d >= 1".into()));
    }
    if d > 4 || n > 8 {
        return Err(Error::TooLarge(format!(
            "derive_basis supports d <= 4 and n <= 8 (got n = {n}, d = {d})"
        )));
    }
    Ok(())
}

/// Maximal grlex-greedy set of monomials of degree <= d with linearly
/// independent fingerprints.
///
/// Words mapping to an already-seen permutation are skipped: their
/// fingerprints coincide with the earlier word's, so they can never enlarge
/// the span.
pub fn derive_basis(n: usize, d: usize) -> Result<Vec<SwapMonomial>> {
    check_derive_limits(n, d)?;
    let gens = Gen::alphabet(n);
    let mut echelon = Echelon::default();
    let mut basis = Vec::new();
    let mut seen: HashMap<Vec<u8>, ()> = HashMap::new();

    let mut frontier: Vec<Vec<Gen>> = vec![Vec::new()];
    for degree in 0..=d {
        if degree > 0 {
            let mut next = Vec::with_capacity(frontier.len() * gens.len());
            for w in &frontier {
                for &g in &gens {
                    let mut w2 = w.clone();
                    w2.push(g);
                    next.push(w2);
                }
            }
            frontier = next;
        }
        for w in &frontier {
            let m = SwapMonomial::new(n, w.clone())?;
            let perm = m.permutation();
            if seen.insert(perm, ()).is_some() {
                continue;
            }
            let vec = fingerprint_vec(&PauliFingerprint::monomial(&m));
            if let Inserted::Independent(_) = echelon.insert(vec) {
                basis.push(m);
            }
        }
    }
    Ok(basis)
}

/// Expands polynomials over a fixed monomial basis by exact linear solves on
/// fingerprints; caches per-permutation monomial expansions.
pub struct Expander {
    n: usize,
    size: usize,
    echelon: Echelon,
    memo: HashMap<Vec<u8>, Option<Vec<Rat>>>,
}

impl Expander {
    pub fn new(basis: &[SwapMonomial]) -> Result<Expander> {
        let Some(first) = basis.first() else {
            return Err(Error::Invalid("empty basis".into()));
        };
        let n = first.ambient_n();
        let mut echelon = Echelon::default();
        let mut memo = HashMap::new();
        for (idx, m) in basis.iter().enumerate() {
            if m.ambient_n() != n {
                return Err(Error::AmbientMismatch(n, m.ambient_n()));
            }
            let vec = fingerprint_vec(&PauliFingerprint::monomial(m));
            match echelon.insert(vec) {
                Inserted::Independent(k) => debug_assert_eq!(k, idx),
                Inserted::Dependent => {
                    return Err(Error::Invalid(format!(
                        "basis fingerprints are linearly dependent at {m}"
                    )))
                }
            }
            let mut unit = vec![Rat::zero(); basis.len()];
            unit[idx] = Rat::from_integer(1.into());
            memo.insert(m.permutation(), Some(unit));
        }
        Ok(Expander { n, size: basis.len(), echelon, memo })
    }

    pub fn basis_size(&self) -> usize {
        self.size
    }

    pub fn ambient_n(&self) -> usize {
        self.n
    }

    fn expand_monomial(&mut self, m: &SwapMonomial) -> Result<Vec<Rat>> {
        let perm = m.permutation();
        if let Some(cached) = self.memo.get(&perm) {
            return cached.clone().ok_or(Error::NotInSpan);
        }
        let vec = fingerprint_vec(&PauliFingerprint::monomial(m));
        let (residual, mut combo) = self.echelon.reduce(vec);
        let result = if residual.is_empty() {
            combo.resize(self.size, Rat::zero());
            Some(combo)
        } else {
            None
        };
        self.memo.insert(perm, result.clone());
        result.ok_or(Error::NotInSpan)
    }

    /// Unique real-rational coefficient vector c with p = Σ c_i basis_i in
    /// the algebra; errors with [`Error::NotInSpan`] when no such vector
    /// exists.
    pub fn expand(&mut self, p: &SwapPolynomial) -> Result<Vec<Rat>> {
        if p.ambient_n() != self.n {
            return Err(Error::AmbientMismatch(self.n, p.ambient_n()));
        }
        let mut out = vec![Rat::zero(); self.size];
        for (m, c) in p.terms() {
            let exp = self.expand_monomial(m)?;
            for (k, e) in exp.iter().enumerate() {
                if !e.is_zero() {
                    out[k] = &out[k] + &(e * c);
                }
            }
        }
        Ok(out)
    }
}

/// Convenience wrapper: expand `p` over `basis` in one call.
pub fn expand_in_basis(p: &SwapPolynomial, basis: &[SwapMonomial]) -> Result<Vec<Rat>> {
    Expander::new(basis)?.expand(p)
}

/// Span-membership test without requiring success.
pub fn in_span(p: &SwapPolynomial, expander: &mut Expander) -> bool {
    expander.expand(p).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat_i64;
    use crate::swap::pauli::equal_in_algebra;
    use crate::swap::poly::parse_polynomial;

    #[test]
    fn b2_small_cases() {
        let b = basis_b2(3).unwrap();
        let names: Vec<String> = b.iter().map(|m| m.to_string()).collect();
        assert_eq!(
            names,
            vec!["1", "s(1,2)", "s(1,3)", "s(2,3)", "s(1,2) s(1,3)"]
        );
        assert_eq!(basis_b2(2).unwrap().len(), 2);
        for n in 2..=8 {
            assert_eq!(basis_b2(n).unwrap().len(), b2_cardinality(n), "n={n}");
        }
    }

    #[test]
    fn derive_matches_b2() {
        for n in 2..=6 {
            assert_eq!(derive_basis(n, 2).unwrap(), basis_b2(n).unwrap());
        }
    }

    #[test]
    fn derive_degree_one() {
        let b = derive_basis(5, 1).unwrap();
        assert_eq!(b.len(), 1 + 10);
    }

    #[test]
    fn example_expansion_in_b2() {
        // s12 s23 = -1 + s12 + s13 + s23 - s12 s13 over B2(3)
        let basis = basis_b2(3).unwrap();
        let p = parse_polynomial(3, "s(1,2) s(2,3)").unwrap();
        let c = expand_in_basis(&p, &basis).unwrap();
        assert_eq!(
            c,
            vec![rat_i64(-1), rat_i64(1), rat_i64(1), rat_i64(1), rat_i64(-1)]
        );
        // basis elements expand to unit vectors
        let e = expand_in_basis(
            &SwapPolynomial::monomial(basis[4].clone()),
            &basis,
        )
        .unwrap();
        assert_eq!(e, vec![rat_i64(0), rat_i64(0), rat_i64(0), rat_i64(0), rat_i64(1)]);
    }

    #[test]
    fn rewritten_monomial_expansion() {
        // s23 s12 s13^2 + s12^2 expands like s12 s13 + 1
        let basis = basis_b2(3).unwrap();
        let p = parse_polynomial(3, "s(2,3) s(1,2) s(1,3) s(1,3) + s(1,2) s(1,2)").unwrap();
        let c = expand_in_basis(&p, &basis).unwrap();
        assert_eq!(
            c,
            vec![rat_i64(1), rat_i64(0), rat_i64(0), rat_i64(0), rat_i64(1)]
        );
    }

    #[test]
    fn expansion_reconstructs_polynomial() {
        let basis = basis_b2(4).unwrap();
        let p = parse_polynomial(4, "s(2,4) s(2,3) s(1,2) - 2 * s(3,4) s(1,2)").unwrap();
        let c = expand_in_basis(&p, &basis).unwrap();
        let mut q = SwapPolynomial::zero(4);
        for (m, coeff) in basis.iter().zip(&c) {
            q.add_term(m.clone(), coeff.clone());
        }
        assert!(equal_in_algebra(&p, &q).unwrap());
    }

    #[test]
    fn not_in_span_detected() {
        // a degree-3 monomial with 6-point support is outside span(B2)
        let basis = basis_b2(6).unwrap();
        let p = parse_polynomial(6, "s(1,2) s(3,4) s(5,6)").unwrap();
        assert!(matches!(
            expand_in_basis(&p, &basis),
            Err(Error::NotInSpan)
        ));
    }
}
