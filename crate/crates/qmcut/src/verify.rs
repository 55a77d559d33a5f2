//! Executable conformance suite for the algebra core: defining relations,
//! derived identities, the commutator certificate, Gröbner generator
//! reductions, and basis cardinalities. Run by `qmcut verify` so that
//! regressions in the exact machinery surface immediately.

use num_traits::One;

use crate::ratio::{rat_frac, rat_i64, Rat};
use crate::swap::basis::{b2_cardinality, basis_b2, derive_basis};
use crate::swap::groebner::{gb_reduce, shipped_bases};
use crate::swap::monomial::SwapMonomial;
use crate::swap::pauli::fingerprint;
use crate::swap::poly::{parse_polynomial, parse_polynomial_file, SwapPolynomial};

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(results: &mut Vec<CheckResult>, name: &str, pass: bool, detail: String) {
    results.push(CheckResult { name: name.to_string(), pass, detail });
}

fn vanishes(p: &SwapPolynomial) -> bool {
    fingerprint(p).is_empty()
}

fn gen_poly(n: usize, i: usize, j: usize) -> SwapPolynomial {
    SwapPolynomial::gen(n, i, j).unwrap()
}

/// All defining relations in every index form: squares, the six pair
/// relations per triple, and the three anticommutator forms per triple.
fn check_defining_relations(results: &mut Vec<CheckResult>) {
    let n = 5;
    let mut bad = Vec::new();
    for g in crate::swap::Gen::alphabet(n) {
        let s = SwapPolynomial::monomial(SwapMonomial::new(n, vec![g]).unwrap());
        let p = s.mul(&s).unwrap().sub(&SwapPolynomial::one(n)).unwrap();
        if !vanishes(&p) {
            bad.push(format!("{g}^2 - 1"));
        }
    }
    check(results, "relation: involutions s^2 = 1", bad.is_empty(), format!("{bad:?}"));

    let mut bad = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                if i == j || j == k || i == k {
                    continue;
                }
                let (sij, sjk, sik) = (gen_poly(n, i, j), gen_poly(n, j, k), gen_poly(n, i, k));
                // pair relation s_ij s_jk = s_ik s_ij in every index form
                let pair = sij.mul(&sjk).unwrap().sub(&sik.mul(&sij).unwrap()).unwrap();
                if !vanishes(&pair) {
                    bad.push(format!("pair ({i},{j},{k})"));
                }
                // anticommutator relation
                let anti = sij
                    .mul(&sjk)
                    .unwrap()
                    .add(&sjk.mul(&sij).unwrap())
                    .unwrap()
                    .sub(&sij)
                    .unwrap()
                    .sub(&sjk)
                    .unwrap()
                    .sub(&sik)
                    .unwrap()
                    .add(&SwapPolynomial::one(n))
                    .unwrap();
                if !vanishes(&anti) {
                    bad.push(format!("triangle ({i},{j},{k})"));
                }
            }
        }
    }
    check(
        results,
        "relation: pair and anticommutator forms on all triples",
        bad.is_empty(),
        format!("{bad:?}"),
    );
}

fn check_disjoint_commutation(results: &mut Vec<CheckResult>) {
    let n = 5;
    let gens = crate::swap::Gen::alphabet(n);
    let mut bad = Vec::new();
    for a in &gens {
        for b in &gens {
            if a.is_disjoint(b) {
                let (pa, pb) = (
                    SwapPolynomial::monomial(SwapMonomial::new(n, vec![*a]).unwrap()),
                    SwapPolynomial::monomial(SwapMonomial::new(n, vec![*b]).unwrap()),
                );
                let comm = pa.mul(&pb).unwrap().sub(&pb.mul(&pa).unwrap()).unwrap();
                if !vanishes(&comm) {
                    bad.push(format!("[{a}, {b}]"));
                }
            }
        }
    }
    check(results, "consequence: disjoint swaps commute", bad.is_empty(), format!("{bad:?}"));
}

fn check_braid(results: &mut Vec<CheckResult>) {
    let n = 4;
    let mut bad = Vec::new();
    for (i, j, k) in [(1, 2, 3), (2, 3, 4), (1, 3, 4)] {
        let prod = gen_poly(n, i, j).mul(&gen_poly(n, j, k)).unwrap();
        let cube = prod.mul(&prod).unwrap().mul(&prod).unwrap();
        let p = cube.sub(&SwapPolynomial::one(n)).unwrap();
        if !vanishes(&p) {
            bad.push(format!("(s{i}{j} s{j}{k})^3"));
        }
    }
    check(results, "consequence: (s_ij s_jk)^3 = 1", bad.is_empty(), format!("{bad:?}"));
}

/// The 19 triples (f, g, l) with Σ f g l = [s12, s34], checked exactly in
/// the free algebra (term-by-term expansion) and by fingerprint.
fn commutator_certificate_triples() -> Vec<(SwapPolynomial, SwapPolynomial, SwapPolynomial)> {
    let n = 4;
    let p = |s: &str| parse_polynomial(n, s).unwrap();
    vec![
        (p("1"), p("- s(1,3) s(2,3) + s(2,3) s(1,2)"), p("1")),
        (p("- s(2,4)"), p("- s(1,3) s(2,3) + s(2,3) s(1,2)"), p("1")),
        (p("1"), p("- s(1,2) s(1,3) + s(1,3) s(2,3)"), p("1")),
        (p("- s(2,4)"), p("- s(1,2) s(1,3) + s(1,3) s(2,3)"), p("1")),
        (p("-1"), p("s(2,3) s(3,4) - s(2,4) s(2,3)"), p("s(1,2)")),
        (p("-1"), p("- s(2,4) s(3,4) + s(3,4) s(2,3)"), p("s(1,2)")),
        (p("-1"), p("- s(2,3) s(2,4) + s(2,4) s(3,4)"), p("s(1,2)")),
        (
            p("1"),
            p("1 - s(2,3) - s(2,4) - s(3,4) + s(2,3) s(3,4) + s(3,4) s(2,3)"),
            p("s(1,2)"),
        ),
        (p("1"), p("- s(1,4) s(2,4) + s(2,4) s(1,2)"), p("1")),
        (p("- s(2,3)"), p("- s(1,4) s(2,4) + s(2,4) s(1,2)"), p("1")),
        (p("1"), p("- s(1,2) s(1,4) + s(1,4) s(2,4)"), p("1")),
        (p("- s(2,3)"), p("- s(1,2) s(1,4) + s(1,4) s(2,4)"), p("1")),
        (p("-1"), p("- s(1,4) s(2,4) + s(2,4) s(1,2)"), p("s(1,3)")),
        (p("-1"), p("- s(1,2) s(1,4) + s(1,4) s(2,4)"), p("s(1,3)")),
        (p("- s(1,2)"), p("s(1,4) s(1,3) - s(3,4) s(1,4)"), p("1")),
        (
            p("- s(1,2)"),
            p("1 - s(1,3) - s(1,4) - s(3,4) + s(1,4) s(3,4) + s(3,4) s(1,4)"),
            p("1"),
        ),
        (p("s(1,2)"), p("- s(1,3) s(1,4) + s(1,4) s(3,4)"), p("1")),
        (p("-1"), p("- s(1,3) s(2,3) + s(2,3) s(1,2)"), p("s(1,4)")),
        (p("-1"), p("- s(1,2) s(1,3) + s(1,3) s(2,3)"), p("s(1,4)")),
    ]
}

fn check_commutator_certificate(results: &mut Vec<CheckResult>) {
    let n = 4;
    let mut total = SwapPolynomial::zero(n);
    let mut middle_ok = true;
    for (f, g, l) in commutator_certificate_triples() {
        middle_ok &= vanishes(&g);
        total = total.add(&f.mul(&g).unwrap().mul(&l).unwrap()).unwrap();
    }
    let comm = parse_polynomial(n, "s(1,2) s(3,4) - s(3,4) s(1,2)").unwrap();
    let free_equal = total == comm;
    let fp_equal = vanishes(&total.sub(&comm).unwrap());
    check(
        results,
        "certificate: 19-triple commutator identity",
        free_equal && fp_equal && middle_ok,
        format!("free algebra: {free_equal}, fingerprint: {fp_equal}, middles vanish: {middle_ok}"),
    );
}

/// Three-edge star identity (each quadratic written in the orientation that
/// holds under left-to-right products) and the line exchange identities.
fn check_star_and_line_identities(results: &mut Vec<CheckResult>) {
    let n = 4;
    let mut bad = Vec::new();
    for (i, j, k, l) in [(1usize, 2usize, 3usize, 4usize), (2, 4, 1, 3), (3, 1, 4, 2)] {
        let m = |a: usize, b: usize| gen_poly(n, a, b);
        let lhs = m(j, k).mul(&m(i, k)).unwrap().mul(&m(l, k)).unwrap().scaled(&rat_i64(2));
        let rhs = SwapPolynomial::one(n)
            .sub(&m(i, j))
            .unwrap()
            .sub(&m(i, l))
            .unwrap()
            .sub(&m(j, k))
            .unwrap()
            .sub(&m(k, l))
            .unwrap()
            .add(&m(i, k).mul(&m(i, j)).unwrap())
            .unwrap()
            .add(&m(i, l).mul(&m(i, j)).unwrap())
            .unwrap()
            .add(&m(k, l).mul(&m(i, j)).unwrap())
            .unwrap()
            .add(&m(i, l).mul(&m(i, k)).unwrap())
            .unwrap()
            .sub(&m(j, l).mul(&m(i, k)).unwrap())
            .unwrap()
            .add(&m(j, k).mul(&m(i, l)).unwrap())
            .unwrap()
            .add(&m(j, l).mul(&m(j, k)).unwrap())
            .unwrap();
        if !vanishes(&lhs.sub(&rhs).unwrap()) {
            bad.push(format!("star ({i},{j},{k},{l})"));
        }
        // line identities
        let line1 = m(i, j)
            .mul(&m(j, k))
            .unwrap()
            .mul(&m(k, l))
            .unwrap()
            .sub(&m(i, j).mul(&m(j, l)).unwrap().mul(&m(j, k)).unwrap())
            .unwrap();
        let line2 = m(j, k)
            .mul(&m(i, j))
            .unwrap()
            .mul(&m(k, l))
            .unwrap()
            .sub(&m(i, k).mul(&m(j, k)).unwrap().mul(&m(l, k)).unwrap())
            .unwrap();
        let line3 = m(j, k)
            .mul(&m(k, l))
            .unwrap()
            .mul(&m(i, j))
            .unwrap()
            .sub(&m(j, l).mul(&m(j, k)).unwrap().mul(&m(i, j)).unwrap())
            .unwrap();
        for (name, pth) in [("line1", line1), ("line2", line2), ("line3", line3)] {
            if !vanishes(&pth) {
                bad.push(format!("{name} ({i},{j},{k},{l})"));
            }
        }
    }
    check(
        results,
        "degree reduction: three-edge star and line identities",
        bad.is_empty(),
        format!("{bad:?}"),
    );
}

fn check_data_identities(results: &mut Vec<CheckResult>) {
    let lines = parse_polynomial_file(6, include_str!("../data/ident_disjoint_lines.txt"))
        .unwrap();
    let ok = lines.len() == 1 && vanishes(&lines[0]);
    check(
        results,
        "degree reduction: disjoint two-edge lines identity",
        ok,
        String::new(),
    );

    let deg4 = parse_polynomial_file(8, include_str!("../data/ident_b2_deg4.txt")).unwrap();
    let ok = deg4.len() == 1 && vanishes(&deg4[0]);
    check(
        results,
        "degree reduction: disjoint-pairs degree-4 identity",
        ok,
        String::new(),
    );
}

fn check_groebner_generators(results: &mut Vec<CheckResult>) {
    for (name, gb) in shipped_bases() {
        let mut bad = 0usize;
        for g in gb.generators() {
            if !gb_reduce(g, &gb).is_zero() {
                bad += 1;
            }
        }
        check(
            results,
            &format!("groebner: {name} generators reduce to zero"),
            bad == 0,
            format!("{} generators", gb.generators().len()),
        );
    }
    // the swap-ideal bases must also vanish on fingerprints
    for (name, gb) in shipped_bases() {
        if !name.starts_with("gb_swap") {
            continue;
        }
        let bad = gb.generators().iter().filter(|g| !vanishes(g)).count();
        check(
            results,
            &format!("groebner: {name} generators have empty fingerprints"),
            bad == 0,
            String::new(),
        );
    }
}

fn check_example_412(results: &mut Vec<CheckResult>) {
    let gb = crate::swap::groebner::gb_swap_3();
    let p = parse_polynomial(3, "s(1,3) s(1,2)").unwrap();
    let expect = parse_polynomial(3, "-1 + s(1,2) + s(1,3) + s(2,3) - s(1,2) s(1,3)").unwrap();
    let ok = gb_reduce(&p, &gb) == expect;
    check(results, "groebner: normal form of s13 s12", ok, String::new());
}

fn check_basis_cardinalities(results: &mut Vec<CheckResult>) {
    let mut bad = Vec::new();
    for n in 2..=8 {
        if basis_b2(n).unwrap().len() != b2_cardinality(n) {
            bad.push(format!("B2({n}) explicit"));
        }
    }
    for n in 2..=7 {
        match derive_basis(n, 2) {
            Ok(b) if b.len() == b2_cardinality(n) => {}
            _ => bad.push(format!("B2({n}) by rank")),
        }
    }
    check(results, "bases: B2 cardinalities", bad.is_empty(), format!("{bad:?}"));

    let b35 = derive_basis(5, 3).map(|b| b.len()).unwrap_or(0);
    check(results, "bases: |B3(5)| = 42", b35 == 42, format!("got {b35}"));
    let b36 = derive_basis(6, 3).map(|b| b.len()).unwrap_or(0);
    check(results, "bases: |B3(6)| = 132", b36 == 132, format!("got {b36}"));
    let b46 = derive_basis(6, 4).map(|b| b.len()).unwrap_or(0);
    check(
        results,
        "bases: |B4(6)| = 132 (Catalan bound reached)",
        b46 == 132,
        format!("got {b46}"),
    );
}

fn check_fingerprint_shift(results: &mut Vec<CheckResult>) {
    // s12 = 1/2 (I + XX + YY + ZZ): four terms with coefficient 1/2
    let fp = fingerprint(&gen_poly(2, 1, 2));
    let ok = fp.num_terms() == 4
        && fp
            .terms()
            .all(|(_, c)| c.re == rat_frac(1, 2) && c.im == Rat::one() - Rat::one());
    check(results, "fingerprint: generator expansion", ok, String::new());
}

/// Runs the full conformance suite.
pub fn run_all() -> Vec<CheckResult> {
    let mut results = Vec::new();
    check_fingerprint_shift(&mut results);
    check_defining_relations(&mut results);
    check_disjoint_commutation(&mut results);
    check_braid(&mut results);
    check_commutator_certificate(&mut results);
    check_star_and_line_identities(&mut results);
    check_data_identities(&mut results);
    check_groebner_generators(&mut results);
    check_example_412(&mut results);
    check_basis_cardinalities(&mut results);
    results
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conformance_suite_passes() {
        let results = run_all();
        let failed: Vec<&CheckResult> = results.iter().filter(|r| !r.pass).collect();
        assert!(failed.is_empty(), "failing checks: {failed:?}");
        assert!(results.len() >= 12);
    }
}
