//! Linear bases of bounded-degree slices of the swap algebra, derived by
//! grlex-greedy fingerprint rank, with their closed-form cardinalities.

use qmcut::swap::basis::{b2_cardinality, basis_b2, derive_basis, expand_in_basis};
use qmcut::swap::parse_polynomial;
use qmcut::symrep::catalan;

fn main() {
    println!("B2 cardinalities, formula (3n^4-14n^3+33n^2-22n+24)/24 vs rank:");
    for n in 2..=7usize {
        let explicit = basis_b2(n).unwrap().len();
        let by_rank = derive_basis(n, 2).unwrap().len();
        println!("  n = {n}: formula {} explicit {explicit} rank {by_rank}", b2_cardinality(n));
    }

    println!("\nhigher-degree bases:");
    for (n, d) in [(5usize, 3usize), (6, 3), (6, 4), (7, 4)] {
        let b = derive_basis(n, d).unwrap();
        let cap = catalan(n);
        println!("  |B{d}({n})| = {:>4}   (full algebra dimension C_{n} = {cap})", b.len());
    }

    println!("\nB2(3) and an expansion:");
    let basis = basis_b2(3).unwrap();
    for m in &basis {
        println!("  {m}");
    }
    let p = parse_polynomial(3, "s(1,2) s(2,3)").unwrap();
    let coeffs = expand_in_basis(&p, &basis).unwrap();
    let rendered: Vec<String> = coeffs.iter().map(qmcut::ratio::rat_display).collect();
    println!("  s(1,2) s(2,3) expands as {rendered:?}");
}
