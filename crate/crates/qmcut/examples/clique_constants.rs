//! Closed-form representation theory: two-row irrep dimensions, the clique
//! constants eta and eta-hat, and the Catalan dimension identity.

use num_bigint::BigInt;
use qmcut::symrep::{catalan, eta, eta_hat, irrep_dim, transposition_character, TwoRowPartition};

fn main() {
    println!("two-row irreps of S_n: dimension, transposition character, eta, eta-hat\n");
    for n in [4usize, 6, 7, 8] {
        println!("n = {n}:");
        for p in TwoRowPartition::all(n) {
            println!(
                "  {:>8}  dim = {:>4}  chi(t) = {:>4}  eta = {:>4}  eta^ = {:>4}",
                p.to_string(),
                irrep_dim(p),
                transposition_character(p),
                eta(p),
                eta_hat(p),
            );
        }
    }

    println!("\nsum of squared dimensions vs Catalan numbers:");
    for n in 1..=12usize {
        let total: BigInt = TwoRowPartition::all(n)
            .into_iter()
            .map(|p| {
                let d = irrep_dim(p);
                &d * &d
            })
            .sum();
        let c = catalan(n);
        assert_eq!(total, c);
        println!("  n = {n:>2}: sum dim^2 = {c} = C_{n}");
    }
}
