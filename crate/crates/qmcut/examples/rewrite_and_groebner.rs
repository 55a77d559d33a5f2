//! Rewrite normal forms and division against the shipped Gröbner bases.

use qmcut::swap::groebner::{gb_reduce, gb_swap_3, gb_swap_4, shipped_bases};
use qmcut::swap::{parse_polynomial, reduce_rewrite};

fn main() {
    let samples3 = ["s(1,2) s(1,2)", "s(1,3) s(1,2)", "s(2,3) s(1,3) s(1,2)"];
    println!("rewrite-rule reduction (n = 3):");
    for s in samples3 {
        let p = parse_polynomial(3, s).unwrap();
        println!("  {s:<24} ->  {}", reduce_rewrite(&p));
    }

    println!("\nGroebner normal forms:");
    let gb3 = gb_swap_3();
    let p = parse_polynomial(3, "s(1,3) s(1,2)").unwrap();
    println!("  s(1,3) s(1,2)  mod GB_3  =  {}", gb_reduce(&p, &gb3));

    let gb4 = gb_swap_4();
    let q = parse_polynomial(4, "s(3,4) s(2,4) s(1,4)").unwrap();
    println!("  s(3,4) s(2,4) s(1,4)  mod GB_4  =  {}", gb_reduce(&q, &gb4));

    println!("\ngenerator self-reduction across all shipped bases:");
    for (name, gb) in shipped_bases() {
        let zeros = gb
            .generators()
            .iter()
            .filter(|g| gb_reduce(g, &gb).is_zero())
            .count();
        println!("  {name}: {zeros}/{} generators reduce to 0", gb.generators().len());
    }
}
