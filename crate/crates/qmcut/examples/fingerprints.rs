//! Pauli fingerprints: exact expansions of swap polynomials and the
//! fingerprint equality test.

use qmcut::swap::pauli::fingerprint;
use qmcut::swap::{equal_in_algebra, parse_polynomial};

fn show(n: usize, text: &str) {
    let p = parse_polynomial(n, text).unwrap();
    let fp = fingerprint(&p);
    println!("{text}");
    if fp.is_empty() {
        println!("  -> zero (lies in the swap ideal)");
    } else {
        for (w, c) in fp.terms() {
            let re = qmcut::ratio::rat_display(&c.re);
            let im = qmcut::ratio::rat_display(&c.im);
            println!("  {:>18}  re = {re:>5}  im = {im:>5}", w.render());
        }
    }
    println!();
}

fn main() {
    show(2, "s(1,2)");
    show(3, "s(1,2) s(1,3)");
    show(3, "s(1,2) s(1,2) - 1");
    show(3, "s(1,2) s(2,3) + s(2,3) s(1,2) - s(1,2) - s(2,3) - s(1,3) + 1");

    let pairs = [
        (3, "s(1,2) s(2,3)", "s(1,3) s(1,2)"),
        (4, "s(1,2) s(3,4)", "s(3,4) s(1,2)"),
        (3, "s(1,2)", "s(1,3)"),
    ];
    for (n, a, b) in pairs {
        let pa = parse_polynomial(n, a).unwrap();
        let pb = parse_polynomial(n, b).unwrap();
        println!(
            "{a}  ==  {b}  in the swap algebra: {}",
            equal_in_algebra(&pa, &pb).unwrap()
        );
    }
}
