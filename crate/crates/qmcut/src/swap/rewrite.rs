//! Rewrite-rule reduction of swap monomials.
//!
//! Two rules drive everything: adjacent equal letters cancel (s² = 1), and an
//! adjacent descending pair s_a s_b with a > b rewrites to s_b s_{a^b} where
//! a^b conjugates the index pair a by the transposition b. Both strictly
//! decrease the word in grlex, so iteration terminates with a strictly
//! increasing word; in particular no generator appears twice.

use crate::swap::monomial::{Gen, SwapMonomial};
use crate::swap::poly::SwapPolynomial;

/// Normal form of a single word under the rewrite rules.
pub fn reduce_word(m: &SwapMonomial) -> SwapMonomial {
    let mut word: Vec<Gen> = m.word().to_vec();
    let mut changed = true;
    while changed {
        changed = false;
        let mut k = 0;
        while k + 1 < word.len() {
            if word[k] == word[k + 1] {
                word.drain(k..k + 2);
                changed = true;
                k = k.saturating_sub(1);
            } else if word[k] > word[k + 1] {
                let conj = word[k].conjugate_by(&word[k + 1]);
                word[k] = word[k + 1];
                word[k + 1] = conj;
                changed = true;
                k = k.saturating_sub(1);
            } else {
                k += 1;
            }
        }
    }
    SwapMonomial::new(m.ambient_n(), word).expect("indices unchanged")
}

/// Applies [`reduce_word`] to every term of a polynomial.
pub fn reduce_rewrite(p: &SwapPolynomial) -> SwapPolynomial {
    let mut out = SwapPolynomial::zero(p.ambient_n());
    for (m, c) in p.terms() {
        out.add_term(reduce_word(m), c.clone());
    }
    out
}
