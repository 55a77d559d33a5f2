//! Exact Pauli expansions of swap polynomials.
//!
//! Every swap generator expands as s_{ij} = ½(I + X_iX_j + Y_iY_j + Z_iZ_j);
//! products are multiplied symbolically letter by letter, so the cost is
//! bounded by the word's support and never touches a 2^n matrix. By the
//! isomorphism with the swap matrix algebra, a polynomial has empty
//! fingerprint exactly when it lies in the defining ideal, which makes the
//! fingerprint the canonical equality certificate.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::Result;
use crate::ratio::{rat_frac, rat_i64, Rat};
use crate::swap::monomial::SwapMonomial;
use crate::swap::poly::SwapPolynomial;

/// Pauli letters per qubit packed two bits each: I=0, X=1, Y=2, Z=3.
/// Qubit q (1-based, q <= 32) occupies bits 2(q−1)..2q−1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PauliWord(pub u64);

impl PauliWord {
    pub const IDENTITY: PauliWord = PauliWord(0);

    pub fn letter(&self, qubit: usize) -> u8 {
        ((self.0 >> (2 * (qubit - 1))) & 3) as u8
    }

    pub fn with_letter(&self, qubit: usize, letter: u8) -> PauliWord {
        let shift = 2 * (qubit - 1);
        PauliWord((self.0 & !(3u64 << shift)) | ((letter as u64) << shift))
    }

    /// Qubits carrying a non-identity letter.
    pub fn support(&self) -> Vec<usize> {
        let mut v = Vec::new();
        let mut bits = self.0;
        let mut q = 1;
        while bits != 0 {
            if bits & 3 != 0 {
                v.push(q);
            }
            bits >>= 2;
            q += 1;
        }
        v
    }

    pub fn render(&self) -> String {
        const NAMES: [char; 4] = ['I', 'X', 'Y', 'Z'];
        let sup = self.support();
        if sup.is_empty() {
            return "I".into();
        }
        sup.iter()
            .map(|&q| format!("{}{}", NAMES[self.letter(q) as usize], q))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Single-letter product: returns (result letter, phase as a power of i).
fn mul_letters(a: u8, b: u8) -> (u8, u8) {
    if a == 0 {
        return (b, 0);
    }
    if b == 0 {
        return (a, 0);
    }
    if a == b {
        return (0, 0);
    }
    // XY=iZ, YZ=iX, ZX=iY and reversed products pick up -i
    match (a, b) {
        (1, 2) => (3, 1),
        (2, 1) => (3, 3),
        (2, 3) => (1, 1),
        (3, 2) => (1, 3),
        (3, 1) => (2, 1),
        (1, 3) => (2, 3),
        _ => unreachable!(),
    }
}

/// Gaussian rational coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn zero() -> GaussRat {
        GaussRat { re: Rat::zero(), im: Rat::zero() }
    }

    pub fn real(re: Rat) -> GaussRat {
        GaussRat { re, im: Rat::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add_assign(&mut self, other: &GaussRat) {
        self.re = &self.re + &other.re;
        self.im = &self.im + &other.im;
    }

    pub fn mul(&self, other: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    pub fn scale(&self, c: &Rat) -> GaussRat {
        GaussRat { re: &self.re * c, im: &self.im * c }
    }

    /// Multiplies by i^k.
    pub fn times_i_pow(&self, k: u8) -> GaussRat {
        match k & 3 {
            0 => self.clone(),
            1 => GaussRat { re: -self.im.clone(), im: self.re.clone() },
            2 => GaussRat { re: -self.re.clone(), im: -self.im.clone() },
            _ => GaussRat { re: self.im.clone(), im: -self.re.clone() },
        }
    }
}

/// Exact Pauli expansion of a swap polynomial on its support qubits.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PauliFingerprint {
    terms: BTreeMap<PauliWord, GaussRat>,
}

impl PauliFingerprint {
    pub fn zero() -> PauliFingerprint {
        PauliFingerprint::default()
    }

    pub fn identity() -> PauliFingerprint {
        let mut fp = PauliFingerprint::default();
        fp.add_term(PauliWord::IDENTITY, GaussRat::real(rat_i64(1)));
        fp
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PauliWord, &GaussRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &PauliWord) -> GaussRat {
        self.terms.get(w).cloned().unwrap_or_else(GaussRat::zero)
    }

    pub fn add_term(&mut self, w: PauliWord, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &PauliFingerprint, c: &Rat) {
        for (w, v) in &other.terms {
            self.add_term(*w, v.scale(c));
        }
    }

    /// Pauli-basis product: convolve terms, composing letters per qubit.
    pub fn mul(&self, other: &PauliFingerprint) -> PauliFingerprint {
        let mut out = PauliFingerprint::default();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let mut phase = 0u8;
                let mut word = PauliWord(0);
                let mut bits = wa.0 | wb.0;
                let mut q = 1usize;
                while bits != 0 {
                    if bits & 3 != 0 {
                        let (letter, ph) = mul_letters(wa.letter(q), wb.letter(q));
                        phase = (phase + ph) & 3;
                        word = word.with_letter(q, letter);
                    }
                    bits >>= 2;
                    q += 1;
                }
                out.add_term(word, ca.mul(cb).times_i_pow(phase));
            }
        }
        out
    }

    /// Fingerprint of a single generator: ½(I + XX + YY + ZZ).
    pub fn generator(i: usize, j: usize) -> PauliFingerprint {
        let half = rat_frac(1, 2);
        let mut fp = PauliFingerprint::default();
        fp.add_term(PauliWord::IDENTITY, GaussRat::real(half.clone()));
        for letter in 1..=3u8 {
            let w = PauliWord(0).with_letter(i, letter).with_letter(j, letter);
            fp.add_term(w, GaussRat::real(half.clone()));
        }
        fp
    }

    pub fn monomial(m: &SwapMonomial) -> PauliFingerprint {
        let mut fp = PauliFingerprint::identity();
        for g in m.word() {
            fp = fp.mul(&PauliFingerprint::generator(g.i(), g.j()));
        }
        fp
    }
}

/// Exact Pauli expansion of a swap polynomial.
pub fn fingerprint(p: &SwapPolynomial) -> PauliFingerprint {
    let mut out = PauliFingerprint::default();
    for (m, c) in p.terms() {
        out.add_scaled(&PauliFingerprint::monomial(m), c);
    }
    out
}

/// True iff p and q represent the same element of the swap algebra
/// (equivalently, p − q annihilates the swap matrices).
pub fn equal_in_algebra(p: &SwapPolynomial, q: &SwapPolynomial) -> Result<bool> {
    Ok(fingerprint(&p.sub(q)?).is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::swap::poly::parse_polynomial;

    #[test]
    fn generator_fingerprint_shape() {
        let fp = fingerprint(&SwapPolynomial::gen(3, 1, 2).unwrap());
        assert_eq!(fp.num_terms(), 4);
        assert_eq!(
            fp.coeff(&PauliWord::IDENTITY),
            GaussRat::real(rat_frac(1, 2))
        );
        let xx = PauliWord(0).with_letter(1, 1).with_letter(2, 1);
        assert_eq!(fp.coeff(&xx), GaussRat::real(rat_frac(1, 2)));
    }

    #[test]
    fn involution_is_trivial() {
        let p = parse_polynomial(3, "s(1,2) s(1,2) - 1").unwrap();
        assert!(fingerprint(&p).is_empty());
    }

    #[test]
    fn triangle_relation_vanishes() {
        let p = parse_polynomial(
            3,
            "s(1,2) s(2,3) + s(2,3) s(1,2) - s(1,2) - s(2,3) - s(1,3) + 1",
        )
        .unwrap();
        assert!(fingerprint(&p).is_empty());
    }

    #[test]
    fn pair_relation_examples() {
        let p = parse_polynomial(3, "s(1,2) s(2,3)").unwrap();
        let q = parse_polynomial(3, "s(1,3) s(1,2)").unwrap();
        assert!(equal_in_algebra(&p, &q).unwrap());

        let p = parse_polynomial(4, "s(1,2) s(3,4)").unwrap();
        let q = parse_polynomial(4, "s(3,4) s(1,2)").unwrap();
        assert!(equal_in_algebra(&p, &q).unwrap());

        let p = parse_polynomial(3, "s(1,2)").unwrap();
        let q = parse_polynomial(3, "s(1,3)").unwrap();
        assert!(!equal_in_algebra(&p, &q).unwrap());
    }

    #[test]
    fn braid_relation_vanishes() {
        let p = parse_polynomial(
            4,
            "s(1,2) s(2,3) s(1,2) s(2,3) s(1,2) s(2,3) - 1",
        )
        .unwrap();
        assert!(fingerprint(&p).is_empty());
    }
}
