//! Division with remainder against a supplied (trusted) noncommutative
//! Gröbner basis, plus the shipped basis data.


use crate::error::Result;
use crate::ratio::Rat;
use crate::swap::monomial::{Gen, SwapMonomial};
use crate::swap::poly::{parse_polynomial_file, SwapPolynomial};

/// A Gröbner basis prepared for division: generators with cached leading
/// terms (grlex-largest monomials) and leading coefficients.
pub struct GroebnerBasis {
    n: usize,
    generators: Vec<SwapPolynomial>,
    leads: Vec<(Vec<Gen>, Rat)>,
}

impl GroebnerBasis {
    pub fn new(n: usize, generators: Vec<SwapPolynomial>) -> Result<GroebnerBasis> {
        let mut leads = Vec::with_capacity(generators.len());
        for g in &generators {
            let lm = g
                .leading_monomial()
                .ok_or_else(|| crate::error::Error::Invalid("zero generator in basis".into()))?;
            leads.push((lm.word().to_vec(), g.coeff(lm)));
        }
        Ok(GroebnerBasis { n, generators, leads })
    }

    pub fn parse(n: usize, text: &str) -> Result<GroebnerBasis> {
        GroebnerBasis::new(n, parse_polynomial_file(n, text)?)
    }

    pub fn ambient_n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[SwapPolynomial] {
        &self.generators
    }

    /// First (generator, position) whose leading word occurs as a subword of
    /// `word`; takes the leftmost occurrence of the first matching generator.
    fn find_division(&self, word: &[Gen]) -> Option<(usize, usize)> {
        for (gi, (lead, _)) in self.leads.iter().enumerate() {
            if lead.len() > word.len() {
                continue;
            }
            for pos in 0..=(word.len() - lead.len()) {
                if &word[pos..pos + lead.len()] == lead.as_slice() {
                    return Some((gi, pos));
                }
            }
        }
        None
    }
}

/// Remainder of `p` under repeated leading-term division by `gb`.
///
/// The grlex-largest reducible monomial is always processed first, so the
/// normal form is deterministic for a given basis; for an actual Gröbner
/// basis it is the canonical form modulo the ideal, and is 0 exactly on
/// ideal members.
pub fn gb_reduce(p: &SwapPolynomial, gb: &GroebnerBasis) -> SwapPolynomial {
    let n = p.ambient_n();
    let mut work = p.clone();
    let mut remainder = SwapPolynomial::zero(n);
    while !work.is_zero() {
        let lm = work.leading_monomial().unwrap().clone();
        let lc = work.coeff(&lm);
        match gb.find_division(lm.word()) {
            None => {
                // leading monomial irreducible: move it to the remainder
                remainder.add_term(lm.clone(), lc.clone());
                work.add_term(lm, -lc);
            }
            Some((gi, pos)) => {
                let (lead, lead_coeff) = &gb.leads[gi];
                let factor = lc / lead_coeff;
                let left = SwapMonomial::new(n, lm.word()[..pos].to_vec()).unwrap();
                let right =
                    SwapMonomial::new(n, lm.word()[pos + lead.len()..].to_vec()).unwrap();
                for (m, c) in gb.generators[gi].terms() {
                    let full = left
                        .concat(m)
                        .and_then(|lm2| lm2.concat(&right))
                        .expect("same ambient n");
                    work.add_term(full, -(&factor * c));
                }
            }
        }
    }
    remainder
}

macro_rules! shipped {
    ($fname:ident, $n:expr, $file:expr, $doc:expr) => {
        #[doc = $doc]
        pub fn $fname() -> GroebnerBasis {
            GroebnerBasis::parse($n, include_str!($file))
                .expect("shipped basis data parses")
        }
    };
}

shipped!(gb_swap_3, 3, "../../data/gb_swap_3.txt", "Gröbner basis for the n = 3 swap ideal.");
shipped!(gb_swap_4, 4, "../../data/gb_swap_4.txt", "Gröbner basis for the n = 4 swap ideal.");
shipped!(
    gb_irrep_3_1,
    4,
    "../../data/gb_irrep_3_1.txt",
    "Gröbner basis for the n = 4 ideal constrained to the \\[3,1\\] irrep."
);
shipped!(
    gb_irrep_2_2,
    4,
    "../../data/gb_irrep_2_2.txt",
    "Gröbner basis for the n = 4 ideal constrained to the \\[2,2\\] irrep."
);
shipped!(
    gb_sym_4,
    4,
    "../../data/gb_sym_4.txt",
    "Gröbner basis for the n = 4 symmetric-group ideal."
);

/// All shipped bases with their names, for the conformance suite.
pub fn shipped_bases() -> Vec<(&'static str, GroebnerBasis)> {
    vec![
        ("gb_swap_3", gb_swap_3()),
        ("gb_swap_4", gb_swap_4()),
        ("gb_irrep_3_1", gb_irrep_3_1()),
        ("gb_irrep_2_2", gb_irrep_2_2()),
        ("gb_sym_4", gb_sym_4()),
    ]
}
