//! Noncommutative polynomials in the swap generators with exact rational
//! coefficients, plus the text format used by the shipped Gröbner data.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ratio::{parse_rat, rat_display, rat_i64, Rat};
use crate::swap::monomial::{Gen, SwapMonomial};

/// Formal sum of swap monomials; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwapPolynomial {
    n: usize,
    terms: BTreeMap<SwapMonomial, Rat>,
}

impl SwapPolynomial {
    pub fn zero(n: usize) -> SwapPolynomial {
        SwapPolynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> SwapPolynomial {
        SwapPolynomial::monomial(SwapMonomial::one(n))
    }

    pub fn constant(n: usize, c: Rat) -> SwapPolynomial {
        let mut p = SwapPolynomial::zero(n);
        p.add_term(SwapMonomial::one(n), c);
        p
    }

    pub fn monomial(m: SwapMonomial) -> SwapPolynomial {
        let mut p = SwapPolynomial::zero(m.ambient_n());
        p.add_term(m, rat_i64(1));
        p
    }

    pub fn gen(n: usize, i: usize, j: usize) -> Result<SwapPolynomial> {
        Ok(SwapPolynomial::monomial(SwapMonomial::gen(n, i, j)?))
    }

    pub fn ambient_n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SwapMonomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Largest monomial in grlex order, if nonzero.
    pub fn leading_monomial(&self) -> Option<&SwapMonomial> {
        self.terms.keys().next_back()
    }

    pub fn coeff(&self, m: &SwapMonomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, m: SwapMonomial, c: Rat) {
        debug_assert_eq!(m.ambient_n(), self.n);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &SwapPolynomial) -> Result<SwapPolynomial> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SwapPolynomial) -> Result<SwapPolynomial> {
        self.add(&other.scaled(&rat_i64(-1)))
    }

    pub fn scaled(&self, c: &Rat) -> SwapPolynomial {
        if c.is_zero() {
            return SwapPolynomial::zero(self.n);
        }
        SwapPolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &SwapPolynomial) -> Result<SwapPolynomial> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        let mut out = SwapPolynomial::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.concat(mb)?, ca * cb);
            }
        }
        Ok(out)
    }

    /// The * involution: reverse every word (coefficients are real).
    pub fn star(&self) -> SwapPolynomial {
        let mut out = SwapPolynomial::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.reversed(), c.clone());
        }
        out
    }

    /// The H polynomial of a graph: Σ 2w_{ij}(1 − s_{ij}).
    pub fn hamiltonian(graph: &crate::graph::WeightedGraph) -> Result<SwapPolynomial> {
        if !graph.is_contiguous() {
            return Err(Error::Invalid(
                "hamiltonian polynomial requires vertices labeled 1..=n".into(),
            ));
        }
        let n = graph.n();
        let mut p = SwapPolynomial::zero(n);
        for (i, j, w) in graph.edges() {
            let tw = w * rat_i64(2);
            p.add_term(SwapMonomial::one(n), tw.clone());
            p.add_term(SwapMonomial::gen(n, *i as usize, *j as usize)?, -tw);
        }
        Ok(p)
    }
}

impl std::fmt::Display for SwapPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let cs = rat_display(c);
            let (sign, mag) = if let Some(stripped) = cs.strip_prefix('-') {
                ("-", stripped.to_string())
            } else {
                ("+", cs)
            };
            if first {
                if sign == "-" {
                    write!(f, "- ")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag} * {m}")?;
            }
        }
        Ok(())
    }
}

/// Parses one polynomial in the data-file term syntax:
/// terms joined by `+`/`-`, each `c * s(i,j) s(k,l) …` with optional rational
/// coefficient; `1` denotes the empty word.
pub fn parse_polynomial(n: usize, line: &str) -> Result<SwapPolynomial> {
    let mut poly = SwapPolynomial::zero(n);
    let mut rest = line.trim();
    if rest.is_empty() {
        return Ok(poly);
    }
    let mut sign = 1i64;
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r.trim_start();
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r.trim_start();
    }
    loop {
        // split off the next term at a top-level +/- (none occur inside tokens)
        let end = rest
            .char_indices()
            .find(|&(k, ch)| k > 0 && (ch == '+' || ch == '-'))
            .map(|(k, _)| k)
            .unwrap_or(rest.len());
        let term = rest[..end].trim();
        let (coeff, word) = parse_term(n, term)?;
        poly.add_term(word, coeff * rat_i64(sign));
        if end == rest.len() {
            break;
        }
        sign = if rest.as_bytes()[end] == b'-' { -1 } else { 1 };
        rest = rest[end + 1..].trim_start();
        if rest.is_empty() {
            return Err(Error::Parse(format!("dangling sign in `{line}`")));
        }
    }
    Ok(poly)
}

fn parse_term(n: usize, term: &str) -> Result<(Rat, SwapMonomial)> {
    let mut coeff = rat_i64(1);
    let mut gens: Vec<Gen> = Vec::new();
    for tok in term.split('*').flat_map(str::split_whitespace) {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        if let Some(body) = tok.strip_prefix("s(") {
            let body = body
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("bad generator token `{tok}`")))?;
            let (a, b) = body
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("bad generator token `{tok}`")))?;
            let a: usize = a.trim().parse().map_err(|_| {
                Error::Parse(format!("bad generator index in `{tok}`"))
            })?;
            let b: usize = b.trim().parse().map_err(|_| {
                Error::Parse(format!("bad generator index in `{tok}`"))
            })?;
            gens.push(Gen::new(a, b)?);
        } else if tok == "1" && gens.is_empty() && coeff == rat_i64(1) {
            // explicit unit monomial / unit coefficient
        } else {
            coeff *= parse_rat(tok)?;
        }
    }
    Ok((coeff, SwapMonomial::new(n, gens)?))
}

/// Parses a polynomial-per-line document (`#` comments, blank lines skipped).
pub fn parse_polynomial_file(n: usize, text: &str) -> Result<Vec<SwapPolynomial>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| parse_polynomial(n, l))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat_frac;

    #[test]
    fn parse_and_display_round_trip() {
        let p = parse_polynomial(4, "-1 + s(1,2) + 1/2 * s(1,3) s(2,4) - 3 * s(3,4)").unwrap();
        assert_eq!(p.num_terms(), 4);
        assert_eq!(p.coeff(&SwapMonomial::one(4)), rat_i64(-1));
        assert_eq!(
            p.coeff(&SwapMonomial::from_pairs(4, &[(1, 3), (2, 4)]).unwrap()),
            rat_frac(1, 2)
        );
        let q = parse_polynomial(4, &p.to_string()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn product_concatenates_words() {
        let a = SwapPolynomial::gen(3, 1, 2).unwrap();
        let b = SwapPolynomial::gen(3, 2, 3).unwrap();
        let ab = a.mul(&b).unwrap();
        assert_eq!(
            ab.leading_monomial().unwrap(),
            &SwapMonomial::from_pairs(3, &[(1, 2), (2, 3)]).unwrap()
        );
    }

    #[test]
    fn star_reverses_words() {
        let m = SwapPolynomial::monomial(SwapMonomial::from_pairs(4, &[(1, 2), (1, 3)]).unwrap());
        let s = m.star();
        assert_eq!(
            s.leading_monomial().unwrap(),
            &SwapMonomial::from_pairs(4, &[(1, 3), (1, 2)]).unwrap()
        );
    }
}
