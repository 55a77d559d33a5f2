//! Words in the swap generators s_{ij} and the grlex monomial order.

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// One generator s_{ij}, stored with i < j (s_{ij} = s_{ji}).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen {
    i: u8,
    j: u8,
}

impl Gen {
    pub fn new(a: usize, b: usize) -> Result<Gen> {
        if a == b || a == 0 || b == 0 || a > u8::MAX as usize || b > u8::MAX as usize {
            return Err(Error::Invalid(format!("bad generator index pair ({a}, {b})")));
        }
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        Ok(Gen { i: i as u8, j: j as u8 })
    }

    pub fn i(&self) -> usize {
        self.i as usize
    }

    pub fn j(&self) -> usize {
        self.j as usize
    }

    pub fn pair(&self) -> (usize, usize) {
        (self.i as usize, self.j as usize)
    }

    pub fn is_disjoint(&self, other: &Gen) -> bool {
        self.i != other.i && self.i != other.j && self.j != other.i && self.j != other.j
    }

    /// Image of this pair under the transposition `t` (conjugation).
    pub fn conjugate_by(&self, t: &Gen) -> Gen {
        let map = |x: u8| {
            if x == t.i {
                t.j
            } else if x == t.j {
                t.i
            } else {
                x
            }
        };
        let (a, b) = (map(self.i), map(self.j));
        if a < b {
            Gen { i: a, j: b }
        } else {
            Gen { i: b, j: a }
        }
    }

    /// All generators on n points, in alphabet order.
    pub fn alphabet(n: usize) -> Vec<Gen> {
        let mut v = Vec::with_capacity(n * (n - 1) / 2);
        for i in 1..=n as u8 {
            for j in (i + 1)..=n as u8 {
                v.push(Gen { i, j });
            }
        }
        v
    }
}

impl std::fmt::Display for Gen {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "s({},{})", self.i, self.j)
    }
}

/// A word in the generators, with its ambient qubit count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SwapMonomial {
    n: usize,
    word: Vec<Gen>,
}

impl SwapMonomial {
    pub fn one(n: usize) -> SwapMonomial {
        SwapMonomial { n, word: Vec::new() }
    }

    pub fn new(n: usize, word: Vec<Gen>) -> Result<SwapMonomial> {
        for g in &word {
            if g.j() > n {
                return Err(Error::Invalid(format!(
                    "generator {g} exceeds ambient n = {n}"
                )));
            }
        }
        Ok(SwapMonomial { n, word })
    }

    pub fn gen(n: usize, i: usize, j: usize) -> Result<SwapMonomial> {
        Ok(SwapMonomial { n, word: vec![Gen::new(i, j)?] })
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<SwapMonomial> {
        let word = pairs
            .iter()
            .map(|&(a, b)| Gen::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        SwapMonomial::new(n, word)
    }

    pub fn ambient_n(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> &[Gen] {
        &self.word
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    pub fn is_one(&self) -> bool {
        self.word.is_empty()
    }

    /// Concatenation (product of words).
    pub fn concat(&self, other: &SwapMonomial) -> Result<SwapMonomial> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Ok(SwapMonomial { n: self.n, word })
    }

    /// Word reversal; this is the * involution on monomials since every
    /// generator is symmetric.
    pub fn reversed(&self) -> SwapMonomial {
        let mut word = self.word.clone();
        word.reverse();
        SwapMonomial { n: self.n, word }
    }

    /// The permutation of {0, .., n-1} realized by this word under the
    /// left-to-right matrix product of swap matrices. `perm[q] = r` means the
    /// content of position q moves to position r.
    pub fn permutation(&self) -> Vec<u8> {
        let mut dst: Vec<u8> = (0..self.n as u8).collect();
        for g in &self.word {
            dst.swap(g.i() - 1, g.j() - 1);
        }
        dst
    }

    /// grlex comparison assuming equal ambient n.
    pub(crate) fn grlex_cmp_unchecked(&self, other: &SwapMonomial) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl std::fmt::Display for SwapMonomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.word.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl PartialOrd for SwapMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order on monomials: grlex on the word (ambient n must agree inside
/// any one polynomial; it does not participate in the order).
impl Ord for SwapMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grlex_cmp_unchecked(other)
    }
}

/// Graded lexicographic order: degree first, then letter-by-letter with
/// s_{12} < s_{13} < … < s_{1n} < s_{23} < … < s_{n−1,n}.
pub fn grlex_compare(a: &SwapMonomial, b: &SwapMonomial) -> Result<Ordering> {
    if a.ambient_n() != b.ambient_n() {
        return Err(Error::AmbientMismatch(a.ambient_n(), b.ambient_n()));
    }
    Ok(a.grlex_cmp_unchecked(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_orders_by_degree_then_letters() {
        let n = 4;
        let a = SwapMonomial::from_pairs(n, &[(1, 2)]).unwrap();
        let b = SwapMonomial::from_pairs(n, &[(1, 3), (1, 4)]).unwrap();
        assert_eq!(grlex_compare(&a, &b).unwrap(), Ordering::Less);

        let c = SwapMonomial::from_pairs(n, &[(1, 2), (2, 3)]).unwrap();
        let d = SwapMonomial::from_pairs(n, &[(1, 3), (1, 2)]).unwrap();
        assert_eq!(grlex_compare(&c, &d).unwrap(), Ordering::Less);

        assert_eq!(grlex_compare(&c, &c).unwrap(), Ordering::Equal);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = SwapMonomial::from_pairs(3, &[(1, 2)]).unwrap();
        let b = SwapMonomial::from_pairs(4, &[(1, 2)]).unwrap();
        assert!(grlex_compare(&a, &b).is_err());
    }

    #[test]
    fn generator_normalizes_index_order() {
        let g = Gen::new(3, 1).unwrap();
        assert_eq!(g.pair(), (1, 3));
        assert!(Gen::new(2, 2).is_err());
    }

    #[test]
    fn permutation_composition_is_left_to_right() {
        let m = SwapMonomial::from_pairs(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(m.permutation(), vec![1, 2, 0]);
        // equal in the algebra => equal permutations
        let q = SwapMonomial::from_pairs(3, &[(1, 3), (1, 2)]).unwrap();
        assert_eq!(m.permutation(), q.permutation());
    }
}
