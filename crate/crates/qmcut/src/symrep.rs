//! Closed-form quantities for two-row irreps of the symmetric group:
//! dimensions, transposition characters, clique constants, branching sets.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The partition [n−k, k] of n, labeling a two-row irrep of S_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoRowPartition {
    pub n: usize,
    pub k: usize,
}

impl TwoRowPartition {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 || 2 * k > n {
            return Err(Error::Invalid(format!(
                "[{}, {}] is not a two-row partition shape",
                n.saturating_sub(k),
                k
            )));
        }
        Ok(TwoRowPartition { n, k })
    }

    /// All two-row partitions of n, k = 0..=n/2.
    pub fn all(n: usize) -> Vec<TwoRowPartition> {
        (0..=n / 2).map(|k| TwoRowPartition { n, k }).collect()
    }

    pub fn rows(&self) -> (usize, usize) {
        (self.n - self.k, self.k)
    }
}

impl std::fmt::Display for TwoRowPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.n - self.k, self.k)
    }
}

/// Binomial coefficient by the multiplicative formula, exact.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// Dimension of the [n−k, k] irrep: ((n−2k+1)/(n−k+1))·C(n, k).
pub fn irrep_dim(p: TwoRowPartition) -> BigInt {
    let (n, k) = (p.n, p.k);
    let num = BigInt::from(n - 2 * k + 1) * binomial(n, k);
    let den = BigInt::from(n - k + 1);
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Character of any transposition in the [n−k, k] irrep.
///
/// The Murnaghan–Nakayama four-case formula applies for n > 3; the small
/// cases and the trivial representation are handled directly.
pub fn transposition_character(p: TwoRowPartition) -> BigInt {
    let (n, k) = (p.n, p.k);
    if k == 0 {
        return BigInt::one();
    }
    match (n, k) {
        (2, 1) => return BigInt::from(-1),
        (3, 1) => return BigInt::zero(),
        _ => {}
    }
    // removing a horizontal domino leaves a partition of n-2
    let dim = |rows: (i64, i64)| -> BigInt {
        let (a, b) = rows;
        if a < b || b < 0 {
            return BigInt::zero();
        }
        irrep_dim(TwoRowPartition { n: (a + b) as usize, k: b as usize })
    };
    let (nk, ki) = ((n - k) as i64, k as i64);
    if k == 1 {
        dim((nk - 2, ki))
    } else if 2 * k + 2 <= n {
        // 2 <= k <= n/2 - 1
        dim((nk - 2, ki)) + dim((nk, ki - 2))
    } else if 2 * k + 1 == n {
        dim((nk, ki - 2))
    } else {
        // k = n/2
        dim((nk, ki - 2)) - dim((nk - 1, ki - 1))
    }
}

/// Scalar by which H_{K_n} acts in the [n−k, k] irrep: 2k(n+1) − 2k².
pub fn eta(p: TwoRowPartition) -> BigInt {
    let (n, k) = (BigInt::from(p.n), BigInt::from(p.k));
    2 * &k * (&n + 1) - 2 * &k * &k
}

/// Normalized transposition-character sum over clique edges:
/// η̂ = C(n,2) + k² − k(n+1); satisfies η = 2·C(n,2) − 2·η̂.
pub fn eta_hat(p: TwoRowPartition) -> BigInt {
    let (n, k) = (BigInt::from(p.n), BigInt::from(p.k));
    binomial(p.n, 2) + &k * &k - &k * (&n + 1)
}

/// Two-row partitions of m reachable from [n−k, k] by removing boxes:
/// {[m−j, j] : max(0, m+k−n) ≤ j ≤ min(k, ⌊m/2⌋)}.
pub fn rstrct(m: usize, p: TwoRowPartition) -> Result<Vec<TwoRowPartition>> {
    if m < 1 || m >= p.n {
        return Err(Error::Invalid(format!(
            "restriction target {m} must satisfy 1 <= m < {}",
            p.n
        )));
    }
    let lo = (m + p.k).saturating_sub(p.n);
    let hi = p.k.min(m / 2);
    Ok((lo..=hi).map(|j| TwoRowPartition { n: m, k: j }).collect())
}

/// n-th Catalan number, (1/(n+1))·C(2n, n).
pub fn catalan(n: usize) -> BigInt {
    binomial(2 * n, n) / BigInt::from(n + 1)
}

/// Littlewood–Richardson coefficient c^λ_{μν} for two-row shapes, which is
/// always 0 or 1: the multiplicity of μ ⊠ ν in the restriction of λ to
/// S_{|μ|} × S_{|ν|}.
///
/// Coupling matters when a restriction is split over several subgroups at
/// once: not every pair from the single-subgroup branching sets occurs
/// jointly, and the LR rule decides which do.
pub fn lr_two_row(lambda: TwoRowPartition, mu: TwoRowPartition, nu: TwoRowPartition) -> bool {
    if mu.n + nu.n != lambda.n {
        return false;
    }
    let (l1, l2) = lambda.rows();
    let (m1, m2) = mu.rows();
    let (n1, n2) = nu.rows();
    if m1 > l1 || m2 > l2 {
        return false;
    }
    // skew shape λ/μ: row 1 is all 1s; row 2 has x leading 1s then 2s.
    // Column strictness forces the 1s of row 2 left of column m1, the
    // lattice condition caps the 2s by the number of row-1 cells.
    let row1 = l1 - m1;
    let row2 = l2 - m2;
    if n1 < row1 {
        return false;
    }
    let x = n1 - row1;
    x <= row2 && n2 == row2 - x && m2 + x <= m1 && row2 - x <= row1
}

/// All pairs (μ ⊢ m, ν ⊢ n−m) of two-row partitions occurring in the
/// restriction of λ to S_m × S_{n−m}.
pub fn branching_pairs(
    lambda: TwoRowPartition,
    m: usize,
) -> Result<Vec<(TwoRowPartition, TwoRowPartition)>> {
    if m < 1 || m >= lambda.n {
        return Err(Error::Invalid(format!(
            "split size {m} must satisfy 1 <= m < {}",
            lambda.n
        )));
    }
    let mut out = Vec::new();
    for mu in TwoRowPartition::all(m) {
        for nu in TwoRowPartition::all(lambda.n - m) {
            if lr_two_row(lambda, mu, nu) {
                out.push((mu, nu));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, k: usize) -> TwoRowPartition {
        TwoRowPartition::new(n, k).unwrap()
    }

    /// Brute-force count of standard Young tableaux of shape [n−k, k]:
    /// lattice paths where every prefix has at least as many first-row
    /// entries as second-row entries.
    fn syt_count(n: usize, k: usize) -> u64 {
        fn rec(a: usize, b: usize, ra: usize, rb: usize) -> u64 {
            if ra == a && rb == b {
                return 1;
            }
            let mut t = 0;
            if ra < a {
                t += rec(a, b, ra + 1, rb);
            }
            if rb < b && rb < ra {
                t += rec(a, b, ra, rb + 1);
            }
            t
        }
        rec(n - k, k, 0, 0)
    }

    #[test]
    fn dims_match_hook_length_values() {
        assert_eq!(irrep_dim(p(7, 2)), BigInt::from(14));
        assert_eq!(irrep_dim(p(8, 4)), BigInt::from(14));
        assert_eq!(irrep_dim(p(9, 0)), BigInt::from(1));
        assert_eq!(irrep_dim(p(6, 3)), BigInt::from(5));
    }

    #[test]
    fn dims_match_tableau_enumeration() {
        for n in 1..=10 {
            for k in 0..=n / 2 {
                assert_eq!(irrep_dim(p(n, k)), BigInt::from(syt_count(n, k)), "[{n},{k}]");
            }
        }
    }

    #[test]
    fn transposition_characters() {
        assert_eq!(transposition_character(p(5, 0)), BigInt::from(1));
        assert_eq!(transposition_character(p(2, 1)), BigInt::from(-1));
        assert_eq!(transposition_character(p(7, 2)), BigInt::from(6));
        assert_eq!(transposition_character(p(3, 1)), BigInt::from(0));
    }

    #[test]
    fn eta_values_from_worked_example() {
        assert_eq!(eta(p(6, 3)), BigInt::from(24));
        assert_eq!(eta(p(5, 2)), BigInt::from(16));
        assert_eq!(eta(p(4, 2)), BigInt::from(12));
        assert_eq!(eta(p(4, 1)), BigInt::from(8));
        assert_eq!(eta(p(3, 1)), BigInt::from(6));
        assert_eq!(eta(p(2, 1)), BigInt::from(4));
        for n in 1..=9 {
            assert_eq!(eta(p(n, 0)), BigInt::zero());
        }
    }

    #[test]
    fn eta_hat_values() {
        assert_eq!(eta_hat(p(4, 2)), BigInt::zero());
        assert_eq!(eta_hat(p(4, 1)), BigInt::from(2));
        for n in 2..=9 {
            assert_eq!(eta_hat(p(n, 0)), binomial(n, 2));
        }
    }

    #[test]
    fn eta_consistency_with_characters() {
        // eta = 2 C(n,2) (chi_e - chi_t) / chi_e, exactly
        for n in 4..=12 {
            for k in 0..=n / 2 {
                let pa = p(n, k);
                let chi_e = irrep_dim(pa);
                let chi_t = transposition_character(pa);
                let lhs = eta(pa) * &chi_e;
                let rhs = 2 * binomial(n, 2) * (&chi_e - &chi_t);
                assert_eq!(lhs, rhs, "[{n},{k}]");
                assert_eq!(eta(pa), 2 * binomial(n, 2) - 2 * eta_hat(pa));
            }
        }
    }

    #[test]
    fn eta_strictly_increasing_in_k() {
        for n in 2..=14 {
            for k in 1..=n / 2 {
                assert!(eta(p(n, k)) > eta(p(n, k - 1)));
            }
        }
    }

    #[test]
    fn catalan_sum_of_squared_dims() {
        for n in 1..=20 {
            let total: BigInt = (0..=n / 2)
                .map(|k| {
                    let d = irrep_dim(p(n, k));
                    &d * &d
                })
                .sum();
            assert_eq!(total, catalan(n));
        }
        assert_eq!(catalan(3), BigInt::from(5));
        assert_eq!(catalan(4), BigInt::from(14));
        assert_eq!(catalan(1), BigInt::from(1));
    }

    #[test]
    fn lr_restriction_dimensions() {
        // dim λ = Σ_{μ,ν} c^λ_{μν} dim μ dim ν across every split: for
        // two-row λ all restriction components are two-row × two-row
        for n in 2..=12usize {
            for k in 0..=n / 2 {
                let lambda = p(n, k);
                for m in 1..n {
                    let total: BigInt = branching_pairs(lambda, m)
                        .unwrap()
                        .into_iter()
                        .map(|(mu, nu)| irrep_dim(mu) * irrep_dim(nu))
                        .sum();
                    assert_eq!(total, irrep_dim(lambda), "[{n},{k}] split {m}");
                }
            }
        }
    }

    #[test]
    fn lr_is_symmetric_and_matches_characters() {
        for n in 2..=10usize {
            for k in 0..=n / 2 {
                let lambda = p(n, k);
                for m in 1..n {
                    for mu in TwoRowPartition::all(m) {
                        for nu in TwoRowPartition::all(n - m) {
                            assert_eq!(
                                lr_two_row(lambda, mu, nu),
                                lr_two_row(lambda, nu, mu),
                                "symmetry {lambda} {mu} {nu}"
                            );
                        }
                    }
                }
            }
        }
        // [2,2] restricted to S2 x S2 contains exactly ([2],[2]) and
        // ([1,1],[1,1]); [3,1] contains the three mixed-or-trivial pairs
        let l22 = p(4, 2);
        assert!(lr_two_row(l22, p(2, 0), p(2, 0)));
        assert!(lr_two_row(l22, p(2, 1), p(2, 1)));
        assert!(!lr_two_row(l22, p(2, 0), p(2, 1)));
        let l31 = p(4, 1);
        assert!(lr_two_row(l31, p(2, 0), p(2, 0)));
        assert!(lr_two_row(l31, p(2, 0), p(2, 1)));
        assert!(lr_two_row(l31, p(2, 1), p(2, 0)));
        assert!(!lr_two_row(l31, p(2, 1), p(2, 1)));
    }

    #[test]
    fn branching_pairs_project_to_rstrct() {
        // the μ values occurring in pairs are exactly Rstrct(m, λ)
        for n in 3..=10usize {
            for k in 0..=n / 2 {
                let lambda = p(n, k);
                for m in 1..n {
                    let mut mus: Vec<TwoRowPartition> = branching_pairs(lambda, m)
                        .unwrap()
                        .into_iter()
                        .map(|(mu, _)| mu)
                        .collect();
                    mus.sort();
                    mus.dedup();
                    assert_eq!(mus, rstrct(m, lambda).unwrap(), "[{n},{k}] m={m}");
                }
            }
        }
    }

    #[test]
    fn rstrct_cases() {
        assert_eq!(rstrct(5, p(6, 3)).unwrap(), vec![p(5, 2)]);
        assert_eq!(rstrct(4, p(5, 2)).unwrap(), vec![p(4, 1), p(4, 2)]);
        assert_eq!(rstrct(7, p(8, 0)).unwrap(), vec![p(7, 0)]);
        assert!(rstrct(6, p(6, 3)).is_err());
        assert!(rstrct(0, p(6, 3)).is_err());
        // shape bounds: first row <= n-k, second row <= k
        for n in 2..=10usize {
            for k in 0..=n / 2 {
                for m in 1..n {
                    for q in rstrct(m, p(n, k)).unwrap() {
                        assert!(q.n - q.k <= n - k && q.k <= k);
                    }
                }
            }
        }
    }
}
