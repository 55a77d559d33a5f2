//! Exact symbolic computation in the symbolic swap algebra: the grlex order,
//! Pauli-fingerprint equality, rewrite reduction, Gröbner division against
//! shipped bases, and the linear bases B2/B3/B4.

pub mod basis;
pub mod groebner;
pub mod monomial;
pub mod pauli;
pub mod poly;
pub mod rewrite;

pub use basis::{b2_cardinality, basis_b2, derive_basis, expand_in_basis, Expander};
pub use groebner::{gb_reduce, GroebnerBasis};
pub use monomial::{grlex_compare, Gen, SwapMonomial};
pub use pauli::{equal_in_algebra, fingerprint, GaussRat, PauliFingerprint, PauliWord};
pub use poly::{parse_polynomial, parse_polynomial_file, SwapPolynomial};
pub use rewrite::{reduce_rewrite, reduce_word};
