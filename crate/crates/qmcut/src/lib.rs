//! Bounds and exact values for the extreme eigenvalues of Quantum Max Cut
//! Hamiltonians.
//!
//! Three routes are implemented and cross-checked against a dense
//! brute-force oracle:
//!
//! - exact symbolic computation in the swap-operator algebra
//!   ([`swap`]): grlex monomial order, Pauli-fingerprint equality, rewrite
//!   and Gröbner reduction, and the linear bases B2/B3/B4;
//! - symmetric-group representation theory ([`symrep`], [`tcd`]): clique
//!   constants, Young branching, and the tree clique decomposition with its
//!   exact per-irrep eigenvalue computation;
//! - moment-matrix semidefinite relaxations ([`sdp`]): level-1/level-2 swap
//!   relaxations, plain or constrained to a two-row irrep, exportable in
//!   SDPA sparse format and solvable with an embedded interior-point method.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! cargo run --example clique_constants     # irrep dimensions, eta, Catalan identity
//! cargo run --example fingerprints         # Pauli expansions and algebra equalities
//! cargo run --example rewrite_and_groebner # normal forms, shipped Groebner bases
//! cargo run --example derived_bases        # B2/B3/B4 cardinalities by fingerprint rank
//! cargo run --example decompose_tree       # tree clique decomposition of a graph
//! cargo run --example exact_eigenvalues    # exact per-irrep spectra via the tree
//! cargo run --example star_spectra         # closed-form star eigenvalues vs oracle
//! cargo run --example level2_relaxation    # level-2 SDP vs brute force
//! cargo run --example irrep_relaxation     # irrep-constrained relaxations
//! cargo run --example sdpa_export          # SDPA sparse file round trip
//! ```
//!
//! The `qmcut` binary exposes the same pipeline as subcommands
//! (`decompose`, `eig`, `relax`, `oracle`, `verify`).

pub mod error;
pub mod graph;
pub mod oracle;
pub mod ratio;
pub mod sdp;
pub mod swap;
pub mod symrep;
pub mod tcd;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{parse_graph, GraphClass, WeightedGraph};
pub use symrep::TwoRowPartition;
