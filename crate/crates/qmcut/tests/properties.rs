//! Property tests for the algebra core and graph operations.

use proptest::prelude::*;

use qmcut::graph::WeightedGraph;
use qmcut::ratio::rat_i64;
use qmcut::swap::monomial::{Gen, SwapMonomial};
use qmcut::swap::pauli::{equal_in_algebra, fingerprint};
use qmcut::swap::{gb_reduce, reduce_rewrite, SwapPolynomial};

fn arb_word(n: usize, max_deg: usize) -> impl Strategy<Value = SwapMonomial> {
    let gens = Gen::alphabet(n);
    prop::collection::vec(0..gens.len(), 0..=max_deg).prop_map(move |idx| {
        SwapMonomial::new(n, idx.into_iter().map(|i| gens[i]).collect()).unwrap()
    })
}

fn arb_poly(n: usize, max_deg: usize) -> impl Strategy<Value = SwapPolynomial> {
    prop::collection::vec((arb_word(n, max_deg), -3i64..=3), 1..4).prop_map(move |terms| {
        let mut p = SwapPolynomial::zero(n);
        for (m, c) in terms {
            p.add_term(m, rat_i64(c));
        }
        p
    })
}

fn arb_graph(n: usize) -> impl Strategy<Value = WeightedGraph> {
    let pairs: Vec<(u32, u32)> = {
        let mut v = Vec::new();
        for i in 1..=n as u32 {
            for j in (i + 1)..=n as u32 {
                v.push((i, j));
            }
        }
        v
    };
    let m = pairs.len();
    prop::collection::vec(any::<bool>(), m).prop_map(move |mask| {
        let edges: Vec<(u32, u32)> = pairs
            .iter()
            .zip(&mask)
            .filter(|(_, &b)| b)
            .map(|(&e, _)| e)
            .collect();
        WeightedGraph::unit(n, &edges).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fingerprint_is_multiplicative(p in arb_poly(5, 3), q in arb_poly(5, 3)) {
        let lhs = fingerprint(&p.mul(&q).unwrap());
        let rhs = fingerprint(&p).mul(&fingerprint(&q));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fingerprint_is_linear(p in arb_poly(4, 3), q in arb_poly(4, 3)) {
        let mut sum = fingerprint(&p);
        sum.add_scaled(&fingerprint(&q), &rat_i64(1));
        prop_assert_eq!(fingerprint(&p.add(&q).unwrap()), sum);
    }

    #[test]
    fn rewrite_preserves_class_and_order(p in arb_poly(5, 4)) {
        let r = reduce_rewrite(&p);
        prop_assert!(equal_in_algebra(&p, &r).unwrap());
        if let (Some(lp), Some(lr)) = (p.leading_monomial(), r.leading_monomial()) {
            prop_assert!(lr <= lp);
        }
    }

    #[test]
    fn gb_reduce_is_idempotent_and_sound(p in arb_poly(4, 3)) {
        let gb = qmcut::swap::groebner::gb_swap_4();
        let r = gb_reduce(&p, &gb);
        prop_assert!(equal_in_algebra(&p, &r).unwrap());
        prop_assert_eq!(gb_reduce(&r, &gb), r);
    }

    #[test]
    fn complement_is_involutive(g in arb_graph(6)) {
        let c = g.complement();
        prop_assert_eq!(c.complement(), g.clone());
        let n = g.n();
        prop_assert_eq!(g.edge_count() + c.edge_count(), n * (n - 1) / 2);
    }

    #[test]
    fn components_partition_edges_and_vertices(g in arb_graph(6)) {
        let comps = g.connected_components();
        let vertex_total: usize = comps.iter().map(|c| c.n()).sum();
        let edge_total: usize = comps.iter().map(|c| c.edge_count()).sum();
        prop_assert_eq!(vertex_total, g.n());
        prop_assert_eq!(edge_total, g.edge_count());
        // deterministic order by smallest label
        for w in comps.windows(2) {
            prop_assert!(w[0].vertices()[0] < w[1].vertices()[0]);
        }
    }
}
