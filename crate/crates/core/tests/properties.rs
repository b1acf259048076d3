//! Property tests for the structural invariants that should hold on every
//! graph, not just the curated fixtures.

use jfgraph::exact::{char_poly, laplacian_matrix, signless_laplacian_matrix, MatrixKind};
use jfgraph::graph::Graph;
use jfgraph::graph6;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

/// Random labeled graph: order plus an edge-presence bit per vertex pair.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), pairs))
        })
        .prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[idx] {
                        edges.push((i, j));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).expect("generated pairs are simple")
        })
}

proptest! {
    #[test]
    fn graph6_round_trip_is_identity(g in arb_graph(64)) {
        let encoded = graph6::encode(&g);
        let decoded = graph6::decode(&encoded).unwrap();
        prop_assert_eq!(decoded, g);
    }

    #[test]
    fn handshake_and_complement(g in arb_graph(24)) {
        let n = g.order();
        let degree_sum: usize = (0..n).map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.size());

        let comp = g.complement();
        prop_assert_eq!(g.size() + comp.size(), n * n.saturating_sub(1) / 2);
        prop_assert_eq!(comp.complement(), g);
    }

    #[test]
    fn line_graph_size_identities(g in arb_graph(16)) {
        let l = g.line_graph();
        prop_assert_eq!(l.order(), g.size());
        let expected: usize = (0..g.order())
            .map(|v| g.degree(v) * g.degree(v).saturating_sub(1) / 2)
            .sum();
        prop_assert_eq!(l.size(), expected);
    }

    #[test]
    fn zero_multiplicities_count_components(g in arb_graph(9)) {
        let zero = BigInt::zero();
        let p_l = char_poly(&laplacian_matrix(&g));
        prop_assert_eq!(p_l.root_multiplicity(&zero), g.components().len());

        let p_q = char_poly(&signless_laplacian_matrix(&g));
        prop_assert_eq!(p_q.root_multiplicity(&zero), g.bipartite_component_count());
    }

    #[test]
    fn trace_coefficient_and_newton_sums(g in arb_graph(8)) {
        let n = g.order();
        for kind in MatrixKind::ALL {
            let m = kind.matrix(&g);
            let p = char_poly(&m);
            prop_assert_eq!(p.degree(), n);
            if n > 0 {
                prop_assert_eq!(p.coeff(n - 1), &-m.trace());
            }
            // Power sums from the coefficients equal exact traces.
            let sums = p.power_sums(4);
            let mut power = m.clone();
            for k in 1..=4usize {
                prop_assert_eq!(&power.trace(), &sums[k]);
                if k < 4 {
                    power = power.mul(&m);
                }
            }
        }
    }

    #[test]
    fn bipartite_components_vanish_iff_odd_cycles(g in arb_graph(10)) {
        let none_bipartite = g.bipartite_component_count() == 0;
        let every_component_has_odd_cycle = g
            .components()
            .iter()
            .all(|comp| {
                // A component has an odd cycle iff it is not 2-colorable;
                // check by rebuilding the component as its own graph.
                let index: std::collections::HashMap<usize, usize> = comp
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| (v, i))
                    .collect();
                let mut edges = Vec::new();
                for &v in comp {
                    for u in g.neighbors(v) {
                        if u > v && index.contains_key(&u) {
                            edges.push((index[&v], index[&u]));
                        }
                    }
                }
                let sub = Graph::from_edges(comp.len(), &edges).unwrap();
                !sub.is_bipartite()
            });
        prop_assert_eq!(none_bipartite, every_component_has_odd_cycle);
    }

    #[test]
    fn cospectrality_is_reflexive_and_symmetric(g in arb_graph(7), h in arb_graph(7)) {
        for kind in MatrixKind::ALL {
            prop_assert!(jfgraph::invariants::cospectral(&g, &g, kind));
            prop_assert_eq!(
                jfgraph::invariants::cospectral(&g, &h, kind),
                jfgraph::invariants::cospectral(&h, &g, kind)
            );
        }
    }
}
