mod common;

use proptest::prelude::*;

use tribound::bounds::evaluate_all;
use tribound::constructive::{
    b_split_bipartize, greedy_bipartize, local_search_from, neighborhood_bipartize, CliqueFamily,
    InnerSolver, Pivot, SplitFamily,
};
use tribound::exact::{alpha1_exact, tau1_exact, tau_b_exact};
use tribound::graph::{canonical_form, emit_graph6, parse_graph6};
use tribound::{Graph, VertexPartition};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let edges: Vec<_> = common::pairs(n)
                .into_iter()
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(p, _)| p)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph(64)) {
        prop_assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn triangle_count_matches_oracle(g in graph(12)) {
        prop_assert_eq!(g.triangle_count() as usize, common::triangles(&g).len());
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph(9), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_form(&g.permute(&perm)), canonical_form(&g));
    }

    #[test]
    fn solver_relations(g in graph(9)) {
        let tau_b = tau_b_exact(&g).unwrap().value;
        let tau1 = tau1_exact(&g).value;
        let alpha1 = alpha1_exact(&g).value;
        // Every bipartizing deletion set meets every triangle.
        prop_assert!(tau1 <= tau_b);
        prop_assert!(2 * tau_b <= g.size());
        // Edges on no triangle belong to every maximal triangle-independent set.
        let tris = common::triangles(&g);
        let free = g.edges().filter(|&(u, v)| !tris.iter().any(|t| t.contains(&u) && t.contains(&v))).count();
        prop_assert!(free <= alpha1 && alpha1 <= g.size());
    }

    #[test]
    fn tau_b_moves_by_at_most_one_per_edge(g in graph(9), u in 0usize..9, v in 0usize..9) {
        let n = g.order();
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v && !g.has_edge(u, v));
        let mut h = g.clone();
        h.add_edge(u, v).unwrap();
        let before = tau_b_exact(&g).unwrap().value;
        let after = tau_b_exact(&h).unwrap().value;
        prop_assert!(before <= after && after <= before + 1);
    }

    #[test]
    fn local_search_move_count(g in graph(14)) {
        let start = VertexPartition::from_side(g.order(), g.vertices());
        let (sides, moves) = local_search_from(&g, &start);
        prop_assert!(moves <= g.size());
        prop_assert_eq!(sides.parts(), 2);
    }

    #[test]
    fn constructions_are_certified(g in graph(9)) {
        let tau_b = tau_b_exact(&g).unwrap().value;
        let mut results = vec![greedy_bipartize(&g).unwrap()];
        for family in [CliqueFamily::K5Free, CliqueFamily::K6Free] {
            for inner in [InnerSolver::Exact, InnerSolver::Recursive] {
                results.extend(neighborhood_bipartize(&g, Pivot::BestOverAll, family, inner).ok());
            }
        }
        for family in [SplitFamily::K5Free, SplitFamily::K6FreeCaseA, SplitFamily::K6FreeCaseB] {
            results.extend(b_split_bipartize(&g, family).ok().map(|o| o.result));
        }
        for r in results {
            prop_assert!(r.is_valid_for(&g), "{}", r.method);
            prop_assert!(r.deletion_count() >= tau_b);
        }
    }

    #[test]
    fn no_verdict_fails(g in graph(8)) {
        let rep = evaluate_all(&g);
        prop_assert!(rep.verdicts.iter().all(|v| !v.failed()), "{:?}", rep.graph6);
        prop_assert!(rep.invariants.satisfies_cauchy_schwarz());
    }
}
