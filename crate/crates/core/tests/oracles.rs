//! Exact solvers and the enumerator against brute force on every small graph.

mod common;

use std::collections::BTreeSet;

use tribound::constructive::{
    merge_parts, merge_split_costs, neighborhood_bipartize_traced, CliqueFamily, InnerSolver, Pivot,
};
use tribound::exact::{
    alpha1_exact, b_exact, is_triangle_cover, is_triangle_independent, leaves_bipartite,
    max_p_partite_exact, tau1_exact, tau_b_exact,
};
use tribound::graph::{
    canonical_form, emit_graph6, enumerate_graphs, parse_graph6, EnumerationMode,
};
use tribound::{Graph, VertexPartition};

fn ids(set: &tribound::EdgeSet) -> Vec<usize> {
    set.iter().collect()
}

#[test]
fn triangles_and_cliques() {
    for g in common::labeled_up_to(5) {
        assert_eq!(g.triangles(), common::triangles(&g), "{g:?}");
        assert_eq!(g.triangle_count() as usize, common::triangles(&g).len());
        assert_eq!(g.clique_number().0, common::omega(&g), "{g:?}");
    }
}

#[test]
fn edge_ids_follow_lexicographic_pairs() {
    for g in common::unlabeled_up_to(5) {
        assert_eq!(g.edge_indexing().pairs(), common::edge_list(&g).as_slice());
    }
}

#[test]
fn alpha1_and_tau1_with_witnesses() {
    for g in common::unlabeled_up_to(6) {
        let a = alpha1_exact(&g);
        assert_eq!((a.value, ids(&a.witness)), common::alpha1(&g), "α₁ {g:?}");
        assert!(is_triangle_independent(&g, &a.witness));
        let t = tau1_exact(&g);
        assert_eq!((t.value, ids(&t.witness)), common::tau1(&g), "τ₁ {g:?}");
        assert!(is_triangle_cover(&g, &t.witness));
    }
}

#[test]
fn tau_b_and_b_with_witnesses() {
    for g in common::labeled_up_to(5)
        .iter()
        .chain(&common::unlabeled_up_to(6))
    {
        let t = tau_b_exact(g).unwrap();
        let side: Vec<usize> = t.witness.sides.members(0).iter().collect();
        assert_eq!((t.value, side), common::tau_b(g), "τ_B {g:?}");
        assert!(leaves_bipartite(g, &t.witness.deletions, &t.witness.sides));

        let r = b_exact(g).unwrap();
        assert_eq!(
            (r.value, r.witness.iter().collect()),
            common::b(g),
            "b {g:?}"
        );
    }
}

#[test]
fn max_p_partite_with_witnesses() {
    for g in common::unlabeled_up_to(6) {
        for p in 2..=4 {
            let r = max_p_partite_exact(&g, p).unwrap();
            let (kept, assignment) = common::max_p_partite(&g, p);
            assert_eq!(r.value, kept, "p={p} {g:?}");
            assert_eq!(r.witness.assignment(), assignment.as_slice(), "p={p} {g:?}");
        }
    }
}

#[test]
fn unlabeled_enumeration_is_one_per_class() {
    for n in 1..=5 {
        let brute: BTreeSet<_> = common::all_labeled(n).iter().map(common::iso_key).collect();
        let ours: Vec<_> = enumerate_graphs(n, EnumerationMode::Unlabeled)
            .unwrap()
            .map(|g| common::iso_key(&g))
            .collect();
        let distinct: BTreeSet<_> = ours.iter().cloned().collect();
        assert_eq!(distinct.len(), ours.len(), "duplicate class at n={n}");
        assert_eq!(distinct, brute, "n={n}");
    }
}

#[test]
fn canonical_form_is_a_complete_invariant() {
    let graphs = common::labeled_up_to(5);
    let mut seen = std::collections::BTreeMap::new();
    for g in &graphs {
        let canon = canonical_form(g);
        let key = common::iso_key(g);
        if let Some(prev) = seen.insert(canon.clone(), key.clone()) {
            assert_eq!(prev, key, "{g:?}");
        }
    }
    let classes: BTreeSet<_> = graphs.iter().map(common::iso_key).collect();
    assert_eq!(seen.len(), classes.len());
}

#[test]
fn labeled_enumeration_matches_brute_force() {
    for n in 1..=5 {
        let ours: BTreeSet<Graph> = enumerate_graphs(n, EnumerationMode::Labeled)
            .unwrap()
            .collect();
        let brute: BTreeSet<Graph> = common::all_labeled(n).into_iter().collect();
        assert_eq!(ours, brute, "n={n}");
    }
}

#[test]
fn graph6_round_trip_on_corpus() {
    for g in common::unlabeled_up_to(6) {
        assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }
}

#[test]
fn merge_parts_is_best_balanced_split() {
    // Greedy proper colouring, then every balanced split re-enumerated by hand.
    for g in common::unlabeled_up_to(6) {
        let n = g.order();
        let mut colour = vec![0usize; n];
        for v in 0..n {
            colour[v] = (0..)
                .find(|&c| (0..v).all(|u| !g.has_edge(u, v) || colour[u] != c))
                .unwrap();
        }
        let k = colour.iter().max().unwrap() + 1;
        let m = k.div_ceil(2).max(1);
        let parts = VertexPartition::new(k, colour.clone()).unwrap();
        let r = merge_parts(&g, &parts, m).unwrap();

        let mut best = usize::MAX;
        for mask in 0u64..1 << (2 * m) {
            if mask & 1 == 1 && mask.count_ones() as usize == m {
                let side: u64 = (0..n)
                    .filter(|&v| mask >> colour[v] & 1 == 1)
                    .map(|v| 1 << v)
                    .sum();
                best = best.min(common::monochromatic(&g, side));
            }
        }
        assert_eq!(r.deletion_count(), best, "{g:?}");
        let costs = merge_split_costs(&g, &parts, m).unwrap();
        assert_eq!(costs.iter().map(|c| c.1).min(), Some(best));
    }
}

#[test]
fn neighbourhood_placements_keep_the_majority() {
    for g in common::unlabeled_up_to(6) {
        for v in 0..g.order() {
            for inner in [InnerSolver::Exact, InnerSolver::Recursive] {
                let Ok(o) = neighborhood_bipartize_traced(
                    &g,
                    Pivot::Vertex(v),
                    CliqueFamily::K6Free,
                    inner,
                ) else {
                    continue;
                };
                assert!(
                    o.placements.iter().all(|p| p.same <= p.cross),
                    "{g:?} pivot {v}"
                );
                assert!(o.result.is_valid_for(&g));
            }
        }
    }
}
