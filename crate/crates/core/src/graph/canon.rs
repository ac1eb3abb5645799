//! Canonical labelling for small graphs and exhaustive enumeration.
//!
//! The canonical form is the lexicographically smallest relabelled adjacency
//! over all leaves of an individualisation-refinement tree. Refinement splits
//! cells by neighbour counts into every other cell until the ordered
//! partition is equitable; cells are ordered by those counts, never by vertex
//! label, so the leaf set is isomorphism-invariant. Interchangeable twins in
//! a target cell are individualised once, since swapping them is an
//! automorphism.

use std::collections::BTreeSet;

use super::{bit, low_mask, Graph, GraphError, VertexSet};

pub const MAX_LABELED: usize = 7;
pub const MAX_UNLABELED: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationMode {
    /// All `2^C(n,2)` graphs on vertex set `0..n`.
    Labeled,
    /// One canonical representative per isomorphism class.
    Unlabeled,
}

/// Splits every cell by its neighbour-count signature until nothing changes.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    loop {
        let mut next: Vec<u64> = Vec::with_capacity(g.order());
        for &cell in cells.iter() {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = VertexSet(cell)
                .iter()
                .map(|v| {
                    let sig = cells
                        .iter()
                        .map(|&d| (g.adjacency()[v] & d).count_ones())
                        .collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut i = 0;
            while i < keyed.len() {
                let mut part = 0u64;
                let mut j = i;
                while j < keyed.len() && keyed[j].0 == keyed[i].0 {
                    part |= bit(keyed[j].1);
                    j += 1;
                }
                next.push(part);
                i = j;
            }
        }
        if next.len() == cells.len() {
            return;
        }
        *cells = next;
    }
}

fn relabel(g: &Graph, cells: &[u64]) -> Vec<u64> {
    let mut perm = vec![0usize; g.order()];
    for (label, &cell) in cells.iter().enumerate() {
        perm[cell.trailing_zeros() as usize] = label;
    }
    let mut rows = vec![0u64; g.order()];
    for u in 0..g.order() {
        for v in g.neighbors(u).iter() {
            rows[perm[u]] |= bit(perm[v]);
        }
    }
    rows
}

fn search(g: &Graph, mut cells: Vec<u64>, best: &mut Option<Vec<u64>>) {
    refine(g, &mut cells);
    let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
        let code = relabel(g, &cells);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    };
    let cell = cells[target];
    let adj = g.adjacency();
    let mut tried = 0u64;
    for v in VertexSet(cell).iter() {
        let twin = VertexSet(tried)
            .iter()
            .any(|u| adj[u] & !bit(v) == adj[v] & !bit(u));
        if twin {
            continue;
        }
        tried |= bit(v);
        let mut branch = Vec::with_capacity(cells.len() + 1);
        branch.extend_from_slice(&cells[..target]);
        branch.push(bit(v));
        branch.push(cell & !bit(v));
        branch.extend_from_slice(&cells[target + 1..]);
        search(g, branch, best);
    }
}

/// Canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    let mut best = None;
    search(g, vec![low_mask(g.order())], &mut best);
    Graph::from_adjacency(best.expect("search reaches a leaf")).expect("relabelled graph")
}

/// Every graph on `n` vertices, labelled or up to isomorphism.
///
/// Labelled order: bit `i` of a counter selects the `i`-th pair of K_n in
/// lexicographic order. Unlabelled graphs are canonical forms in increasing
/// adjacency order, built by adding a vertex to each class on `n - 1`
/// vertices in every possible way.
pub fn enumerate_graphs(
    n: usize,
    mode: EnumerationMode,
) -> Result<Box<dyn Iterator<Item = Graph> + Send>, GraphError> {
    let max = match mode {
        EnumerationMode::Labeled => MAX_LABELED,
        EnumerationMode::Unlabeled => MAX_UNLABELED,
    };
    if n == 0 || n > max {
        return Err(GraphError::EnumerationLimit { n, max });
    }
    match mode {
        EnumerationMode::Labeled => {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let count = 1u64 << pairs.len();
            Ok(Box::new((0..count).map(move |mask| {
                let mut rows = vec![0u64; n];
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        rows[u] |= bit(v);
                        rows[v] |= bit(u);
                    }
                }
                Graph::from_adjacency(rows).expect("valid rows")
            })))
        }
        EnumerationMode::Unlabeled => Ok(Box::new(unlabeled(n).into_iter())),
    }
}

fn unlabeled(n: usize) -> Vec<Graph> {
    let mut level: BTreeSet<Graph> = BTreeSet::new();
    level.insert(Graph::empty(1).expect("n = 1"));
    for k in 2..=n {
        let mut next = BTreeSet::new();
        for h in &level {
            for nbrs in 0..(1u64 << (k - 1)) {
                let mut rows: Vec<u64> = h.adjacency().to_vec();
                for u in VertexSet(nbrs).iter() {
                    rows[u] |= bit(k - 1);
                }
                rows.push(nbrs);
                let g = Graph::from_adjacency(rows).expect("valid rows");
                next.insert(canonical_form(&g));
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_family;

    #[test]
    fn canonical_form_is_label_invariant() {
        let g = parse_family("gnp(8,0.4,3)", 0).unwrap().build().unwrap();
        let perm = [3, 7, 0, 5, 1, 6, 2, 4];
        assert_eq!(canonical_form(&g), canonical_form(&g.permute(&perm)));
        let c5 = parse_family("cycle(5)", 0).unwrap().build().unwrap();
        assert_eq!(
            canonical_form(&c5),
            canonical_form(&c5.permute(&[2, 0, 4, 1, 3]))
        );
    }

    #[test]
    fn separates_non_isomorphic_regular_graphs() {
        // C_6 versus two disjoint triangles: both 2-regular on six vertices.
        let c6 = parse_family("cycle(6)", 0).unwrap().build().unwrap();
        let two_k3 =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_ne!(canonical_form(&c6), canonical_form(&two_k3));
    }

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=7)
            .map(|n| {
                enumerate_graphs(n, EnumerationMode::Unlabeled)
                    .unwrap()
                    .count()
            })
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156, 1044]);
        assert_eq!(
            enumerate_graphs(3, EnumerationMode::Labeled)
                .unwrap()
                .count(),
            8
        );
    }

    #[test]
    fn limits() {
        assert!(enumerate_graphs(8, EnumerationMode::Labeled).is_err());
        assert!(enumerate_graphs(9, EnumerationMode::Unlabeled).is_err());
        assert!(enumerate_graphs(0, EnumerationMode::Unlabeled).is_err());
    }
}
