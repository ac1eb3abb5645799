//! Largest vertex set inducing a bipartite subgraph.
//!
//! Vertices are decided in index order, include before exclude; a vertex is
//! only included while the chosen set stays free of odd cycles. The upper
//! bound greedily covers the undecided vertices with cliques, each of which
//! can contribute at most two vertices.

use super::{check_limit, Certified, SolverError, MAX_B_VERTICES};
use crate::graph::{bit, low_mask, Graph, VertexSet};

struct Search<'a> {
    g: &'a Graph,
    best: Option<(usize, u64)>,
}

impl Search<'_> {
    fn clique_cover_bound(&self, mut rest: u64) -> usize {
        let adj = self.g.adjacency();
        let mut bound = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let mut clique = bit(v);
            let mut cand = rest & adj[v];
            while cand != 0 {
                let u = cand.trailing_zeros() as usize;
                clique |= bit(u);
                cand &= adj[u] & !bit(u);
            }
            bound += clique.count_ones().min(2) as usize;
            rest &= !clique;
        }
        bound
    }

    fn dfs(&mut self, chosen: u64, i: usize) {
        let n = self.g.order();
        let size = chosen.count_ones() as usize;
        if i == n {
            if self.best.is_none_or(|(b, _)| size > b) {
                self.best = Some((size, chosen));
            }
            return;
        }
        if let Some((best, _)) = self.best {
            if size + self.clique_cover_bound(low_mask(n) & !low_mask(i)) <= best {
                return;
            }
        }
        let with = chosen | bit(i);
        if self.g.induces_bipartite(VertexSet(with)) {
            self.dfs(with, i + 1);
        }
        self.dfs(chosen, i + 1);
    }
}

/// b(G) with a largest vertex set inducing a bipartite subgraph.
pub fn b_exact(g: &Graph) -> Result<Certified<VertexSet>, SolverError> {
    check_limit("b_exact", g, MAX_B_VERTICES)?;
    let mut search = Search { g, best: None };
    search.dfs(0, 0);
    let (value, set) = search.best.expect("the empty set is bipartite");
    Ok(Certified::optimal(value, VertexSet(set)))
}
