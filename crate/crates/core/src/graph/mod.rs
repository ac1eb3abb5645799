//! Small simple undirected graphs stored as one `u64` adjacency row per vertex.
//!
//! Every graph has between 1 and [`MAX_VERTICES`] vertices. Edges are ordered
//! lexicographically as pairs `(u, v)` with `u < v`; [`EdgeIndexing`] maps
//! between those pairs and dense edge ids, and [`EdgeSet`] is a bitset over
//! edge ids.

mod canon;
mod generate;
mod graph6;
mod sets;

pub use canon::{canonical_form, enumerate_graphs, EnumerationMode, MAX_LABELED, MAX_UNLABELED};
pub use generate::{parse_family, turan_edge_count, Family, FamilyError, SplitMix64};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
pub use sets::{EdgeIndexing, EdgeSet, VertexPartition, VertexSet};

use thiserror::Error;

/// Largest supported vertex count: one machine word per adjacency row.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} outside supported range 1..=64")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("adjacency not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("enumeration supports 1 <= n <= {max}, got {n}")]
    EnumerationLimit { n: usize, max: usize },
    #[error("edge set does not belong to this graph")]
    ForeignEdgeSet,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({})", emit_graph6(self))
    }
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking symmetry and loop-freeness.
    pub fn from_adjacency(rows: Vec<u64>) -> Result<Self, GraphError> {
        let g = Graph {
            n: rows.len(),
            adj: rows,
        };
        if g.n == 0 || g.n > MAX_VERTICES {
            return Err(GraphError::VertexCount(g.n));
        }
        let mask = low_mask(g.n);
        for (v, &row) in g.adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(GraphError::VertexOutOfRange {
                    vertex: 63 - (row & !mask).leading_zeros() as usize,
                    n: g.n,
                });
            }
            if row & bit(v) != 0 {
                return Err(GraphError::SelfLoop(v));
            }
            for u in VertexSet(row).iter() {
                if g.adj[u] & bit(v) == 0 {
                    return Err(GraphError::Asymmetric(v, u));
                }
            }
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges, e(G).
    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet(low_mask(self.n))
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !low_mask(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn edge_indexing(&self) -> EdgeIndexing {
        EdgeIndexing::new(self)
    }

    /// Σ d(v)².
    pub fn degree_square_sum(&self) -> u64 {
        (0..self.n).map(|v| (self.degree(v) as u64).pow(2)).sum()
    }

    /// Checks the representation invariants: symmetric rows, empty diagonal,
    /// no bits at or above `n`.
    pub fn is_well_formed(&self) -> bool {
        let mask = low_mask(self.n);
        self.n >= 1
            && self.n <= MAX_VERTICES
            && self.adj.len() == self.n
            && (0..self.n).all(|v| {
                let row = self.adj[v];
                row & !mask == 0
                    && row & bit(v) == 0
                    && VertexSet(row).iter().all(|u| self.adj[u] & bit(v) != 0)
            })
    }

    /// All triangles `(u, v, w)` with `u < v < w`, in lexicographic order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let up = self.adj[u] & !low_mask(u + 1);
            for v in VertexSet(up).iter() {
                let common = up & self.adj[v] & !low_mask(v + 1);
                for w in VertexSet(common).iter() {
                    out.push([u, v, w]);
                }
            }
        }
        out
    }

    pub fn triangle_count(&self) -> u64 {
        let mut t = 0u64;
        for u in 0..self.n {
            let up = self.adj[u] & !low_mask(u + 1);
            for v in VertexSet(up).iter() {
                t += (up & self.adj[v] & !low_mask(v + 1)).count_ones() as u64;
            }
        }
        t
    }

    /// Number of edges with exactly one endpoint in `s`: |[S, S̄]|.
    pub fn cut_size(&self, s: VertexSet) -> usize {
        let inside = s.0 & low_mask(self.n);
        let outside = !inside & low_mask(self.n);
        VertexSet(inside)
            .iter()
            .map(|v| (self.adj[v] & outside).count_ones() as usize)
            .sum()
    }

    /// Number of edges with both endpoints in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter()
            .map(|v| (self.adj[v] & s.0).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Number of edges between the disjoint sets `a` and `b`.
    pub fn edges_between(&self, a: VertexSet, b: VertexSet) -> usize {
        a.iter()
            .map(|v| (self.adj[v] & b.0).count_ones() as usize)
            .sum()
    }

    /// G[S], relabelled to `0..|S|` in increasing order of the original indices.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph, GraphError> {
        let s = VertexSet(s.0 & low_mask(self.n));
        if s.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        let members: Vec<usize> = s.iter().collect();
        let mut adj = vec![0u64; members.len()];
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate() {
                if self.adj[u] & bit(v) != 0 {
                    adj[i] |= bit(j);
                }
            }
        }
        Ok(Graph {
            n: members.len(),
            adj,
        })
    }

    pub fn complement(&self) -> Graph {
        let mask = low_mask(self.n);
        let adj = (0..self.n).map(|v| !self.adj[v] & mask & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union followed by all cross edges between the two copies.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        let left = low_mask(self.n);
        let right = low_mask(n) & !left;
        let mut adj = Vec::with_capacity(n);
        for v in 0..self.n {
            adj.push(self.adj[v] | right);
        }
        for v in 0..other.n {
            adj.push((other.adj[v] << self.n) | left);
        }
        Ok(Graph { n, adj })
    }

    /// Applies the relabelling `v -> perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in self.neighbors(u).iter() {
                adj[perm[u]] |= bit(perm[v]);
            }
        }
        Graph { n: self.n, adj }
    }

    /// A proper 2-colouring restricted to `s`, returned as the colour-0 class.
    /// Lower-indexed vertex of each component gets colour 0.
    pub fn two_coloring_of(&self, s: VertexSet) -> Option<VertexSet> {
        let s = s.0 & low_mask(self.n);
        let mut seen = 0u64;
        let mut side0 = 0u64;
        let mut remaining = s;
        while remaining != 0 {
            let root = remaining.trailing_zeros() as usize;
            let mut frontier = bit(root);
            seen |= frontier;
            side0 |= frontier;
            let mut colour0 = true;
            while frontier != 0 {
                let mut next = 0u64;
                for v in VertexSet(frontier).iter() {
                    next |= self.adj[v] & s;
                }
                let same = if colour0 { side0 } else { seen & !side0 };
                if next & same != 0 {
                    return None;
                }
                next &= !seen;
                seen |= next;
                colour0 = !colour0;
                if colour0 {
                    side0 |= next;
                }
                frontier = next;
            }
            remaining &= !seen;
        }
        Some(VertexSet(side0))
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring_of(self.vertices()).is_some()
    }

    /// Induced subgraph on `s` is bipartite.
    pub fn induces_bipartite(&self, s: VertexSet) -> bool {
        self.two_coloring_of(s).is_some()
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s.0 & !bit(v)) & !self.adj[v] == 0)
    }

    /// Clique number ω(G) with a witness clique. Among maximum cliques the
    /// witness has the lexicographically smallest sorted member list.
    pub fn clique_number(&self) -> (usize, VertexSet) {
        fn grow(g: &Graph, clique: u64, cand: u64, best: &mut (usize, u64)) {
            let size = clique.count_ones() as usize;
            if cand == 0 {
                if size > best.0 {
                    *best = (size, clique);
                }
                return;
            }
            if size + cand.count_ones() as usize <= best.0 {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            grow(g, clique | bit(v), cand & g.adj[v] & !low_mask(v + 1), best);
            grow(g, clique, cand & !bit(v), best);
        }
        let mut best = (0usize, 0u64);
        grow(self, 0, self.vertices().0, &mut best);
        (best.0, VertexSet(best.1))
    }

    /// True when G contains no clique on `r` vertices.
    pub fn is_clique_free(&self, r: usize) -> bool {
        self.clique_number().0 < r
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier).iter() {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == low_mask(self.n)
    }
}
