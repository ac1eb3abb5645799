//! Maximum triangle-independent edge set by branch and bound over edge ids.
//!
//! Edges are decided in id order, include before exclude. Including an edge
//! excludes every edge that shares a triangle with it. The upper bound is
//! `chosen + undecided - Σ (k_T - 1)` over an edge-disjoint packing of open
//! triangles `T` with `k_T ≥ 2` undecided edges: at most one edge of each
//! packed triangle can still be taken.

use super::Certified;
use crate::graph::{EdgeSet, Graph};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Mark {
    Open,
    In,
    Out,
}

/// Triangles as edge-id triples plus, per edge, the triangles through it.
pub(crate) struct TriangleIncidence {
    pub tris: Vec<[usize; 3]>,
    pub by_edge: Vec<Vec<usize>>,
}

impl TriangleIncidence {
    pub fn new(g: &Graph) -> Self {
        let idx = g.edge_indexing();
        let tris = super::triangle_edge_ids(g, &idx);
        let mut by_edge = vec![Vec::new(); idx.len()];
        for (t, tri) in tris.iter().enumerate() {
            for &e in tri {
                by_edge[e].push(t);
            }
        }
        TriangleIncidence { tris, by_edge }
    }
}

struct Search<'a> {
    inc: &'a TriangleIncidence,
    marks: Vec<Mark>,
    chosen: usize,
    best: Option<(usize, Vec<Mark>)>,
    packed: Vec<bool>,
}

impl Search<'_> {
    fn upper_bound(&mut self, from: usize) -> usize {
        let undecided = self.marks[from..]
            .iter()
            .filter(|&&m| m == Mark::Open)
            .count();
        self.packed.iter_mut().for_each(|p| *p = false);
        let mut blocked = 0;
        for tri in &self.inc.tris {
            if tri.iter().any(|&e| self.marks[e] == Mark::In) {
                continue;
            }
            let mut open = [0usize; 3];
            let mut k = 0;
            for &e in tri {
                if self.marks[e] == Mark::Open {
                    open[k] = e;
                    k += 1;
                }
            }
            if k >= 2 && open[..k].iter().all(|&e| !self.packed[e]) {
                for &e in &open[..k] {
                    self.packed[e] = true;
                }
                blocked += k - 1;
            }
        }
        self.chosen + undecided - blocked
    }

    fn dfs(&mut self, mut i: usize) {
        let m = self.marks.len();
        while i < m && self.marks[i] != Mark::Open {
            i += 1;
        }
        if i == m {
            if self.best.as_ref().is_none_or(|(v, _)| self.chosen > *v) {
                self.best = Some((self.chosen, self.marks.clone()));
            }
            return;
        }
        if let Some((best, _)) = self.best {
            if self.upper_bound(i) <= best {
                return;
            }
        }

        self.marks[i] = Mark::In;
        self.chosen += 1;
        let mut forced = Vec::new();
        for &t in &self.inc.by_edge[i] {
            for &e in &self.inc.tris[t] {
                if self.marks[e] == Mark::Open {
                    self.marks[e] = Mark::Out;
                    forced.push(e);
                }
            }
        }
        self.dfs(i + 1);
        for e in forced {
            self.marks[e] = Mark::Open;
        }
        self.chosen -= 1;

        self.marks[i] = Mark::Out;
        self.dfs(i + 1);
        self.marks[i] = Mark::Open;
    }
}

/// α₁(G) with a maximum triangle-independent edge set.
pub fn alpha1_exact(g: &Graph) -> Certified<EdgeSet> {
    let inc = TriangleIncidence::new(g);
    let m = inc.by_edge.len();
    let mut search = Search {
        inc: &inc,
        marks: vec![Mark::Open; m],
        chosen: 0,
        best: None,
        packed: vec![false; m],
    };
    search.dfs(0);
    let (value, marks) = search.best.expect("search visits at least one leaf");
    let mut witness = EdgeSet::new(m);
    for (e, mark) in marks.iter().enumerate() {
        if *mark == Mark::In {
            witness.insert(e);
        }
    }
    Certified::optimal(value, witness)
}
