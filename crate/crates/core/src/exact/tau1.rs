//! Minimum triangle edge cover as a hitting set over triangles.
//!
//! Edges are decided in id order, include before exclude, so the first
//! optimum reached is the lexicographically smallest. Excluding an edge
//! forces the last open edge of any uncovered triangle through it. The lower
//! bound is the size of an edge-disjoint packing of uncovered triangles.

use super::alpha1::{Mark, TriangleIncidence};
use super::Certified;
use crate::graph::{EdgeSet, Graph};

struct Search<'a> {
    inc: &'a TriangleIncidence,
    marks: Vec<Mark>,
    chosen: usize,
    best: Option<(usize, Vec<Mark>)>,
    packed: Vec<bool>,
}

impl Search<'_> {
    fn lower_bound(&mut self) -> usize {
        self.packed.iter_mut().for_each(|p| *p = false);
        let mut count = 0;
        // Triangles with fewer open edges first; they are the most constrained.
        for want in 1..=3 {
            for tri in &self.inc.tris {
                if tri.iter().any(|&e| self.marks[e] == Mark::In) {
                    continue;
                }
                let open = tri.iter().filter(|&&e| self.marks[e] == Mark::Open).count();
                if open == want
                    && tri
                        .iter()
                        .all(|&e| self.marks[e] != Mark::Open || !self.packed[e])
                {
                    for &e in tri {
                        if self.marks[e] == Mark::Open {
                            self.packed[e] = true;
                        }
                    }
                    count += 1;
                }
            }
        }
        count
    }

    /// Marks `i` excluded and forces completions; `None` if a triangle would
    /// be left uncovered.
    fn exclude(&mut self, i: usize) -> Option<Vec<usize>> {
        self.marks[i] = Mark::Out;
        let mut forced = Vec::new();
        for &t in &self.inc.by_edge[i] {
            let tri = self.inc.tris[t];
            if tri.iter().any(|&e| self.marks[e] == Mark::In) {
                continue;
            }
            let mut open = tri.iter().filter(|&&e| self.marks[e] == Mark::Open);
            match (open.next(), open.next()) {
                (Some(&e), None) => {
                    self.marks[e] = Mark::In;
                    self.chosen += 1;
                    forced.push(e);
                }
                (None, _) => {
                    self.undo(&forced);
                    self.marks[i] = Mark::Open;
                    return None;
                }
                _ => {}
            }
        }
        Some(forced)
    }

    fn undo(&mut self, forced: &[usize]) {
        for &e in forced {
            self.marks[e] = Mark::Open;
            self.chosen -= 1;
        }
    }

    fn dfs(&mut self, mut i: usize) {
        let m = self.marks.len();
        while i < m && self.marks[i] != Mark::Open {
            i += 1;
        }
        if let Some((best, _)) = self.best {
            if self.chosen + self.lower_bound() >= best {
                return;
            }
        }
        if i == m {
            self.best = Some((self.chosen, self.marks.clone()));
            return;
        }

        self.marks[i] = Mark::In;
        self.chosen += 1;
        self.dfs(i + 1);
        self.chosen -= 1;

        if let Some(forced) = self.exclude(i) {
            self.dfs(i + 1);
            self.undo(&forced);
            self.marks[i] = Mark::Open;
        }
    }
}

/// τ₁(G) with a minimum triangle edge cover.
pub fn tau1_exact(g: &Graph) -> Certified<EdgeSet> {
    let inc = TriangleIncidence::new(g);
    let m = inc.by_edge.len();
    // Edges on no triangle never belong to a minimum cover.
    let marks: Vec<Mark> = inc
        .by_edge
        .iter()
        .map(|t| if t.is_empty() { Mark::Out } else { Mark::Open })
        .collect();
    let mut search = Search {
        inc: &inc,
        marks,
        chosen: 0,
        best: None,
        packed: vec![false; m],
    };
    search.dfs(0);
    let (value, marks) = search.best.expect("covering every edge is feasible");
    let mut witness = EdgeSet::new(m);
    for (e, mark) in marks.iter().enumerate() {
        if *mark == Mark::In {
            witness.insert(e);
        }
    }
    Certified::optimal(value, witness)
}
