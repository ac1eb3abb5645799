use super::{check_limit, Certified, SolverError, MAX_PARTITE_VERTICES};
use crate::graph::{bit, Graph, VertexPartition};

struct Search<'a> {
    g: &'a Graph,
    p: usize,
    parts: Vec<u64>,
    assignment: Vec<usize>,
    best: Option<(usize, Vec<usize>)>,
}

impl Search<'_> {
    /// `assigned` is the set of vertices `0..i`; `inside` counts edges within it.
    fn dfs(&mut self, i: usize, used: usize, cross: usize, inside: usize) {
        let n = self.g.order();
        if i == n {
            if self.best.as_ref().is_none_or(|(b, _)| cross > *b) {
                self.best = Some((cross, self.assignment.clone()));
            }
            return;
        }
        if let Some((best, _)) = self.best {
            if cross + (self.g.size() - inside) <= best {
                return;
            }
        }
        let row = self.g.adjacency()[i];
        let assigned = (1u64 << i) - 1;
        let back = (row & assigned).count_ones() as usize;
        // Symmetry: a vertex may open at most one new part, the next unused one.
        for k in 0..self.p.min(used + 1) {
            let same = (row & self.parts[k]).count_ones() as usize;
            self.parts[k] |= bit(i);
            self.assignment[i] = k;
            self.dfs(i + 1, used.max(k + 1), cross + back - same, inside + back);
            self.parts[k] &= !bit(i);
        }
    }
}

/// Largest number of edges kept by a `p`-part vertex colouring (cross-part
/// edges), with the colouring. Parts are opened in order of first use.
pub fn max_p_partite_exact(g: &Graph, p: usize) -> Result<Certified<VertexPartition>, SolverError> {
    if p < 2 {
        return Err(SolverError::InvalidArgument(format!(
            "need p >= 2, got {p}"
        )));
    }
    check_limit("max_p_partite_exact", g, MAX_PARTITE_VERTICES)?;
    let n = g.order();
    let mut search = Search {
        g,
        p,
        parts: vec![0; p],
        assignment: vec![0; n],
        best: None,
    };
    search.dfs(0, 0, 0, 0);
    let (value, assignment) = search.best.expect("every colouring is a leaf");
    let partition = VertexPartition::new(p, assignment).expect("parts below p");
    Ok(Certified::optimal(value, partition))
}
