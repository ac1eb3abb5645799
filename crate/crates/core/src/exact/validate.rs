//! Independent feasibility checks for solver witnesses. These scan triangles
//! and colourings directly and share no code with the searches.

use crate::graph::{EdgeIndexing, EdgeSet, Graph, VertexPartition};

/// Edge ids of every triangle of `g`, in triangle order.
pub fn triangle_edge_ids(g: &Graph, idx: &EdgeIndexing) -> Vec<[usize; 3]> {
    g.triangles()
        .into_iter()
        .map(|t| idx.triangle_ids(t))
        .collect()
}

/// At most one edge of `a` in every triangle.
pub fn is_triangle_independent(g: &Graph, a: &EdgeSet) -> bool {
    if !a.belongs_to(g) {
        return false;
    }
    let idx = g.edge_indexing();
    triangle_edge_ids(g, &idx)
        .iter()
        .all(|t| t.iter().filter(|&&e| a.contains(e)).count() <= 1)
}

/// At least one edge of `c` in every triangle.
pub fn is_triangle_cover(g: &Graph, c: &EdgeSet) -> bool {
    if !c.belongs_to(g) {
        return false;
    }
    let idx = g.edge_indexing();
    triangle_edge_ids(g, &idx)
        .iter()
        .all(|t| t.iter().any(|&e| c.contains(e)))
}

/// After removing `deletions`, no remaining edge lies inside a part of `sides`.
pub fn leaves_bipartite(g: &Graph, deletions: &EdgeSet, sides: &VertexPartition) -> bool {
    if !deletions.belongs_to(g) || sides.len() != g.order() || sides.parts() > 2 {
        return false;
    }
    g.edge_indexing()
        .pairs()
        .iter()
        .enumerate()
        .all(|(id, &(u, v))| deletions.contains(id) || sides.part_of(u) != sides.part_of(v))
}
