use super::{check_limit, Certified, SolverError, MAX_CUT_VERTICES};
use crate::graph::{bit, EdgeSet, Graph, VertexPartition, VertexSet};

/// Deleted edges plus the 2-colouring they leave proper.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartizationWitness {
    pub deletions: EdgeSet,
    pub sides: VertexPartition,
}

/// Maximum cut by Gray-code enumeration of every side containing vertex 0.
///
/// Each step flips one vertex and updates the cut from two popcounts. Ties
/// keep the lexicographically smaller side.
pub fn max_cut_exact(g: &Graph) -> Result<Certified<VertexSet>, SolverError> {
    check_limit("max_cut_exact", g, MAX_CUT_VERTICES)?;
    let n = g.order();
    let adj = g.adjacency();
    let mut side = 1u64;
    let mut cut = g.degree(0) as i64;
    let mut best = (cut, side);
    for step in 1u64..(1u64 << (n - 1)) {
        let v = step.trailing_zeros() as usize + 1;
        let inside = (adj[v] & side).count_ones() as i64;
        let outside = g.degree(v) as i64 - inside;
        if side & bit(v) != 0 {
            cut += inside - outside;
        } else {
            cut += outside - inside;
        }
        side ^= bit(v);
        if cut > best.0 || (cut == best.0 && VertexSet(side).lex_cmp(VertexSet(best.1)).is_lt()) {
            best = (cut, side);
        }
    }
    Ok(Certified::optimal(best.0 as usize, VertexSet(best.1)))
}

/// τ_B(G) = e(G) − maxcut(G), witnessed by the monochromatic edges of the
/// maximum cut.
pub fn tau_b_exact(g: &Graph) -> Result<Certified<BipartizationWitness>, SolverError> {
    let cut = max_cut_exact(g)?;
    let sides = VertexPartition::from_side(g.order(), cut.witness);
    let deletions = g.edge_indexing().monochromatic(&sides);
    let value = g.size() - cut.value;
    debug_assert_eq!(deletions.len(), value);
    Ok(Certified::optimal(
        value,
        BipartizationWitness { deletions, sides },
    ))
}
