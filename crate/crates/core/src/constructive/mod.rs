//! Constructive bipartization procedures, each returning a 2-colouring, the
//! edges it deletes, and the closed-form guarantee it is checked against.
//!
//! Every procedure certifies its own output before returning: the deletion
//! set is exactly the monochromatic edges of the colouring, and its size is
//! compared with the claimed bound in exact arithmetic. A failed comparison
//! is reported as [`ConstructError::GuaranteeViolated`].

mod furedi;
mod greedy;
mod join;
mod merge;
mod neighborhood;
mod split;

pub use furedi::{furedi_bipartize, FurediOutcome, SubgraphSolver};
pub use greedy::{greedy_bipartize, local_search_from};
pub use join::{join_pieces, two_way_join, Piece};
pub use merge::{merge_parts, merge_split_costs};
pub use neighborhood::{
    neighborhood_bipartize, neighborhood_bipartize_traced, CliqueFamily, InnerSolver,
    NeighborhoodOutcome, Pivot, Placement,
};
pub use split::{b_split_bipartize, SplitFamily, SplitOutcome, SplitRoute};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::exact::{leaves_bipartite, SolverError};
use crate::graph::{EdgeSet, Graph, GraphError, VertexPartition, VertexSet};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("{method} requires clique number at most {max}, graph has {omega}")]
    CliquePrecondition {
        method: &'static str,
        omega: usize,
        max: usize,
    },
    #[error("{0}")]
    InvalidArgument(String),
    #[error("pieces overlap on vertices {0:?}")]
    OverlappingPieces(VertexSet),
    #[error("pieces miss vertices {0:?}")]
    UncoveredVertices(VertexSet),
    #[error("{method}: {deletions} deletions exceed the claimed bound {bound}")]
    GuaranteeViolated {
        method: Method,
        deletions: usize,
        bound: Rational,
    },
    #[error("p-partite subgraph keeps {kept} edges, fewer than the required {required}")]
    FurediViolated { kept: usize, required: i64 },
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Which procedure produced a bipartization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Greedy,
    MergeParts,
    TwoWayJoin,
    NeighborhoodK5,
    NeighborhoodK6,
    FurediP4,
    FurediP5,
    BSplitK5,
    BSplitK6a,
    BSplitK6b,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Greedy => "greedy",
            Method::MergeParts => "merge_parts",
            Method::TwoWayJoin => "two_way_join",
            Method::NeighborhoodK5 => "neighborhood_k5",
            Method::NeighborhoodK6 => "neighborhood_k6",
            Method::FurediP4 => "furedi_p4",
            Method::FurediP5 => "furedi_p5",
            Method::BSplitK5 => "b_split_k5",
            Method::BSplitK6a => "b_split_k6a",
            Method::BSplitK6b => "b_split_k6b",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedBipartization {
    pub deletions: EdgeSet,
    pub sides: VertexPartition,
    pub claimed_bound: Rational,
    pub method: Method,
}

impl CertifiedBipartization {
    /// Deletes the monochromatic edges of `sides` and checks the count
    /// against `claimed_bound`.
    pub fn certify(
        g: &Graph,
        sides: VertexPartition,
        claimed_bound: Rational,
        method: Method,
    ) -> Result<Self, ConstructError> {
        let deletions = g.edge_indexing().monochromatic(&sides);
        let out = CertifiedBipartization {
            deletions,
            sides,
            claimed_bound,
            method,
        };
        if Rational::from(out.deletion_count()) > claimed_bound {
            return Err(ConstructError::GuaranteeViolated {
                method,
                deletions: out.deletion_count(),
                bound: claimed_bound,
            });
        }
        Ok(out)
    }

    pub fn deletion_count(&self) -> usize {
        self.deletions.len()
    }

    /// Re-checks feasibility and the bound from scratch.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.sides.parts() == 2
            && leaves_bipartite(g, &self.deletions, &self.sides)
            && Rational::from(self.deletion_count()) <= self.claimed_bound
    }
}

pub(crate) fn require_clique_bound(
    g: &Graph,
    method: &'static str,
    max: usize,
) -> Result<(), ConstructError> {
    let omega = g.clique_number().0;
    if omega > max {
        Err(ConstructError::CliquePrecondition { method, omega, max })
    } else {
        Ok(())
    }
}

/// Optimal bipartition of `G[members]` as a piece of `g`. The colouring is
/// normalised: after the optimal deletions, each remaining component has its
/// lowest vertex on side 0.
pub(crate) fn exact_piece(g: &Graph, members: VertexSet) -> Result<Piece, ConstructError> {
    if members.is_empty() {
        return Ok(Piece::empty());
    }
    let sub = g.induced_subgraph(members)?;
    let deletions = crate::exact::tau_b_exact(&sub)?.witness.deletions;
    let idx = sub.edge_indexing();
    let kept: Vec<_> = (0..idx.len())
        .filter(|&id| !deletions.contains(id))
        .map(|id| idx.pair(id))
        .collect();
    let kept = Graph::from_edges(sub.order(), &kept)?;
    let side = kept
        .two_coloring_of(kept.vertices())
        .expect("optimal deletions leave a bipartite graph");
    Ok(Piece::from_local(members, side))
}
