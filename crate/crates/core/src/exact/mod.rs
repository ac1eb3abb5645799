//! Certified exact solvers for α₁, τ₁, max-cut / τ_B, b, and the largest
//! p-partite subgraph.
//!
//! Every solver returns a [`Certified`] value whose witness is feasible and
//! attains the value. Among optimal witnesses the one with the
//! lexicographically smallest sorted member list is returned (for max-cut:
//! among sides containing vertex 0; for partitions: the smallest
//! assignment string).

mod alpha1;
mod bipartite;
mod maxcut;
mod partite;
mod tau1;
mod validate;

pub use alpha1::alpha1_exact;
pub use bipartite::b_exact;
pub use maxcut::{max_cut_exact, tau_b_exact, BipartizationWitness};
pub use partite::max_p_partite_exact;
pub use tau1::tau1_exact;
pub use validate::{
    is_triangle_cover, is_triangle_independent, leaves_bipartite, triangle_edge_ids,
};

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

/// Largest vertex count for the exhaustive max-cut (and hence τ_B).
pub const MAX_CUT_VERTICES: usize = 30;
/// Largest vertex count for the induced-bipartite search.
pub const MAX_B_VERTICES: usize = 30;
/// Largest vertex count for the p-partite assignment search.
pub const MAX_PARTITE_VERTICES: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("{solver} supports at most {limit} vertices, got {n}")]
    LimitExceeded {
        solver: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("{0}")]
    InvalidArgument(String),
}

pub(crate) fn check_limit(
    solver: &'static str,
    g: &Graph,
    limit: usize,
) -> Result<(), SolverError> {
    if g.order() > limit {
        Err(SolverError::LimitExceeded {
            solver,
            n: g.order(),
            limit,
        })
    } else {
        Ok(())
    }
}

/// An optimum together with a witness that attains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certified<W> {
    pub value: usize,
    pub witness: W,
    /// Always true for the solvers in this module.
    pub optimal: bool,
}

impl<W> Certified<W> {
    pub(crate) fn optimal(value: usize, witness: W) -> Self {
        Certified {
            value,
            witness,
            optimal: true,
        }
    }
}

/// α₁(G), τ_B(G) and their sum f_B(G).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FbValue {
    pub alpha1: usize,
    pub tau_b: usize,
    pub sum: usize,
}

pub fn f_b_exact(g: &Graph) -> Result<FbValue, SolverError> {
    let tau_b = tau_b_exact(g)?.value;
    let alpha1 = alpha1_exact(g).value;
    Ok(FbValue {
        alpha1,
        tau_b,
        sum: alpha1 + tau_b,
    })
}
