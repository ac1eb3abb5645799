use rayon::prelude::*;

use super::{
    exact_piece, require_clique_bound, CertifiedBipartization, ConstructError, Method, Piece,
};
use crate::graph::{Graph, VertexPartition};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pivot {
    Vertex(usize),
    BestOverAll,
}

/// Which neighbourhood guarantee the claimed bound uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CliqueFamily {
    /// ω ≤ 4; the neighbourhood is K₄-free and costs at most d²/9.
    K5Free,
    /// ω ≤ 5; the neighbourhood is K₅-free and costs at most 29d²/200.
    K6Free,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InnerSolver {
    /// Optimal bipartization of G[N(v)], charged at the family's d² bound.
    Exact,
    /// The same procedure applied to G[N(v)], charged at its own claimed bound.
    Recursive,
}

/// One vertex outside the pivot's neighbourhood at the moment it was placed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Placement {
    pub vertex: usize,
    pub same: usize,
    pub cross: usize,
}

#[derive(Debug, Clone)]
pub struct NeighborhoodOutcome {
    pub result: CertifiedBipartization,
    pub pivot: usize,
    pub placements: Vec<Placement>,
}

impl CliqueFamily {
    fn max_clique(self) -> usize {
        match self {
            CliqueFamily::K5Free => 4,
            CliqueFamily::K6Free => 5,
        }
    }

    fn method(self) -> Method {
        match self {
            CliqueFamily::K5Free => Method::NeighborhoodK5,
            CliqueFamily::K6Free => Method::NeighborhoodK6,
        }
    }

    fn inner_bound(self, d: usize) -> Rational {
        let d2 = (d * d) as i128;
        match self {
            CliqueFamily::K5Free => Rational::new(d2, 9),
            CliqueFamily::K6Free => Rational::new(29 * d2, 200),
        }
    }
}

fn with_pivot(
    g: &Graph,
    v: usize,
    family: CliqueFamily,
    inner: InnerSolver,
) -> Result<NeighborhoodOutcome, ConstructError> {
    let nbhd = g.neighbors(v);
    let d = nbhd.len();
    let e_v = g.edges_within(nbhd);
    let (piece, inner_bound) = match inner {
        InnerSolver::Exact => (exact_piece(g, nbhd)?, family.inner_bound(d)),
        InnerSolver::Recursive if g.edges_within(nbhd) == 0 => {
            (Piece::new(nbhd, nbhd), Rational::ZERO)
        }
        InnerSolver::Recursive => {
            let sub = g.induced_subgraph(nbhd)?;
            let r = neighborhood_bipartize_traced(&sub, Pivot::BestOverAll, family, inner)?.result;
            (Piece::from_local(nbhd, r.sides.members(0)), r.claimed_bound)
        }
    };

    let mut side0 = piece.side;
    let mut placed = nbhd;
    let mut rest: Vec<usize> = g.vertices().difference(nbhd).iter().collect();
    rest.sort_by_key(|&u| (std::cmp::Reverse(g.degree(u)), u));
    let mut placements = Vec::with_capacity(rest.len());
    for u in rest {
        let back = g.neighbors(u).intersection(placed);
        let on0 = back.intersection(side0).len();
        let on1 = back.len() - on0;
        let (same, cross) = if on0 <= on1 {
            side0.insert(u);
            (on0, on1)
        } else {
            (on1, on0)
        };
        placed.insert(u);
        placements.push(Placement {
            vertex: u,
            same,
            cross,
        });
    }

    let claimed = Rational::new((g.size() - e_v) as i128, 2) + inner_bound;
    let result = CertifiedBipartization::certify(
        g,
        VertexPartition::from_side(g.order(), side0),
        claimed,
        family.method(),
    )?;
    Ok(NeighborhoodOutcome {
        result,
        pivot: v,
        placements,
    })
}

/// Bipartizes the pivot's neighbourhood, then places the remaining vertices
/// by descending degree on the side with fewer already-placed neighbours.
/// With [`Pivot::BestOverAll`] the fewest deletions win, lowest pivot on ties.
pub fn neighborhood_bipartize_traced(
    g: &Graph,
    pivot: Pivot,
    family: CliqueFamily,
    inner: InnerSolver,
) -> Result<NeighborhoodOutcome, ConstructError> {
    require_clique_bound(g, family.method().as_str(), family.max_clique())?;
    match pivot {
        Pivot::Vertex(v) if v >= g.order() => Err(ConstructError::InvalidArgument(format!(
            "pivot {v} out of range for {} vertices",
            g.order()
        ))),
        Pivot::Vertex(v) => with_pivot(g, v, family, inner),
        Pivot::BestOverAll => {
            let outcomes: Vec<_> = (0..g.order())
                .into_par_iter()
                .map(|v| with_pivot(g, v, family, inner))
                .collect::<Result<_, _>>()?;
            Ok(outcomes
                .into_iter()
                .min_by_key(|o| (o.result.deletion_count(), o.pivot))
                .expect("graphs have at least one vertex"))
        }
    }
}

pub fn neighborhood_bipartize(
    g: &Graph,
    pivot: Pivot,
    family: CliqueFamily,
    inner: InnerSolver,
) -> Result<CertifiedBipartization, ConstructError> {
    neighborhood_bipartize_traced(g, pivot, family, inner).map(|o| o.result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::tau_b_exact;
    use crate::graph::parse_family;

    fn g(spec: &str) -> Graph {
        parse_family(spec, 0).unwrap().build().unwrap()
    }

    #[test]
    fn k4_any_pivot() {
        let k4 = g("complete(4)");
        for v in 0..4 {
            let r = neighborhood_bipartize(
                &k4,
                Pivot::Vertex(v),
                CliqueFamily::K5Free,
                InnerSolver::Exact,
            )
            .unwrap();
            assert_eq!(r.deletion_count(), 2);
        }
    }

    #[test]
    fn k333_within_bound() {
        let graph = g("km(3,3,3)");
        let r = neighborhood_bipartize(
            &graph,
            Pivot::BestOverAll,
            CliqueFamily::K5Free,
            InnerSolver::Exact,
        )
        .unwrap();
        assert!(r.deletion_count() <= 13);
        assert_eq!(r.claimed_bound, Rational::from(13u64));
        assert!(r.deletion_count() >= tau_b_exact(&graph).unwrap().value);
    }

    #[test]
    fn placements_never_lose_the_majority() {
        for spec in ["gnp(11,0.5,2)", "km(2,2,3,1)", "complete(5)"] {
            let graph = g(spec);
            for inner in [InnerSolver::Exact, InnerSolver::Recursive] {
                let o = neighborhood_bipartize_traced(
                    &graph,
                    Pivot::BestOverAll,
                    CliqueFamily::K6Free,
                    inner,
                );
                let Ok(o) = o else { continue };
                assert!(o.placements.iter().all(|p| p.same <= p.cross), "{spec}");
                assert!(o.result.is_valid_for(&graph));
            }
        }
    }

    #[test]
    fn clique_precondition() {
        let k5 = g("complete(5)");
        assert!(matches!(
            neighborhood_bipartize(
                &k5,
                Pivot::Vertex(0),
                CliqueFamily::K5Free,
                InnerSolver::Exact
            ),
            Err(ConstructError::CliquePrecondition { omega: 5, .. })
        ));
        assert!(neighborhood_bipartize(
            &k5,
            Pivot::Vertex(0),
            CliqueFamily::K6Free,
            InnerSolver::Exact
        )
        .is_ok());
    }
}
