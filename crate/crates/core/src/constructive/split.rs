use super::merge::best_merge;
use super::{
    exact_piece, join_pieces, require_clique_bound, CertifiedBipartization, ConstructError, Method,
    Piece,
};
use crate::exact::b_exact;
use crate::graph::{Graph, VertexPartition, VertexSet};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitFamily {
    /// ω ≤ 4; bound b(n−b)/2 + 3(n−b)²/16.
    K5Free,
    /// ω ≤ 5; bound max((−7b² + 4nb + 3n²)/20, (−32b² + 15nb + 17n²)/100).
    K6FreeCaseA,
    /// ω ≤ 5; bound e/3 + 17(n−b)²/150.
    K6FreeCaseB,
}

/// How the complement of B was handled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitRoute {
    /// G[B̄] bipartized exactly, then joined with G[B].
    Direct,
    /// `pivot ∈ B` sees at least 49/50 of B̄; `s` is its neighbourhood in B̄,
    /// bipartized separately from the rest of B̄.
    DenseNeighborhood { pivot: usize, s: VertexSet },
    /// B's two classes and B̄'s two classes merged as a 4-partition.
    FourPartite,
}

#[derive(Debug, Clone)]
pub struct SplitOutcome {
    pub result: CertifiedBipartization,
    pub b_set: VertexSet,
    pub route: SplitRoute,
}

impl SplitFamily {
    fn method(self) -> Method {
        match self {
            SplitFamily::K5Free => Method::BSplitK5,
            SplitFamily::K6FreeCaseA => Method::BSplitK6a,
            SplitFamily::K6FreeCaseB => Method::BSplitK6b,
        }
    }

    fn max_clique(self) -> usize {
        match self {
            SplitFamily::K5Free => 4,
            _ => 5,
        }
    }

    fn bound(self, n: usize, b: usize, e: usize) -> Rational {
        let (n, b, e) = (n as i128, b as i128, e as i128);
        let r = n - b;
        match self {
            SplitFamily::K5Free => Rational::new(b * r, 2) + Rational::new(3 * r * r, 16),
            SplitFamily::K6FreeCaseA => Rational::new(-7 * b * b + 4 * n * b + 3 * n * n, 20)
                .max(Rational::new(-32 * b * b + 15 * n * b + 17 * n * n, 100)),
            SplitFamily::K6FreeCaseB => Rational::new(e, 3) + Rational::new(17 * r * r, 150),
        }
    }
}

/// The lowest `v ∈ b_set` with at least 49(n−b)/50 neighbours outside `b_set`.
fn dense_pivot(g: &Graph, b_set: VertexSet) -> Option<usize> {
    let rest = b_set.complement(g.order());
    b_set
        .iter()
        .find(|&v| 50 * g.neighbors(v).intersection(rest).len() >= 49 * rest.len())
}

/// Bipartizes G[B] by its proper colouring and G[B̄] separately, where B is
/// the lexicographically first largest induced bipartite set, then joins them.
pub fn b_split_bipartize(g: &Graph, family: SplitFamily) -> Result<SplitOutcome, ConstructError> {
    let method = family.method();
    require_clique_bound(g, method.as_str(), family.max_clique())?;
    let n = g.order();
    let b_set = b_exact(g)?.witness;
    let rest = b_set.complement(n);
    let b_side = g
        .two_coloring_of(b_set)
        .expect("b_exact returns a bipartite set");
    let b_piece = Piece::new(b_set, b_side);
    let bound = family.bound(n, b_set.len(), g.size());

    let (side, route) = match family {
        SplitFamily::K5Free => {
            let joined = join_pieces(g, &b_piece, &exact_piece(g, rest)?)?;
            (joined.side, SplitRoute::Direct)
        }
        SplitFamily::K6FreeCaseA => match dense_pivot(g, b_set).filter(|_| !rest.is_empty()) {
            Some(pivot) => {
                let s = g.neighbors(pivot).intersection(rest);
                let inner =
                    join_pieces(g, &exact_piece(g, s)?, &exact_piece(g, rest.difference(s))?)?;
                let joined = join_pieces(g, &b_piece, &inner)?;
                (joined.side, SplitRoute::DenseNeighborhood { pivot, s })
            }
            None => {
                let joined = join_pieces(g, &b_piece, &exact_piece(g, rest)?)?;
                (joined.side, SplitRoute::Direct)
            }
        },
        SplitFamily::K6FreeCaseB => {
            let r = exact_piece(g, rest)?;
            let assignment = (0..n)
                .map(
                    |v| match (b_set.contains(v), b_side.contains(v) || r.side.contains(v)) {
                        (true, true) => 0,
                        (true, false) => 1,
                        (false, true) => 2,
                        (false, false) => 3,
                    },
                )
                .collect();
            let parts = VertexPartition::new(4, assignment)?;
            (best_merge(g, &parts, 2)?, SplitRoute::FourPartite)
        }
    };
    let result =
        CertifiedBipartization::certify(g, VertexPartition::from_side(n, side), bound, method)?;
    Ok(SplitOutcome {
        result,
        b_set,
        route,
    })
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
    fn k4() {
        let r = b_split_bipartize(&g("complete(4)"), SplitFamily::K5Free).unwrap();
        assert_eq!(r.b_set, VertexSet::from_iter([0, 1]));
        assert_eq!(r.result.deletion_count(), 2);
        assert_eq!(r.result.claimed_bound, Rational::new(11, 4));
    }

    #[test]
    fn k333() {
        let graph = g("km(3,3,3)");
        let r = b_split_bipartize(&graph, SplitFamily::K5Free).unwrap();
        assert_eq!(r.result.claimed_bound, Rational::new(171, 16));
        assert!(r.result.deletion_count() <= 10);
        assert!(r.result.deletion_count() >= tau_b_exact(&graph).unwrap().value);
    }

    #[test]
    fn bipartite_input() {
        for family in [
            SplitFamily::K5Free,
            SplitFamily::K6FreeCaseA,
            SplitFamily::K6FreeCaseB,
        ] {
            let r = b_split_bipartize(&g("kb(3,3)"), family).unwrap();
            assert_eq!(r.result.deletion_count(), 0);
        }
    }

    #[test]
    fn routes() {
        // Every vertex of K_5 outside B = {0,1} sees all of B̄.
        let k5 = g("complete(5)");
        let a = b_split_bipartize(&k5, SplitFamily::K6FreeCaseA).unwrap();
        assert!(matches!(
            a.route,
            SplitRoute::DenseNeighborhood { pivot: 0, .. }
        ));
        let b = b_split_bipartize(&k5, SplitFamily::K6FreeCaseB).unwrap();
        assert_eq!(b.route, SplitRoute::FourPartite);
        assert_eq!(b.result.deletion_count(), 4);
    }

    #[test]
    fn clique_precondition() {
        assert!(b_split_bipartize(&g("complete(5)"), SplitFamily::K5Free).is_err());
        assert!(b_split_bipartize(&g("complete(6)"), SplitFamily::K6FreeCaseB).is_err());
    }
}
