use super::merge::best_merge;
use super::{require_clique_bound, CertifiedBipartization, ConstructError, Method};
use crate::exact::max_p_partite_exact;
use crate::graph::{turan_edge_count, Graph, VertexPartition};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgraphSolver {
    Exact,
    LocalSearch,
}

#[derive(Debug, Clone)]
pub struct FurediOutcome {
    pub result: CertifiedBipartization,
    /// The p-partition whose crossing edges form H.
    pub parts: VertexPartition,
    /// e(H).
    pub kept: usize,
    /// 2e(G) − e(T(n,p)).
    pub required: i64,
}

impl FurediOutcome {
    pub fn guarantee_holds(&self) -> bool {
        self.kept as i64 >= self.required
    }
}

/// p-colouring built greedily (each vertex in index order joins the lowest
/// part holding fewest of its earlier neighbours), then improved by moves:
/// the lowest vertex that can strictly reduce its same-part degree moves to
/// the lowest best part.
fn local_partite(g: &Graph, p: usize) -> VertexPartition {
    let n = g.order();
    let mut assignment = vec![0; n];
    let mut parts = vec![0u64; p];
    for v in 0..n {
        let row = g.adjacency()[v];
        let k = (0..p)
            .min_by_key(|&k| (row & parts[k]).count_ones())
            .expect("p >= 1");
        assignment[v] = k;
        parts[k] |= 1 << v;
    }
    'outer: loop {
        for v in 0..n {
            let row = g.adjacency()[v];
            let count = |k: usize| (row & parts[k]).count_ones();
            let cur = assignment[v];
            let best = (0..p).min_by_key(|&k| count(k)).expect("p >= 1");
            if count(best) < count(cur) {
                parts[cur] &= !(1 << v);
                parts[best] |= 1 << v;
                assignment[v] = best;
                continue 'outer;
            }
        }
        break;
    }
    VertexPartition::new(p, assignment).expect("parts below p")
}

/// Keeps a large p-partite subgraph H, checks e(H) ≥ 2e − e(T(n,p)), and
/// merges its parts into two sides. Bound n²/4 − e/3 for p = 4 and
/// 6n²/25 − e/5 for p = 5.
pub fn furedi_bipartize(
    g: &Graph,
    p: usize,
    solver: SubgraphSolver,
) -> Result<FurediOutcome, ConstructError> {
    let (method, bound) = {
        let n2 = (g.order() * g.order()) as i128;
        let e = g.size() as i128;
        match p {
            4 => (Method::FurediP4, Rational::new(n2, 4) - Rational::new(e, 3)),
            5 => (
                Method::FurediP5,
                Rational::new(6 * n2, 25) - Rational::new(e, 5),
            ),
            _ => {
                return Err(ConstructError::InvalidArgument(format!(
                    "p must be 4 or 5, got {p}"
                )))
            }
        }
    };
    require_clique_bound(g, method.as_str(), p)?;
    let parts = match solver {
        SubgraphSolver::Exact => max_p_partite_exact(g, p)?.witness,
        SubgraphSolver::LocalSearch => local_partite(g, p),
    };
    let kept = parts.crossing_edges(g);
    let required = 2 * g.size() as i64 - turan_edge_count(g.order(), p) as i64;
    if solver == SubgraphSolver::Exact && (kept as i64) < required {
        return Err(ConstructError::FurediViolated { kept, required });
    }
    let side = best_merge(g, &parts, p.div_ceil(2))?;
    let sides = VertexPartition::from_side(g.order(), side);
    let result = match CertifiedBipartization::certify(g, sides, bound, method) {
        // A local-search H below the required size carries no guarantee.
        Err(ConstructError::GuaranteeViolated { .. }) if (kept as i64) < required => {
            return Err(ConstructError::FurediViolated { kept, required })
        }
        other => other?,
    };
    Ok(FurediOutcome {
        result,
        parts,
        kept,
        required,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_family;

    fn g(spec: &str) -> Graph {
        parse_family(spec, 0).unwrap().build().unwrap()
    }

    #[test]
    fn turan_inputs() {
        let t84 = furedi_bipartize(&g("turan(8,4)"), 4, SubgraphSolver::Exact).unwrap();
        assert_eq!(t84.kept, 24);
        assert_eq!(t84.result.claimed_bound, Rational::from(8u64));
        assert!(t84.result.deletion_count() <= 8);

        let t105 = furedi_bipartize(&g("turan(10,5)"), 5, SubgraphSolver::Exact).unwrap();
        assert_eq!(t105.result.claimed_bound, Rational::from(16u64));
        assert!(t105.result.deletion_count() <= 16);
    }

    #[test]
    fn bipartite_input() {
        for solver in [SubgraphSolver::Exact, SubgraphSolver::LocalSearch] {
            let r = furedi_bipartize(&g("kb(3,4)"), 4, solver).unwrap();
            assert_eq!(r.result.deletion_count(), 0);
        }
    }

    #[test]
    fn local_search_reports_guarantee() {
        let graph = g("km(3,3,3,3)");
        let r = furedi_bipartize(&graph, 4, SubgraphSolver::LocalSearch).unwrap();
        assert!(r.guarantee_holds());
        assert!(r.result.is_valid_for(&graph));
    }

    #[test]
    fn argument_errors() {
        assert!(furedi_bipartize(&g("complete(5)"), 4, SubgraphSolver::Exact).is_err());
        assert!(furedi_bipartize(&g("complete(3)"), 3, SubgraphSolver::Exact).is_err());
    }
}
