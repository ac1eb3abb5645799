use rayon::prelude::*;
use serde::Serialize;

use super::HarnessError;
use crate::constructive::{
    b_split_bipartize, furedi_bipartize, greedy_bipartize, neighborhood_bipartize,
    CertifiedBipartization, CliqueFamily, ConstructError, InnerSolver, Pivot, SplitFamily,
    SubgraphSolver,
};
use crate::exact::{tau_b_exact, MAX_PARTITE_VERTICES};
use crate::graph::{emit_graph6, Graph};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub graph6: String,
    pub method: &'static str,
    pub deletions: usize,
    pub claimed_bound: Rational,
    pub exact_tau_b: usize,
}

type Runner = fn(&Graph) -> Result<CertifiedBipartization, ConstructError>;

fn furedi_solver(g: &Graph) -> SubgraphSolver {
    if g.order() <= MAX_PARTITE_VERTICES {
        SubgraphSolver::Exact
    } else {
        SubgraphSolver::LocalSearch
    }
}

const METHODS: [(&str, Runner); 8] = [
    ("greedy", greedy_bipartize),
    ("neighborhood_k5", |g| {
        neighborhood_bipartize(
            g,
            Pivot::BestOverAll,
            CliqueFamily::K5Free,
            InnerSolver::Exact,
        )
    }),
    ("neighborhood_k6", |g| {
        neighborhood_bipartize(
            g,
            Pivot::BestOverAll,
            CliqueFamily::K6Free,
            InnerSolver::Exact,
        )
    }),
    ("furedi_p4", |g| {
        furedi_bipartize(g, 4, furedi_solver(g)).map(|o| o.result)
    }),
    ("furedi_p5", |g| {
        furedi_bipartize(g, 5, furedi_solver(g)).map(|o| o.result)
    }),
    ("b_split_k5", |g| {
        b_split_bipartize(g, SplitFamily::K5Free).map(|o| o.result)
    }),
    ("b_split_k6a", |g| {
        b_split_bipartize(g, SplitFamily::K6FreeCaseA).map(|o| o.result)
    }),
    ("b_split_k6b", |g| {
        b_split_bipartize(g, SplitFamily::K6FreeCaseB).map(|o| o.result)
    }),
];

/// Runs every constructive method whose clique gate `g` passes. Each row is
/// checked against the exact optimum.
pub fn bench_graph(g: &Graph) -> Result<Vec<BenchRow>, HarnessError> {
    let graph6 = emit_graph6(g);
    let construct = |source| HarnessError::Construct {
        graph6: graph6.clone(),
        source,
    };
    let tau_b = tau_b_exact(g)
        .map_err(|e| construct(ConstructError::Solver(e)))?
        .value;
    let mut rows = Vec::new();
    for (method, run) in METHODS {
        let r = match run(g) {
            Ok(r) => r,
            Err(ConstructError::CliquePrecondition { .. }) => continue,
            Err(e) => return Err(construct(e)),
        };
        if r.deletion_count() < tau_b {
            return Err(HarnessError::BelowOptimum {
                graph6,
                method,
                deletions: r.deletion_count(),
                tau_b,
            });
        }
        rows.push(BenchRow {
            graph6: graph6.clone(),
            method,
            deletions: r.deletion_count(),
            claimed_bound: r.claimed_bound,
            exact_tau_b: tau_b,
        });
    }
    Ok(rows)
}

/// Rows for every graph, in input order.
pub fn bench_all(graphs: &[Graph]) -> Result<Vec<BenchRow>, HarnessError> {
    let per_graph: Vec<Vec<BenchRow>> = graphs
        .par_iter()
        .map(bench_graph)
        .collect::<Result<_, _>>()?;
    Ok(per_graph.into_iter().flatten().collect())
}
