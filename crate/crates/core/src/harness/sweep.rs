use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{evaluate_all, BoundKind, BoundReport};
use crate::graph::Graph;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundTally {
    pub bound_id: &'static str,
    pub kind: BoundKind,
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    /// Applicable, but an invariant was past its solver limit.
    pub unknown: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalEntry {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub f_b: usize,
    pub ratio: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub index: usize,
    pub graph6: String,
    pub bound_id: &'static str,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub graphs: usize,
    pub tallies: Vec<BoundTally>,
    /// Largest f_B/(n²/4) first; input order breaks ties.
    pub extremal: Vec<ExtremalEntry>,
    pub theorem_failures: Vec<Finding>,
    pub conjecture_violations: Vec<Finding>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SweepSummary {
    pub fn from_reports(reports: &[BoundReport], top_k: usize) -> Self {
        let mut tallies: Vec<BoundTally> = Vec::new();
        let mut theorem_failures = Vec::new();
        let mut conjecture_violations = Vec::new();
        for (index, rep) in reports.iter().enumerate() {
            for v in &rep.verdicts {
                let tally = match tallies.iter_mut().find(|t| t.bound_id == v.bound_id) {
                    Some(t) => t,
                    None => {
                        tallies.push(BoundTally {
                            bound_id: v.bound_id,
                            kind: v.kind,
                            pass: 0,
                            fail: 0,
                            not_applicable: 0,
                            unknown: 0,
                        });
                        tallies.last_mut().expect("just pushed")
                    }
                };
                match (v.applicable, v.holds) {
                    (false, _) => tally.not_applicable += 1,
                    (true, None) => tally.unknown += 1,
                    (true, Some(true)) => tally.pass += 1,
                    (true, Some(false)) => {
                        tally.fail += 1;
                        let finding = Finding {
                            index,
                            graph6: rep.graph6.clone(),
                            bound_id: v.bound_id,
                            lhs: v.lhs.expect("decided verdicts have both sides"),
                            rhs: v.rhs.expect("decided verdicts have both sides"),
                        };
                        match v.kind {
                            BoundKind::Theorem => theorem_failures.push(finding),
                            BoundKind::Conjecture => conjecture_violations.push(finding),
                        }
                    }
                }
            }
        }

        let mut extremal: Vec<ExtremalEntry> = reports
            .iter()
            .enumerate()
            .filter_map(|(index, rep)| {
                Some(ExtremalEntry {
                    index,
                    graph6: rep.graph6.clone(),
                    n: rep.invariants.n,
                    f_b: rep.invariants.f_b?,
                    ratio: rep.ratio?,
                })
            })
            .collect();
        extremal.sort_by(|a, b| b.ratio.cmp(&a.ratio).then(a.index.cmp(&b.index)));
        extremal.truncate(top_k);

        SweepSummary {
            graphs: reports.len(),
            tallies,
            extremal,
            theorem_failures,
            conjecture_violations,
            wall_time: Duration::ZERO,
        }
    }
}

/// Evaluates every graph in parallel; reports come back in input order.
pub fn sweep(graphs: &[Graph], top_k: usize) -> (Vec<BoundReport>, SweepSummary) {
    let start = Instant::now();
    let reports: Vec<BoundReport> = graphs.par_iter().map(evaluate_all).collect();
    let mut summary = SweepSummary::from_reports(&reports, top_k);
    summary.wall_time = start.elapsed();
    (reports, summary)
}
