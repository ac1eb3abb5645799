//! Corpus loading, parallel sweeps, constructive benchmarks and report
//! emission behind the `tribound` binary.

mod bench;
mod input;
mod output;
mod sweep;

pub use bench::{bench_all, bench_graph, BenchRow};
pub use input::{load_graphs, InputSource};
pub use output::{
    bench_csv, bench_json, report_json, reports_csv, sweep_json, OutputFormat, REPORT_CSV_HEADER,
};
pub use sweep::{sweep, BoundTally, ExtremalEntry, Finding, SweepSummary};

use std::path::PathBuf;

use thiserror::Error;

use crate::bounds::BoundReport;
use crate::constructive::ConstructError;
use crate::graph::{FamilyError, Graph6Error, GraphError};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_THEOREM_FAILURE: u8 = 2;
pub const EXIT_CONJECTURE_VIOLATION: u8 = 3;

/// Exit status for a set of reports: a failed theorem outranks a violated
/// conjecture.
pub fn verdict_exit_code(reports: &[BoundReport]) -> u8 {
    if reports
        .iter()
        .any(|r| r.theorem_failures().next().is_some())
    {
        EXIT_THEOREM_FAILURE
    } else if reports
        .iter()
        .any(|r| r.conjecture_violations().next().is_some())
    {
        EXIT_CONJECTURE_VIOLATION
    } else {
        EXIT_OK
    }
}

/// Number of graphs kept in the extremal table unless overridden.
pub const DEFAULT_TOP_K: usize = 10;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("line {line}: {source}")]
    Parse { line: usize, source: Graph6Error },
    #[error("--g6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{graph6}: {source}")]
    Construct {
        graph6: String,
        source: ConstructError,
    },
    #[error("{graph6}: {method} deleted {deletions} edges, below the optimum {tau_b}")]
    BelowOptimum {
        graph6: String,
        method: &'static str,
        deletions: usize,
        tau_b: usize,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// Runs `f` on a dedicated pool of `jobs` threads, or the global pool when
/// `jobs` is `None`.
pub fn with_jobs<T: Send>(
    jobs: Option<usize>,
    f: impl FnOnce() -> T + Send,
) -> Result<T, HarnessError> {
    match jobs {
        Some(k) => Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()?
            .install(f)),
        None => Ok(f()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{evaluate_all, BoundKind};
    use crate::graph::parse_family;
    use crate::rational::Rational;

    #[test]
    fn exit_codes() {
        let g = parse_family("complete(4)", 0).unwrap().build().unwrap();
        let ok = evaluate_all(&g);
        assert_eq!(verdict_exit_code(std::slice::from_ref(&ok)), EXIT_OK);

        let break_first = |kind| {
            let mut r = ok.clone();
            let v = r.verdicts.iter_mut().find(|v| v.kind == kind).unwrap();
            v.rhs = Some(Rational::from(-1i128));
            v.holds = Some(false);
            r
        };
        let conj = break_first(BoundKind::Conjecture);
        let thm = break_first(BoundKind::Theorem);
        assert_eq!(
            verdict_exit_code(&[ok.clone(), conj.clone()]),
            EXIT_CONJECTURE_VIOLATION
        );
        assert_eq!(verdict_exit_code(&[conj, thm]), EXIT_THEOREM_FAILURE);
    }
}
