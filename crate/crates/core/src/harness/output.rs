use std::str::FromStr;

use serde::Serialize;

use super::{BenchRow, HarnessError, SweepSummary};
use crate::bounds::BoundReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(format!("unknown format {s:?}, expected json or csv")),
        }
    }
}

/// Leading columns of the per-graph CSV; one column per bound_id follows,
/// holding `pass`, `fail`, `na` or `unknown`.
pub const REPORT_CSV_HEADER: [&str; 12] = [
    "graph6",
    "n",
    "e",
    "t",
    "sum_deg_sq",
    "omega",
    "alpha1",
    "tau1",
    "tau_b",
    "b",
    "f_b",
    "ratio",
];

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

pub fn report_json(report: &BoundReport) -> Result<String, HarnessError> {
    Ok(serde_json::to_string_pretty(report)? + "\n")
}

pub fn reports_csv(reports: &[BoundReport]) -> Result<String, HarnessError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<&str> = REPORT_CSV_HEADER.to_vec();
    if let Some(first) = reports.first() {
        header.extend(first.verdicts.iter().map(|v| v.bound_id));
    }
    w.write_record(&header)?;
    for rep in reports {
        let inv = &rep.invariants;
        let mut row = vec![
            rep.graph6.clone(),
            inv.n.to_string(),
            inv.e.to_string(),
            inv.t.to_string(),
            inv.sum_deg_sq.to_string(),
            inv.omega.to_string(),
            opt(inv.alpha1),
            opt(inv.tau1),
            opt(inv.tau_b),
            opt(inv.b),
            opt(inv.f_b),
            opt(rep.ratio),
        ];
        row.extend(rep.verdicts.iter().map(|v| {
            match (v.applicable, v.holds) {
                (false, _) => "na",
                (true, None) => "unknown",
                (true, Some(true)) => "pass",
                (true, Some(false)) => "fail",
            }
            .to_string()
        }));
        w.write_record(&row)?;
    }
    Ok(String::from_utf8(
        w.into_inner()
            .map_err(|e| csv::Error::from(e.into_error()))?,
    )
    .expect("csv output is utf-8"))
}

#[derive(Serialize)]
struct SweepDocument<'a> {
    summary: &'a SweepSummary,
    reports: &'a [BoundReport],
}

pub fn sweep_json(summary: &SweepSummary, reports: &[BoundReport]) -> Result<String, HarnessError> {
    Ok(serde_json::to_string_pretty(&SweepDocument { summary, reports })? + "\n")
}

pub fn bench_csv(rows: &[BenchRow]) -> Result<String, HarnessError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "graph6",
        "method",
        "deletions",
        "claimed_bound",
        "exact_tau_b",
    ])?;
    for r in rows {
        w.write_record([
            r.graph6.clone(),
            r.method.to_string(),
            r.deletions.to_string(),
            r.claimed_bound.to_string(),
            r.exact_tau_b.to_string(),
        ])?;
    }
    Ok(String::from_utf8(
        w.into_inner()
            .map_err(|e| csv::Error::from(e.into_error()))?,
    )
    .expect("csv output is utf-8"))
}

pub fn bench_json(rows: &[BenchRow]) -> Result<String, HarnessError> {
    Ok(serde_json::to_string_pretty(rows)? + "\n")
}
