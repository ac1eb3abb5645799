use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use tribound::bounds::{evaluate_all, BoundReport};
use tribound::graph::{emit_graph6, parse_family, EnumerationMode};
use tribound::harness::{
    bench_all, bench_csv, bench_json, load_graphs, report_json, reports_csv, sweep, sweep_json,
    verdict_exit_code, with_jobs, HarnessError, InputSource, OutputFormat, SweepSummary,
    DEFAULT_TOP_K, EXIT_USAGE,
};

#[derive(Parser)]
#[command(
    name = "tribound",
    version,
    about = "Exact α₁, τ₁, τ_B and b with bound verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact invariants and every bound verdict for one graph.
    Solve {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluates every bound over a corpus.
    VerifyCorpus {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long, env = "TRIBOUND_JOBS")]
        jobs: Option<usize>,
        /// Rows kept in the extremal table.
        #[arg(long, default_value_t = DEFAULT_TOP_K)]
        top: usize,
    },
    /// Prints one graph6 line per family spec.
    Generate {
        specs: Vec<String>,
        /// Default seed for gnp specs without one.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emits each spec this many times, with default seeds seed, seed+1, ...
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    /// Runs every applicable constructive bipartization.
    Bench {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long, env = "TRIBOUND_JOBS")]
        jobs: Option<usize>,
    },
}

#[derive(Args)]
struct InputArgs {
    #[arg(long, conflicts_with_all = ["file", "family", "enumerate"])]
    g6: Option<String>,
    #[arg(long, conflicts_with_all = ["family", "enumerate"])]
    file: Option<PathBuf>,
    #[arg(long, num_args = 1.., conflicts_with = "enumerate")]
    family: Vec<String>,
    /// Every graph on 1..=N vertices.
    #[arg(long, value_name = "N")]
    enumerate: Option<usize>,
    /// With --enumerate, one graph per isomorphism class.
    #[arg(long, requires = "enumerate")]
    unlabeled: bool,
    /// Default seed for gnp specs without one.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "json")]
    format: OutputFormat,
}

impl InputArgs {
    fn source(&self) -> Result<InputSource, HarnessError> {
        if let Some(s) = &self.g6 {
            Ok(InputSource::Graph6(s.clone()))
        } else if let Some(p) = &self.file {
            Ok(InputSource::File(p.clone()))
        } else if !self.family.is_empty() {
            Ok(InputSource::Families(self.family.clone()))
        } else if let Some(max_n) = self.enumerate {
            let mode = if self.unlabeled {
                EnumerationMode::Unlabeled
            } else {
                EnumerationMode::Labeled
            };
            Ok(InputSource::Enumerate { max_n, mode })
        } else {
            Err(HarnessError::Usage(
                "one of --g6, --file, --family or --enumerate is required".into(),
            ))
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), HarnessError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| HarnessError::Io {
            path: path.clone(),
            source,
        }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| HarnessError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

fn verdict_code(reports: &[BoundReport]) -> ExitCode {
    for rep in reports {
        for v in rep.theorem_failures() {
            eprintln!("theorem failure: {} on {}", v.bound_id, rep.graph6);
        }
        for v in rep.conjecture_violations() {
            eprintln!("conjecture violated: {} on {}", v.bound_id, rep.graph6);
        }
    }
    ExitCode::from(verdict_exit_code(reports))
}

fn print_summary(summary: &SweepSummary) {
    eprintln!("graphs: {}", summary.graphs);
    for t in &summary.tallies {
        eprintln!(
            "  {:<24} pass {:>7}  fail {:>3}  n/a {:>7}  unknown {:>5}",
            t.bound_id, t.pass, t.fail, t.not_applicable, t.unknown
        );
    }
    for e in &summary.extremal {
        eprintln!(
            "  extremal {:<12} n={:<2} f_B={:<3} ratio {}",
            e.graph6, e.n, e.f_b, e.ratio
        );
    }
    eprintln!("wall time: {:.3}s", summary.wall_time.as_secs_f64());
}

fn run(cli: Cli) -> Result<ExitCode, HarnessError> {
    match cli.command {
        Command::Solve { input, output } => {
            let graphs = load_graphs(&input.source()?, input.seed)?;
            let [g] = graphs.as_slice() else {
                return Err(HarnessError::Usage(format!(
                    "solve takes exactly one graph, got {}",
                    graphs.len()
                )));
            };
            let report = evaluate_all(g);
            let text = match output.format {
                OutputFormat::Json => report_json(&report)?,
                OutputFormat::Csv => reports_csv(std::slice::from_ref(&report))?,
            };
            emit(&output.out, &text)?;
            Ok(verdict_code(std::slice::from_ref(&report)))
        }
        Command::VerifyCorpus {
            input,
            output,
            jobs,
            top,
        } => {
            let graphs = load_graphs(&input.source()?, input.seed)?;
            let (reports, summary) = with_jobs(jobs, || sweep(&graphs, top))?;
            let text = match output.format {
                OutputFormat::Json => sweep_json(&summary, &reports)?,
                OutputFormat::Csv => reports_csv(&reports)?,
            };
            emit(&output.out, &text)?;
            print_summary(&summary);
            Ok(verdict_code(&reports))
        }
        Command::Generate { specs, seed, count } => {
            if specs.is_empty() {
                return Err(HarnessError::Usage(
                    "generate needs at least one spec".into(),
                ));
            }
            let mut text = String::new();
            for spec in &specs {
                for i in 0..count {
                    let g = parse_family(spec, seed + i)?.build()?;
                    text.push_str(&emit_graph6(&g));
                    text.push('\n');
                }
            }
            emit(&None, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench {
            input,
            output,
            jobs,
        } => {
            let graphs = load_graphs(&input.source()?, input.seed)?;
            let rows = with_jobs(jobs, || bench_all(&graphs))??;
            let text = match output.format {
                OutputFormat::Json => bench_json(&rows)?,
                OutputFormat::Csv => bench_csv(&rows)?,
            };
            emit(&output.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
