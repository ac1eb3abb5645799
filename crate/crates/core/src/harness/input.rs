use std::fs;
use std::path::PathBuf;

use super::HarnessError;
use crate::graph::{enumerate_graphs, parse_family, parse_graph6, EnumerationMode, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputSource {
    Graph6(String),
    /// One graph6 string per line; blank lines and lines starting with `#`
    /// are skipped.
    File(PathBuf),
    Families(Vec<String>),
    /// Every graph on 1..=max_n vertices, labeled or one per isomorphism class.
    Enumerate {
        max_n: usize,
        mode: EnumerationMode,
    },
}

/// Graphs in input order. `seed` fills in gnp specs written without a seed.
pub fn load_graphs(source: &InputSource, seed: u64) -> Result<Vec<Graph>, HarnessError> {
    match source {
        InputSource::Graph6(s) => Ok(vec![parse_graph6(s)?]),
        InputSource::File(path) => {
            let text = fs::read_to_string(path).map_err(|source| HarnessError::Io {
                path: path.clone(),
                source,
            })?;
            text.lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
                .map(|(i, l)| {
                    parse_graph6(l.trim()).map_err(|source| HarnessError::Parse {
                        line: i + 1,
                        source,
                    })
                })
                .collect()
        }
        InputSource::Families(specs) => specs
            .iter()
            .map(|s| Ok(parse_family(s, seed)?.build()?))
            .collect(),
        InputSource::Enumerate { max_n, mode } => {
            let mut out = Vec::new();
            for n in 1..=*max_n {
                out.extend(enumerate_graphs(n, *mode)?);
            }
            Ok(out)
        }
    }
}
