//! Named graph families and the compact textual grammar used on the command line.
//!
//! ```text
//! family  := name "(" args ")" | "k4e"
//! complete(n) | K(n)            empty(n)
//! complete_bipartite(a,b) | kb(a,b)
//! complete_multipartite(a,b,...) | km(a,b,...)
//! turan(n,p) | T(n,p)           cycle(n) | C(n)       path(n) | P(n)
//! join(F1,F2)                   jb(r1,...,rt) | join_of_bicliques(r1,...,rt)
//! k4e | k4_minus_edge           gnp(n,p,seed) | random(n,p,seed)
//! ```
//!
//! `gnp` draws one [`SplitMix64`] output per vertex pair in lexicographic
//! order and keeps the edge when the top 53 bits, read as a fraction in
//! `[0, 1)`, are below `p`.

use std::fmt;

use thiserror::Error;

use super::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("cannot parse family spec `{spec}`: {reason}")]
    Syntax { spec: String, reason: String },
    #[error("unknown family `{0}`")]
    Unknown(String),
    #[error("invalid size for {family}: {reason}")]
    InvalidSize {
        family: &'static str,
        reason: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Complete(usize),
    Empty(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    Turan(usize, usize),
    Cycle(usize),
    Path(usize),
    Join(Box<Family>, Box<Family>),
    JoinOfBicliques(Vec<usize>),
    K4MinusEdge,
    Gnp { n: usize, p: f64, seed: u64 },
}

/// SplitMix64 (Steele, Lea and Flood): `state += 0x9e3779b97f4a7c15`, then two
/// xor-shift-multiply rounds. Chosen because it is trivial to reproduce in any
/// language.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Edges of the Turán graph T(n, p).
pub fn turan_edge_count(n: usize, p: usize) -> usize {
    if p == 0 {
        return 0;
    }
    let sizes = turan_part_sizes(n, p);
    let within: usize = sizes.iter().map(|s| s * s.saturating_sub(1) / 2).sum();
    n * n.saturating_sub(1) / 2 - within
}

fn turan_part_sizes(n: usize, p: usize) -> Vec<usize> {
    (0..p).map(|i| n / p + usize::from(i < n % p)).collect()
}

fn size_err(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::InvalidSize {
        family,
        reason: reason.into(),
    }
}

fn check_order(family: &'static str, n: usize) -> Result<(), FamilyError> {
    if n == 0 || n > MAX_VERTICES {
        Err(size_err(family, format!("vertex count {n} outside 1..=64")))
    } else {
        Ok(())
    }
}

fn multipartite(sizes: &[usize]) -> Result<Graph, FamilyError> {
    let n: usize = sizes.iter().sum();
    check_order("complete_multipartite", n)?;
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

impl Family {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match self {
            Family::Complete(n) => {
                check_order("complete", *n)?;
                Ok(Graph::empty(*n)?.complement())
            }
            Family::Empty(n) => {
                check_order("empty", *n)?;
                Ok(Graph::empty(*n)?)
            }
            Family::CompleteBipartite(a, b) => {
                if *a == 0 || *b == 0 {
                    return Err(size_err("complete_bipartite", "empty side"));
                }
                multipartite(&[*a, *b])
            }
            Family::CompleteMultipartite(sizes) => {
                if sizes.is_empty() || sizes.contains(&0) {
                    return Err(size_err(
                        "complete_multipartite",
                        "zero parts or empty part",
                    ));
                }
                multipartite(sizes)
            }
            Family::Turan(n, p) => {
                if *p == 0 || p > n {
                    return Err(size_err(
                        "turan",
                        format!("need 1 <= p <= n, got n={n}, p={p}"),
                    ));
                }
                multipartite(&turan_part_sizes(*n, *p))
            }
            Family::Cycle(n) => {
                if *n < 3 {
                    return Err(size_err("cycle", "need at least 3 vertices"));
                }
                check_order("cycle", *n)?;
                let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
                Ok(Graph::from_edges(*n, &edges)?)
            }
            Family::Path(n) => {
                check_order("path", *n)?;
                let edges: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
                Ok(Graph::from_edges(*n, &edges)?)
            }
            Family::Join(a, b) => {
                let (a, b) = (a.build()?, b.build()?);
                a.join(&b)
                    .map_err(|_| size_err("join", "more than 64 vertices"))
            }
            Family::JoinOfBicliques(rs) => {
                if rs.is_empty() || rs.contains(&0) {
                    return Err(size_err(
                        "join_of_bicliques",
                        "need at least one block, each r >= 1",
                    ));
                }
                let mut blocks = rs.iter().map(|&r| multipartite(&[r, r]));
                let mut g = blocks.next().expect("nonempty")?;
                for block in blocks {
                    g = g
                        .join(&block?)
                        .map_err(|_| size_err("join_of_bicliques", "more than 64 vertices"))?;
                }
                Ok(g)
            }
            Family::K4MinusEdge => Ok(Graph::from_edges(
                4,
                &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)],
            )?),
            Family::Gnp { n, p, seed } => {
                check_order("gnp", *n)?;
                if !(0.0..=1.0).contains(p) {
                    return Err(size_err(
                        "gnp",
                        format!("edge probability {p} outside [0, 1]"),
                    ));
                }
                let mut rng = SplitMix64::new(*seed);
                let mut g = Graph::empty(*n)?;
                for u in 0..*n {
                    for v in u + 1..*n {
                        if rng.next_f64() < *p {
                            g.add_edge(u, v)?;
                        }
                    }
                }
                Ok(g)
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            Family::Complete(n) => write!(f, "complete({n})"),
            Family::Empty(n) => write!(f, "empty({n})"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite({a},{b})"),
            Family::CompleteMultipartite(s) => write!(f, "complete_multipartite({})", list(s)),
            Family::Turan(n, p) => write!(f, "turan({n},{p})"),
            Family::Cycle(n) => write!(f, "cycle({n})"),
            Family::Path(n) => write!(f, "path({n})"),
            Family::Join(a, b) => write!(f, "join({a},{b})"),
            Family::JoinOfBicliques(r) => write!(f, "jb({})", list(r)),
            Family::K4MinusEdge => write!(f, "k4e"),
            Family::Gnp { n, p, seed } => write!(f, "gnp({n},{p},{seed})"),
        }
    }
}

/// Parses one family spec. `default_seed` fills in a missing `gnp` seed.
pub fn parse_family(spec: &str, default_seed: u64) -> Result<Family, FamilyError> {
    let mut parser = Parser {
        src: spec,
        pos: 0,
        default_seed,
    };
    let family = parser.family()?;
    parser.skip_ws();
    if parser.pos != spec.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(family)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    default_seed: u64,
}

impl Parser<'_> {
    fn error(&self, reason: &str) -> FamilyError {
        FamilyError::Syntax {
            spec: self.src.to_string(),
            reason: format!("{reason} at offset {}", self.pos),
        }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), FamilyError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn token(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_' || c == '.' || c == '/'))
            .unwrap_or(rest.len());
        self.pos += len;
        &self.src[start..start + len]
    }

    fn number(&mut self) -> Result<usize, FamilyError> {
        let tok = self.token().to_string();
        tok.parse()
            .map_err(|_| self.error(&format!("expected integer, found `{tok}`")))
    }

    fn numbers(&mut self) -> Result<Vec<usize>, FamilyError> {
        self.expect('(')?;
        let mut out = vec![self.number()?];
        while self.eat(',') {
            out.push(self.number()?);
        }
        self.expect(')')?;
        Ok(out)
    }

    fn probability(&mut self) -> Result<f64, FamilyError> {
        let tok = self.token().to_string();
        if let Some((a, b)) = tok.split_once('/') {
            let (a, b): (f64, f64) = match (a.parse(), b.parse()) {
                (Ok(a), Ok(b)) => (a, b),
                _ => return Err(self.error(&format!("bad probability `{tok}`"))),
            };
            return Ok(a / b);
        }
        tok.parse()
            .map_err(|_| self.error(&format!("bad probability `{tok}`")))
    }

    fn arity(&self, name: &str, args: &[usize], want: usize) -> Result<(), FamilyError> {
        if args.len() == want {
            Ok(())
        } else {
            Err(self.error(&format!(
                "{name} takes {want} argument(s), got {}",
                args.len()
            )))
        }
    }

    fn family(&mut self) -> Result<Family, FamilyError> {
        let name = self.token().to_ascii_lowercase();
        match name.as_str() {
            "k4e" | "k4_minus_edge" => Ok(Family::K4MinusEdge),
            "join" => {
                self.expect('(')?;
                let a = self.family()?;
                self.expect(',')?;
                let b = self.family()?;
                self.expect(')')?;
                Ok(Family::Join(Box::new(a), Box::new(b)))
            }
            "gnp" | "random" => {
                self.expect('(')?;
                let n = self.number()?;
                self.expect(',')?;
                let p = self.probability()?;
                let seed = if self.eat(',') {
                    self.number()? as u64
                } else {
                    self.default_seed
                };
                self.expect(')')?;
                Ok(Family::Gnp { n, p, seed })
            }
            "complete" | "k" | "empty" | "cycle" | "c" | "path" | "p" => {
                let args = self.numbers()?;
                self.arity(&name, &args, 1)?;
                let n = args[0];
                Ok(match name.as_str() {
                    "complete" | "k" => Family::Complete(n),
                    "empty" => Family::Empty(n),
                    "cycle" | "c" => Family::Cycle(n),
                    _ => Family::Path(n),
                })
            }
            "complete_bipartite" | "kb" => {
                let args = self.numbers()?;
                self.arity(&name, &args, 2)?;
                Ok(Family::CompleteBipartite(args[0], args[1]))
            }
            "turan" | "t" => {
                let args = self.numbers()?;
                self.arity(&name, &args, 2)?;
                Ok(Family::Turan(args[0], args[1]))
            }
            "complete_multipartite" | "km" => Ok(Family::CompleteMultipartite(self.numbers()?)),
            "jb" | "join_of_bicliques" => Ok(Family::JoinOfBicliques(self.numbers()?)),
            "" => Err(self.error("expected family name")),
            _ => Err(FamilyError::Unknown(name)),
        }
    }
}
