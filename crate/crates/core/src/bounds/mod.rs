//! Exact evaluation of the f_B, α₁ and τ_B inequalities on a single graph.
//!
//! Every right-hand side is a [`Rational`]; no comparison goes through
//! floating point. Each verdict carries a fixed `bound_id`:
//!
//! | bound_id | kind | gate | statement |
//! |---|---|---|---|
//! | `conj_alpha1_tau1` | conjecture | none | α₁ + τ₁ ≤ n²/4 |
//! | `conj_f_b` | conjecture | none | α₁ + τ_B ≤ n²/4 |
//! | `f_b_5n2_16` | theorem | none | f_B ≤ 5n²/16 |
//! | `f_b_3n2_10` | theorem | none | f_B ≤ 3n²/10 |
//! | `f_b_4403n2_15000` | theorem | none | f_B ≤ 4403n²/15000 |
//! | `alpha1_nb_4` | theorem | none | α₁ ≤ nb/4 |
//! | `alpha1_n2_2_minus_e` | theorem | none | α₁ ≤ n²/2 − e |
//! | `tau_b_e_2` | theorem | none | τ_B ≤ e/2 |
//! | `tau_b_n2_minus_b2` | theorem | none | τ_B ≤ (n² − b²)/4 |
//! | `tau_b_triangles` | theorem | none | τ_B ≤ e + (6t − Σd²)/n |
//! | `k4_tau_b_n2_9` | theorem | K₄-free | τ_B ≤ n²/9 |
//! | `k5_b_split` | theorem | K₅-free | τ_B ≤ b(n−b)/2 + 3(n−b)²/16 |
//! | `k5_n2_4_minus_e_3` | theorem | K₅-free | τ_B ≤ n²/4 − e/3 |
//! | `k5_deg_sq` | theorem | K₅-free | τ_B ≤ e/2 + (2Σd² − 27t)/(18n) |
//! | `k5_29n2_200` | theorem | K₅-free | τ_B ≤ 29n²/200 |
//! | `k6_6n2_25_minus_e_5` | theorem | K₆-free | τ_B ≤ 6n²/25 − e/5 |
//! | `k6_deg_sq` | theorem | K₆-free | τ_B ≤ e/2 + (29Σd² − 300t)/(200n) |
//! | `k6_17n2_100` | theorem | K₆-free | τ_B ≤ 17n²/100 |
//! | `k6_dense_set_3n2_20` | theorem | K₆-free, dense K₅-free set | τ_B ≤ 3n²/20 |
//! | `k6_b_max` | theorem | K₆-free | τ_B ≤ max((−7b²+4nb+3n²)/20, (−32b²+15nb+17n²)/100) |
//! | `k6_b_e` | theorem | K₆-free | τ_B ≤ e/3 + 17(n−b)²/150 |
//! | `k6_case_f_b` | theorem | K₆-free | f_B ≤ bound of the case on b |
//! | `conj_kr` | conjecture | K_r-free, r = max(5, ω+1) | τ_B ≤ (r−3)n²/(4(r−1)) or (r−2)²n²/(4(r−1)²) |
//! | `dense_cut` | theorem | see [`dense_cut_check`] | f_B(G) ≤ f_B(G[S]) + f_B(G[S̄]) + ½\|[S,S̄]\| + \|[S,S̄] ∩ A\| |

mod cases;

pub use cases::{
    case_analysis_k6, clique_threshold, k6_dense_bound, k6_inequality_one, k6_inequality_two,
    k6_middle_closed_form, CaseAnalysis, K6Case,
};

use serde::Serialize;
use thiserror::Error;

use crate::exact::{
    alpha1_exact, b_exact, f_b_exact, is_triangle_independent, tau1_exact, tau_b_exact,
    SolverError, MAX_B_VERTICES, MAX_CUT_VERTICES,
};
use crate::graph::{emit_graph6, EdgeSet, Graph, GraphError, VertexSet};
use crate::rational::Rational;

/// Largest order for which α₁ and τ₁ are computed during evaluation.
pub const MAX_TRIANGLE_VERTICES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("{0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Exact invariants of one graph. Solver-backed values are `None` when the
/// graph exceeds that solver's limit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantVector {
    pub n: usize,
    pub e: usize,
    pub t: u64,
    pub sum_deg_sq: u64,
    pub omega: usize,
    pub alpha1: Option<usize>,
    pub tau1: Option<usize>,
    pub tau_b: Option<usize>,
    pub b: Option<usize>,
    pub f_b: Option<usize>,
}

impl InvariantVector {
    pub fn compute(g: &Graph) -> Self {
        let n = g.order();
        let triangle_ok = n <= MAX_TRIANGLE_VERTICES;
        let alpha1 = triangle_ok.then(|| alpha1_exact(g).value);
        let tau1 = triangle_ok.then(|| tau1_exact(g).value);
        let tau_b = (n <= MAX_CUT_VERTICES)
            .then(|| tau_b_exact(g).map(|r| r.value).ok())
            .flatten();
        let b = (n <= MAX_B_VERTICES)
            .then(|| b_exact(g).map(|r| r.value).ok())
            .flatten();
        InvariantVector {
            n,
            e: g.size(),
            t: g.triangle_count(),
            sum_deg_sq: g.degree_square_sum(),
            omega: g.clique_number().0,
            alpha1,
            tau1,
            tau_b,
            b,
            f_b: alpha1.zip(tau_b).map(|(a, t)| a + t),
        }
    }

    /// Names of invariants that were not computed.
    pub fn missing(&self) -> Vec<&'static str> {
        [
            ("alpha1", self.alpha1),
            ("tau1", self.tau1),
            ("tau_b", self.tau_b),
            ("b", self.b),
            ("f_b", self.f_b),
        ]
        .into_iter()
        .filter(|(_, v)| v.is_none())
        .map(|(name, _)| name)
        .collect()
    }

    /// n·Σd² ≥ (Σd)² = 4e².
    pub fn satisfies_cauchy_schwarz(&self) -> bool {
        self.n as u128 * self.sum_deg_sq as u128 >= 4 * (self.e as u128).pow(2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Theorem,
    Conjecture,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundVerdict {
    pub bound_id: &'static str,
    pub kind: BoundKind,
    /// The clique or structural gate passed.
    pub applicable: bool,
    pub lhs: Option<Rational>,
    pub rhs: Option<Rational>,
    /// `lhs ≤ rhs`, present when applicable and both sides are known.
    pub holds: Option<bool>,
}

impl BoundVerdict {
    fn new(
        bound_id: &'static str,
        kind: BoundKind,
        applicable: bool,
        lhs: Option<Rational>,
        rhs: Option<Rational>,
    ) -> Self {
        let (lhs, rhs) = if applicable { (lhs, rhs) } else { (None, None) };
        let holds = lhs.zip(rhs).map(|(l, r)| l <= r);
        BoundVerdict {
            bound_id,
            kind,
            applicable,
            lhs,
            rhs,
            holds,
        }
    }

    pub fn failed(&self) -> bool {
        self.holds == Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub graph6: String,
    pub invariants: InvariantVector,
    pub verdicts: Vec<BoundVerdict>,
    /// f_B/(n²/4).
    pub ratio: Option<Rational>,
    /// Invariants left uncomputed; empty for a complete report.
    pub partial: Vec<&'static str>,
}

impl BoundReport {
    pub fn theorem_failures(&self) -> impl Iterator<Item = &BoundVerdict> {
        self.verdicts
            .iter()
            .filter(|v| v.kind == BoundKind::Theorem && v.failed())
    }

    pub fn conjecture_violations(&self) -> impl Iterator<Item = &BoundVerdict> {
        self.verdicts
            .iter()
            .filter(|v| v.kind == BoundKind::Conjecture && v.failed())
    }

    pub fn verdict(&self, bound_id: &str) -> Option<&BoundVerdict> {
        self.verdicts.iter().find(|v| v.bound_id == bound_id)
    }
}

fn q(numer: i128, denom: i128) -> Rational {
    Rational::new(numer, denom)
}

fn r(v: Option<usize>) -> Option<Rational> {
    v.map(Rational::from)
}

/// Conjectured τ_B bound for K_r-free graphs, r ≥ 5.
pub fn conjecture_kr_bound(n: usize, r: usize) -> Rational {
    let (n, r) = (n as i128, r as i128);
    if r % 2 == 1 {
        q((r - 3) * n * n, 4 * (r - 1))
    } else {
        q((r - 2) * (r - 2) * n * n, 4 * (r - 1) * (r - 1))
    }
}

/// A set S inducing a K₅-free subgraph with |S| ≥ 49n/50, drawn from the
/// neighbourhoods and V itself.
pub fn dense_k5_free_set(g: &Graph) -> Option<VertexSet> {
    let n = g.order();
    let big = |s: VertexSet| 50 * s.len() >= 49 * n;
    let k5_free = |s: VertexSet| {
        s.is_empty()
            || g.induced_subgraph(s)
                .map(|h| h.clique_number().0 <= 4)
                .unwrap_or(false)
    };
    (0..n)
        .map(|v| g.neighbors(v))
        .chain(std::iter::once(g.vertices()))
        .find(|&s| big(s) && k5_free(s))
}

/// Evaluates every bound on `g`.
pub fn evaluate_all(g: &Graph) -> BoundReport {
    let inv = InvariantVector::compute(g);
    let n = inv.n as i128;
    let n2 = n * n;
    let e = inv.e as i128;
    let t = inv.t as i128;
    let s2 = inv.sum_deg_sq as i128;
    let (k4, k5, k6) = (inv.omega <= 3, inv.omega <= 4, inv.omega <= 5);

    let alpha1 = r(inv.alpha1);
    let tau_b = r(inv.tau_b);
    let f_b = r(inv.f_b);
    let b = inv.b.map(|b| b as i128);
    let on_b = |f: &dyn Fn(i128) -> Rational| b.map(f);

    use BoundKind::{Conjecture, Theorem};
    let mut v = Vec::new();
    let mut push = |id, kind, gate, lhs, rhs| v.push(BoundVerdict::new(id, kind, gate, lhs, rhs));

    let alpha_tau1 = inv.alpha1.zip(inv.tau1).map(|(a, t)| Rational::from(a + t));
    push(
        "conj_alpha1_tau1",
        Conjecture,
        true,
        alpha_tau1,
        Some(q(n2, 4)),
    );
    push("conj_f_b", Conjecture, true, f_b, Some(q(n2, 4)));
    push("f_b_5n2_16", Theorem, true, f_b, Some(q(5 * n2, 16)));
    push("f_b_3n2_10", Theorem, true, f_b, Some(q(3 * n2, 10)));
    push(
        "f_b_4403n2_15000",
        Theorem,
        true,
        f_b,
        Some(q(4403 * n2, 15000)),
    );
    push("alpha1_nb_4", Theorem, true, alpha1, on_b(&|b| q(n * b, 4)));
    push(
        "alpha1_n2_2_minus_e",
        Theorem,
        true,
        alpha1,
        Some(q(n2, 2) - Rational::from(e)),
    );
    push("tau_b_e_2", Theorem, true, tau_b, Some(q(e, 2)));
    push(
        "tau_b_n2_minus_b2",
        Theorem,
        true,
        tau_b,
        on_b(&|b| q(n2 - b * b, 4)),
    );
    push(
        "tau_b_triangles",
        Theorem,
        true,
        tau_b,
        Some(Rational::from(e) + q(6 * t - s2, n)),
    );
    push("k4_tau_b_n2_9", Theorem, k4, tau_b, Some(q(n2, 9)));
    push(
        "k5_b_split",
        Theorem,
        k5,
        tau_b,
        on_b(&|b| q(b * (n - b), 2) + q(3 * (n - b) * (n - b), 16)),
    );
    push(
        "k5_n2_4_minus_e_3",
        Theorem,
        k5,
        tau_b,
        Some(q(n2, 4) - q(e, 3)),
    );
    push(
        "k5_deg_sq",
        Theorem,
        k5,
        tau_b,
        Some(q(e, 2) + q(2 * s2 - 27 * t, 18 * n)),
    );
    push("k5_29n2_200", Theorem, k5, tau_b, Some(q(29 * n2, 200)));
    push(
        "k6_6n2_25_minus_e_5",
        Theorem,
        k6,
        tau_b,
        Some(q(6 * n2, 25) - q(e, 5)),
    );
    push(
        "k6_deg_sq",
        Theorem,
        k6,
        tau_b,
        Some(q(e, 2) + q(29 * s2 - 300 * t, 200 * n)),
    );
    push("k6_17n2_100", Theorem, k6, tau_b, Some(q(17 * n2, 100)));
    let dense = k6 && dense_k5_free_set(g).is_some();
    push(
        "k6_dense_set_3n2_20",
        Theorem,
        dense,
        tau_b,
        Some(q(3 * n2, 20)),
    );
    push(
        "k6_b_max",
        Theorem,
        k6,
        tau_b,
        on_b(&|b| {
            q(-7 * b * b + 4 * n * b + 3 * n2, 20).max(q(-32 * b * b + 15 * n * b + 17 * n2, 100))
        }),
    );
    push(
        "k6_b_e",
        Theorem,
        k6,
        tau_b,
        on_b(&|b| q(e, 3) + q(17 * (n - b) * (n - b), 150)),
    );
    push(
        "k6_case_f_b",
        Theorem,
        k6,
        f_b,
        inv.b
            .map(|b| case_analysis_k6(inv.n as u64, b as u64, inv.e as u64).bound),
    );
    let kr = 5.max(inv.omega + 1);
    push(
        "conj_kr",
        Conjecture,
        true,
        tau_b,
        Some(conjecture_kr_bound(inv.n, kr)),
    );

    let ratio = f_b.map(|f| f * q(4, n2));
    BoundReport {
        graph6: emit_graph6(g),
        partial: inv.missing(),
        invariants: inv,
        verdicts: v,
        ratio,
    }
}

/// Checks f_B(G) ≤ f_B(G[S]) + f_B(G[S̄]) + ½|[S,S̄]| + |[S,S̄] ∩ A| for a
/// nonempty proper `s` and a triangle-independent `a`.
pub fn dense_cut_check(g: &Graph, s: VertexSet, a: &EdgeSet) -> Result<BoundVerdict, BoundsError> {
    let all = g.vertices();
    let s = s.intersection(all);
    let rest = all.difference(s);
    if s.is_empty() || rest.is_empty() {
        return Err(BoundsError::InvalidArgument(
            "S must be a nonempty proper vertex subset".into(),
        ));
    }
    if !a.belongs_to(g) {
        return Err(GraphError::ForeignEdgeSet.into());
    }
    if !is_triangle_independent(g, a) {
        return Err(BoundsError::InvalidArgument(
            "A is not triangle-independent".into(),
        ));
    }
    let idx = g.edge_indexing();
    let cut_in_a = a
        .iter()
        .filter(|&id| {
            let (u, v) = idx.pair(id);
            s.contains(u) != s.contains(v)
        })
        .count();
    let cut = g.cut_size(s);
    let f = |set| -> Result<usize, BoundsError> { Ok(f_b_exact(&g.induced_subgraph(set)?)?.sum) };
    let rhs = Rational::from(f(s)? + f(rest)? + cut_in_a) + q(cut as i128, 2);
    let lhs = Rational::from(f_b_exact(g)?.sum);
    Ok(BoundVerdict::new(
        "dense_cut",
        BoundKind::Theorem,
        true,
        Some(lhs),
        Some(rhs),
    ))
}
