//! Brute-force oracles. Everything here enumerates the whole search space
//! directly from `has_edge`, sharing no search code with the library.

#![allow(dead_code)]

use tribound::graph::{enumerate_graphs, parse_family, EnumerationMode};
use tribound::Graph;

pub fn family(spec: &str) -> Graph {
    parse_family(spec, 0).unwrap().build().unwrap()
}

pub fn unlabeled_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| enumerate_graphs(n, EnumerationMode::Unlabeled).unwrap())
        .collect()
}

pub fn labeled_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(all_labeled).collect()
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            out.push((u, v));
        }
    }
    out
}

/// Every labeled graph on `n` vertices, independent of the library enumerator.
pub fn all_labeled(n: usize) -> Vec<Graph> {
    let ps = pairs(n);
    (0u64..1 << ps.len())
        .map(|mask| {
            let edges: Vec<_> = ps
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

pub fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
    pairs(g.order())
        .into_iter()
        .filter(|&(u, v)| g.has_edge(u, v))
        .collect()
}

pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let n = g.order();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Triangles as triples of positions in `edge_list`.
fn triangle_edge_positions(g: &Graph) -> Vec<[usize; 3]> {
    let edges = edge_list(g);
    let pos = |u, v| edges.iter().position(|&e| e == (u, v)).unwrap();
    triangles(g)
        .into_iter()
        .map(|[a, b, c]| [pos(a, b), pos(a, c), pos(b, c)])
        .collect()
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Best subset under `better`, scanning every mask; `better(new, old)`.
fn best_subset(
    universe: usize,
    feasible: impl Fn(u64) -> bool,
    better: impl Fn(&Vec<usize>, &Vec<usize>) -> bool,
) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for mask in 0u64..1 << universe {
        if !feasible(mask) {
            continue;
        }
        let m = members(mask);
        if best.as_ref().is_none_or(|b| better(&m, b)) {
            best = Some(m);
        }
    }
    best.unwrap()
}

/// α₁ and the lexicographically first maximum triangle-independent edge set.
pub fn alpha1(g: &Graph) -> (usize, Vec<usize>) {
    let tris = triangle_edge_positions(g);
    let w = best_subset(
        edge_list(g).len(),
        |mask| {
            tris.iter()
                .all(|t| t.iter().filter(|&&e| mask >> e & 1 == 1).count() <= 1)
        },
        |a, b| a.len() > b.len() || (a.len() == b.len() && a < b),
    );
    (w.len(), w)
}

/// τ₁ and the lexicographically first minimum triangle edge cover.
pub fn tau1(g: &Graph) -> (usize, Vec<usize>) {
    let tris = triangle_edge_positions(g);
    let w = best_subset(
        edge_list(g).len(),
        |mask| tris.iter().all(|t| t.iter().any(|&e| mask >> e & 1 == 1)),
        |a, b| a.len() < b.len() || (a.len() == b.len() && a < b),
    );
    (w.len(), w)
}

pub fn monochromatic(g: &Graph, side: u64) -> usize {
    edge_list(g)
        .into_iter()
        .filter(|&(u, v)| (side >> u & 1) == (side >> v & 1))
        .count()
}

/// τ_B and the lexicographically first optimal side containing vertex 0.
pub fn tau_b(g: &Graph) -> (usize, Vec<usize>) {
    let w = best_subset(
        g.order(),
        |mask| mask & 1 == 1,
        |a, b| {
            let cost = |s: &Vec<usize>| monochromatic(g, s.iter().map(|&v| 1u64 << v).sum());
            cost(a) < cost(b) || (cost(a) == cost(b) && a < b)
        },
    );
    let side: u64 = w.iter().map(|&v| 1u64 << v).sum();
    (monochromatic(g, side), w)
}

pub fn induces_bipartite(g: &Graph, set: u64) -> bool {
    let vs = members(set);
    (0u64..1 << vs.len()).any(|colour| {
        vs.iter().enumerate().all(|(i, &u)| {
            vs.iter()
                .enumerate()
                .all(|(j, &v)| !g.has_edge(u, v) || (colour >> i & 1) != (colour >> j & 1))
        })
    })
}

/// b and the lexicographically first largest induced bipartite set.
pub fn b(g: &Graph) -> (usize, Vec<usize>) {
    let w = best_subset(
        g.order(),
        |mask| induces_bipartite(g, mask),
        |a, b| a.len() > b.len() || (a.len() == b.len() && a < b),
    );
    (w.len(), w)
}

pub fn omega(g: &Graph) -> usize {
    let n = g.order();
    (0u64..1 << n)
        .filter(|&m| {
            let vs = members(m);
            vs.iter()
                .all(|&u| vs.iter().all(|&v| u == v || g.has_edge(u, v)))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap()
}

/// Most edges kept by a p-colouring, with the lexicographically first
/// optimal assignment.
pub fn max_p_partite(g: &Graph, p: usize) -> (usize, Vec<usize>) {
    let n = g.order();
    let edges = edge_list(g);
    let mut best: Option<(usize, Vec<usize>)> = None;
    for code in 0..p.pow(n as u32) {
        let mut a = vec![0; n];
        let mut c = code;
        for slot in a.iter_mut().rev() {
            *slot = c % p;
            c /= p;
        }
        let kept = edges.iter().filter(|&&(u, v)| a[u] != a[v]).count();
        if best.as_ref().is_none_or(|(k, _)| kept > *k) {
            best = Some((kept, a));
        }
    }
    best.unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism-invariant key: the smallest sorted edge list over all relabellings.
pub fn iso_key(g: &Graph) -> (usize, Vec<(usize, usize)>) {
    let edges = edge_list(g);
    let key = permutations(g.order())
        .into_iter()
        .map(|perm| {
            let mut e: Vec<_> = edges
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (perm[u], perm[v]);
                    (a.min(b), a.max(b))
                })
                .collect();
            e.sort();
            e
        })
        .min()
        .unwrap();
    (g.order(), key)
}
