use super::{CertifiedBipartization, ConstructError, Method};
use crate::graph::{Graph, VertexPartition, VertexSet};
use crate::rational::Rational;

fn part_weights(g: &Graph, parts: &VertexPartition) -> Vec<Vec<usize>> {
    let k = parts.parts();
    let mut w = vec![vec![0; k]; k];
    for (u, v) in g.edges() {
        let (a, b) = (parts.part_of(u), parts.part_of(v));
        w[a][b] += 1;
        if a != b {
            w[b][a] += 1;
        }
    }
    w
}

/// Every balanced split of `2m` parts into two sides of `m` parts with part
/// 0 on side 0, as `(bitmask of side-0 parts, edges of g inside a side)`, in
/// increasing mask order. `parts` is padded to `2m` first.
pub fn merge_split_costs(
    g: &Graph,
    parts: &VertexPartition,
    m: usize,
) -> Result<Vec<(u64, usize)>, ConstructError> {
    if m < 1 {
        return Err(ConstructError::InvalidArgument("merge needs m >= 1".into()));
    }
    if parts.len() != g.order() {
        return Err(ConstructError::InvalidArgument(format!(
            "partition covers {} vertices, graph has {}",
            parts.len(),
            g.order()
        )));
    }
    if parts.parts() > 2 * m {
        return Err(ConstructError::InvalidArgument(format!(
            "{} parts exceed 2m = {}",
            parts.parts(),
            2 * m
        )));
    }
    let parts = parts.padded(2 * m);
    let w = part_weights(g, &parts);
    let k = 2 * m;
    let mut out = Vec::new();
    for mask in 0u64..(1 << k) {
        if mask & 1 == 0 || mask.count_ones() as usize != m {
            continue;
        }
        let mut cost = 0;
        for a in 0..k {
            for b in a..k {
                if (mask >> a & 1) == (mask >> b & 1) {
                    cost += w[a][b];
                }
            }
        }
        out.push((mask, cost));
    }
    Ok(out)
}

/// Side-0 vertices of the cheapest balanced merge (first one on ties).
pub(crate) fn best_merge(
    g: &Graph,
    parts: &VertexPartition,
    m: usize,
) -> Result<VertexSet, ConstructError> {
    let costs = merge_split_costs(g, parts, m)?;
    let (mask, _) = costs
        .into_iter()
        .min_by_key(|&(_, c)| c)
        .expect("at least one split");
    Ok((0..g.order())
        .filter(|&v| mask >> parts.part_of(v) & 1 == 1)
        .collect())
}

/// Coalesces a proper partition into at most `2m` parts into two sides,
/// deleting at most (m−1)e/(2m−1) edges.
pub fn merge_parts(
    g: &Graph,
    parts: &VertexPartition,
    m: usize,
) -> Result<CertifiedBipartization, ConstructError> {
    if parts.len() == g.order() && !parts.is_proper_for(g) {
        return Err(ConstructError::InvalidArgument(
            "partition has an edge inside a part".into(),
        ));
    }
    let side = best_merge(g, parts, m)?;
    let bound = Rational::new(((m - 1) * g.size()) as i128, (2 * m - 1) as i128);
    CertifiedBipartization::certify(
        g,
        VertexPartition::from_side(g.order(), side),
        bound,
        Method::MergeParts,
    )
}
