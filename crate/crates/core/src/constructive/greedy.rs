use super::{CertifiedBipartization, ConstructError, Method};
use crate::graph::{Graph, VertexPartition};
use crate::rational::Rational;

/// Local search on a 2-colouring: while some vertex has more neighbours on
/// its own side than across, move the lowest-indexed such vertex. Returns
/// the stable colouring and the number of moves made.
pub fn local_search_from(g: &Graph, start: &VertexPartition) -> (VertexPartition, usize) {
    let n = g.order();
    let mut side0: u64 = start.members(0).0;
    let mut moves = 0;
    loop {
        let unhappy = (0..n).find(|&v| {
            let row = g.adjacency()[v];
            let on0 = (row & side0).count_ones();
            let on1 = (row & !side0).count_ones();
            if side0 >> v & 1 == 1 {
                on0 > on1
            } else {
                on1 > on0
            }
        });
        match unhappy {
            Some(v) => {
                side0 ^= 1 << v;
                moves += 1;
            }
            None => break,
        }
    }
    (
        VertexPartition::from_side(n, crate::graph::VertexSet(side0)),
        moves,
    )
}

/// Greedy local search from the all-on-one-side split; at most e/2 deletions.
pub fn greedy_bipartize(g: &Graph) -> Result<CertifiedBipartization, ConstructError> {
    let start = VertexPartition::from_side(g.order(), g.vertices());
    let (sides, _) = local_search_from(g, &start);
    CertifiedBipartization::certify(g, sides, Rational::new(g.size() as i128, 2), Method::Greedy)
}
