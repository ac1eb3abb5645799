use super::{CertifiedBipartization, ConstructError, Method};
use crate::graph::{Graph, VertexPartition, VertexSet};
use crate::rational::Rational;

/// A 2-colouring of an induced subgraph: `side` is the colour-0 class and
/// `members \ side` the colour-1 class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Piece {
    pub members: VertexSet,
    pub side: VertexSet,
}

impl Piece {
    pub fn new(members: VertexSet, side: VertexSet) -> Self {
        Piece {
            members,
            side: side.intersection(members),
        }
    }

    pub fn empty() -> Self {
        Piece::new(VertexSet::EMPTY, VertexSet::EMPTY)
    }

    /// Lifts a colour class given in the relabelled indices of `G[members]`.
    pub fn from_local(members: VertexSet, local_side: VertexSet) -> Self {
        let side = members
            .iter()
            .enumerate()
            .filter(|&(i, _)| local_side.contains(i))
            .map(|(_, v)| v)
            .collect();
        Piece { members, side }
    }

    pub fn other(&self) -> VertexSet {
        self.members.difference(self.side)
    }

    /// Edges of `g` inside a colour class.
    pub fn monochromatic(&self, g: &Graph) -> usize {
        g.edges_within(self.side) + g.edges_within(self.other())
    }

    fn flipped(&self) -> Piece {
        Piece::new(self.members, self.other())
    }
}

/// Better of the two alignments `(A₁∪A₂ | B₁∪B₂)` and `(A₁∪B₂ | B₁∪A₂)`,
/// keeping the first on ties.
pub fn join_pieces(g: &Graph, a: &Piece, b: &Piece) -> Result<Piece, ConstructError> {
    let overlap = a.members.intersection(b.members);
    if !overlap.is_empty() {
        return Err(ConstructError::OverlappingPieces(overlap));
    }
    let members = a.members.union(b.members);
    let cost = |b: &Piece| g.edges_between(a.side, b.side) + g.edges_between(a.other(), b.other());
    let flipped = b.flipped();
    let chosen = if cost(&flipped) < cost(b) {
        flipped
    } else {
        *b
    };
    Ok(Piece::new(members, a.side.union(chosen.side)))
}

/// Joins two pieces covering every vertex of `g`. The claimed bound is the
/// pieces' own monochromatic edges plus half the edges between them.
pub fn two_way_join(
    g: &Graph,
    a: &Piece,
    b: &Piece,
) -> Result<CertifiedBipartization, ConstructError> {
    let joined = join_pieces(g, a, b)?;
    let missing = g.vertices().difference(joined.members);
    if !missing.is_empty() {
        return Err(ConstructError::UncoveredVertices(missing));
    }
    let inner = a.monochromatic(g) + b.monochromatic(g);
    let cross = g.edges_between(a.members, b.members);
    let bound = Rational::from(inner) + Rational::new(cross as i128, 2);
    CertifiedBipartization::certify(
        g,
        VertexPartition::from_side(g.order(), joined.side),
        bound,
        Method::TwoWayJoin,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_family;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn no_cross_edges() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let a = Piece::new(set(&[0, 1]), set(&[0]));
        let b = Piece::new(set(&[2, 3]), set(&[2]));
        assert_eq!(two_way_join(&g, &a, &b).unwrap().deletion_count(), 0);
    }

    #[test]
    fn single_cross_edge() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let a = Piece::new(set(&[0]), set(&[0]));
        let b = Piece::new(set(&[1]), set(&[1]));
        assert_eq!(two_way_join(&g, &a, &b).unwrap().deletion_count(), 0);
    }

    #[test]
    fn halves_of_k22() {
        let g = parse_family("kb(2,2)", 0).unwrap().build().unwrap();
        // {0,2} and {1,3} are each one edge.
        let a = Piece::new(set(&[0, 2]), set(&[0]));
        let b = Piece::new(set(&[1, 3]), set(&[1]));
        let r = two_way_join(&g, &a, &b).unwrap();
        assert!(r.deletion_count() <= 1);
        assert_eq!(r.claimed_bound, Rational::from(1u64));
    }

    #[test]
    fn errors() {
        let g = Graph::empty(3).unwrap();
        let a = Piece::new(set(&[0, 1]), set(&[0]));
        let b = Piece::new(set(&[1, 2]), set(&[1]));
        assert!(matches!(
            two_way_join(&g, &a, &b),
            Err(ConstructError::OverlappingPieces(_))
        ));
        let c = Piece::new(set(&[2]), VertexSet::EMPTY);
        assert!(two_way_join(&g, &Piece::new(set(&[0]), VertexSet::EMPTY), &c).is_err());
    }
}
