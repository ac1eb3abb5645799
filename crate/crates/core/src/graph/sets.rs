use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{bit, low_mask, Graph, GraphError};

/// A subset of vertex indices `0..64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !bit(v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement within `0..n`.
    pub fn complement(self, n: usize) -> VertexSet {
        VertexSet(!self.0 & low_mask(n))
    }

    /// Members in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    /// Lexicographic order of the sorted member lists; a proper prefix sorts first.
    pub fn lex_cmp(self, other: VertexSet) -> Ordering {
        lex_cmp_words(&[self.0], &[other.0])
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Sorted-member-list lexicographic comparison of two bitsets of equal word length.
pub(crate) fn lex_cmp_words(a: &[u64], b: &[u64]) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    let first_diff = a
        .iter()
        .zip(b)
        .enumerate()
        .find(|(_, (x, y))| x != y)
        .map(|(i, (x, y))| (i, (x ^ y).trailing_zeros()));
    let Some((word, offset)) = first_diff else {
        return Ordering::Equal;
    };
    // The set holding the first differing element is smaller, unless the other
    // set has no elements beyond it (then the other is a proper prefix).
    let a_holds = a[word] & (1u64 << offset) != 0;
    let other = if a_holds { b } else { a };
    let above_mask = if offset == 63 {
        0
    } else {
        !0u64 << (offset + 1)
    };
    let other_has_more = other[word] & above_mask != 0 || other[word + 1..].iter().any(|&w| w != 0);
    if a_holds == other_has_more {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Dense ids for the edges of a graph, in lexicographic `(u, v)`, `u < v` order.
#[derive(Clone, Debug)]
pub struct EdgeIndexing {
    n: usize,
    pairs: Vec<(usize, usize)>,
    ids: Vec<u32>,
}

const NO_EDGE: u32 = u32::MAX;

impl EdgeIndexing {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let pairs: Vec<_> = g.edges().collect();
        let mut ids = vec![NO_EDGE; n * n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            ids[u * n + v] = i as u32;
            ids[v * n + u] = i as u32;
        }
        EdgeIndexing { n, pairs, ids }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    #[inline]
    pub fn pair(&self, id: usize) -> (usize, usize) {
        self.pairs[id]
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    #[inline]
    pub fn id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        match self.ids[u * self.n + v] {
            NO_EDGE => None,
            id => Some(id as usize),
        }
    }

    /// Empty edge set over this indexing.
    pub fn empty_set(&self) -> EdgeSet {
        EdgeSet::new(self.len())
    }

    pub fn set_from_pairs<I>(&self, pairs: I) -> Result<EdgeSet, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut s = self.empty_set();
        for (u, v) in pairs {
            let id = self.id(u, v).ok_or(GraphError::ForeignEdgeSet)?;
            s.insert(id);
        }
        Ok(s)
    }

    /// Edge ids of the triangle `{u, v, w}` (all three edges must exist).
    pub fn triangle_ids(&self, [u, v, w]: [usize; 3]) -> [usize; 3] {
        [
            self.id(u, v).expect("triangle edge"),
            self.id(u, w).expect("triangle edge"),
            self.id(v, w).expect("triangle edge"),
        ]
    }

    /// Spanning subgraph of `g` with exactly the edges in `s`.
    pub fn spanning_subgraph(&self, s: &EdgeSet) -> Graph {
        let mut rows = vec![0u64; self.n];
        for id in s.iter() {
            let (u, v) = self.pairs[id];
            rows[u] |= bit(v);
            rows[v] |= bit(u);
        }
        Graph::from_adjacency(rows).expect("indexing built from a valid graph")
    }

    /// Edges with both endpoints in the same part of `partition`.
    pub fn monochromatic(&self, partition: &VertexPartition) -> EdgeSet {
        let mut s = self.empty_set();
        for (id, &(u, v)) in self.pairs.iter().enumerate() {
            if partition.part_of(u) == partition.part_of(v) {
                s.insert(id);
            }
        }
        s
    }
}

/// A bitset over the edge ids of one graph's [`EdgeIndexing`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    universe: usize,
    words: Vec<u64>,
}

impl EdgeSet {
    pub fn new(universe: usize) -> Self {
        EdgeSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    /// Number of edge ids this set ranges over, e(G) of its source graph.
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn belongs_to(&self, g: &Graph) -> bool {
        self.universe == g.size()
    }

    #[inline]
    pub fn insert(&mut self, id: usize) {
        assert!(id < self.universe, "edge id {id} out of range");
        self.words[id / 64] |= 1u64 << (id % 64);
    }

    #[inline]
    pub fn remove(&mut self, id: usize) {
        self.words[id / 64] &= !(1u64 << (id % 64));
    }

    #[inline]
    pub fn contains(&self, id: usize) -> bool {
        id < self.universe && self.words[id / 64] & (1u64 << (id % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| VertexIter(w).map(move |b| i * 64 + b))
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        assert_eq!(self.universe, other.universe);
        EdgeSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersection_len(&self, other: &EdgeSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Lexicographic order of the sorted id lists.
    pub fn lex_cmp(&self, other: &EdgeSet) -> Ordering {
        lex_cmp_words(&self.words, &other.words)
    }

    /// N_A(v): the vertices joined to `v` by an edge of this set.
    pub fn neighbors_of(&self, indexing: &EdgeIndexing, v: usize) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for id in self.iter() {
            let (a, b) = indexing.pair(id);
            if a == v {
                out.insert(b);
            } else if b == v {
                out.insert(a);
            }
        }
        out
    }

    pub fn to_pairs(&self, indexing: &EdgeIndexing) -> Vec<(usize, usize)> {
        self.iter().map(|id| indexing.pair(id)).collect()
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Assignment of every vertex to one of `parts` classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexPartition {
    parts: usize,
    assignment: Vec<usize>,
}

impl VertexPartition {
    pub fn new(parts: usize, assignment: Vec<usize>) -> Result<Self, GraphError> {
        if parts == 0 {
            return Err(GraphError::InvalidPartition("zero parts".into()));
        }
        if let Some((v, &p)) = assignment.iter().enumerate().find(|(_, &p)| p >= parts) {
            return Err(GraphError::InvalidPartition(format!(
                "vertex {v} assigned to part {p} of {parts}"
            )));
        }
        Ok(VertexPartition { parts, assignment })
    }

    /// Two-part partition of `0..n`: members of `side` in part 0, the rest in part 1.
    pub fn from_side(n: usize, side: VertexSet) -> Self {
        VertexPartition {
            parts: 2,
            assignment: (0..n).map(|v| usize::from(!side.contains(v))).collect(),
        }
    }

    pub fn parts(&self) -> usize {
        self.parts
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    #[inline]
    pub fn part_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn members(&self, part: usize) -> VertexSet {
        self.assignment
            .iter()
            .enumerate()
            .filter(|(_, &p)| p == part)
            .map(|(v, _)| v)
            .collect()
    }

    /// Same classes with extra empty parts appended.
    pub fn padded(&self, parts: usize) -> Self {
        VertexPartition {
            parts: parts.max(self.parts),
            assignment: self.assignment.clone(),
        }
    }

    /// Number of edges of `g` joining two different parts.
    pub fn crossing_edges(&self, g: &Graph) -> usize {
        g.edges()
            .filter(|&(u, v)| self.assignment[u] != self.assignment[v])
            .count()
    }

    /// No edge of `g` lies inside a part.
    pub fn is_proper_for(&self, g: &Graph) -> bool {
        self.assignment.len() == g.order() && self.crossing_edges(g) == g.size()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_lex_order() {
        let s = |v: &[usize]| VertexSet::from_iter(v.iter().copied());
        assert_eq!(s(&[0, 3]).lex_cmp(s(&[1, 2])), Ordering::Less);
        assert_eq!(s(&[0]).lex_cmp(s(&[0, 1])), Ordering::Less);
        assert_eq!(s(&[0, 1]).lex_cmp(s(&[0])), Ordering::Greater);
        assert_eq!(s(&[2, 5]).lex_cmp(s(&[2, 4])), Ordering::Greater);
        assert_eq!(s(&[]).lex_cmp(s(&[7])), Ordering::Less);
        assert_eq!(s(&[63]).lex_cmp(s(&[62, 63])), Ordering::Greater);
        assert_eq!(s(&[4, 9]).lex_cmp(s(&[4, 9])), Ordering::Equal);
    }

    #[test]
    fn edge_lex_order_spans_words() {
        let mut a = EdgeSet::new(130);
        let mut b = EdgeSet::new(130);
        a.insert(3);
        a.insert(129);
        b.insert(3);
        b.insert(64);
        assert_eq!(a.lex_cmp(&b), Ordering::Greater);
        b.remove(64);
        assert_eq!(b.lex_cmp(&a), Ordering::Less);
    }

    #[test]
    fn indexing_is_lexicographic() {
        let g = Graph::from_edges(4, &[(2, 3), (0, 1), (1, 3), (0, 2)]).unwrap();
        let idx = g.edge_indexing();
        assert_eq!(idx.pairs(), &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(idx.id(3, 1), Some(2));
        assert_eq!(idx.id(0, 3), None);
    }

    #[test]
    fn incident_neighbourhood() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        let idx = g.edge_indexing();
        let a = idx.set_from_pairs([(0, 1), (0, 3)]).unwrap();
        assert_eq!(a.neighbors_of(&idx, 0), VertexSet::from_iter([1, 3]));
        assert_eq!(a.neighbors_of(&idx, 2), VertexSet::EMPTY);
        assert!(idx.set_from_pairs([(2, 3)]).is_err());
    }

    #[test]
    fn partition_validation() {
        assert!(VertexPartition::new(0, vec![]).is_err());
        assert!(VertexPartition::new(2, vec![0, 2]).is_err());
        let p = VertexPartition::from_side(4, VertexSet::from_iter([1, 2]));
        assert_eq!(p.assignment(), &[1, 0, 0, 1]);
        assert_eq!(p.members(0), VertexSet::from_iter([1, 2]));
    }
}
