//! Finite simple undirected graphs stored as fixed-width adjacency bit rows.
//!
//! Each vertex owns a row of `ceil(n / 64)` machine words (at least one).
//! Graphs with at most 64 vertices therefore use a single `u64` per row, which
//! is what every exhaustive kernel in the crate runs on; larger graphs fall
//! back to multi-word rows with the same API. Graphs are immutable once built:
//! every operation returns a new value.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Set of vertex indices, abstracted over single-word and multi-word storage.
pub trait VertexSet: Clone + PartialEq + fmt::Debug {
    fn empty(n: usize) -> Self;
    fn from_words(words: &[u64]) -> Self;
    fn insert(&mut self, v: usize);
    fn remove(&mut self, v: usize);
    fn contains(&self, v: usize) -> bool;
    fn intersect(&self, other: &Self) -> Self;
    fn difference(&self, other: &Self) -> Self;
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool;
    fn first(&self) -> Option<usize>;
    fn to_vec(&self) -> Vec<usize>;

    fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }
}

impl VertexSet for u64 {
    fn empty(_n: usize) -> Self {
        0
    }

    fn from_words(words: &[u64]) -> Self {
        words[0]
    }

    fn full(n: usize) -> Self {
        low_mask(n)
    }

    #[inline]
    fn insert(&mut self, v: usize) {
        *self |= 1 << v;
    }

    #[inline]
    fn remove(&mut self, v: usize) {
        *self &= !(1 << v);
    }

    #[inline]
    fn contains(&self, v: usize) -> bool {
        self >> v & 1 == 1
    }

    #[inline]
    fn intersect(&self, other: &Self) -> Self {
        self & other
    }

    #[inline]
    fn difference(&self, other: &Self) -> Self {
        self & !other
    }

    #[inline]
    fn len(&self) -> usize {
        self.count_ones() as usize
    }

    #[inline]
    fn is_empty(&self) -> bool {
        *self == 0
    }

    #[inline]
    fn first(&self) -> Option<usize> {
        (*self != 0).then(|| self.trailing_zeros() as usize)
    }

    fn to_vec(&self) -> Vec<usize> {
        bits(*self).collect()
    }
}

/// Multi-word vertex set used when a graph has more than 64 vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WideSet(Box<[u64]>);

impl VertexSet for WideSet {
    fn empty(n: usize) -> Self {
        WideSet(vec![0; words_for(n)].into_boxed_slice())
    }

    fn from_words(words: &[u64]) -> Self {
        WideSet(words.into())
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn contains(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }

    fn intersect(&self, other: &Self) -> Self {
        WideSet(self.0.iter().zip(other.0.iter()).map(|(a, b)| a & b).collect())
    }

    fn difference(&self, other: &Self) -> Self {
        WideSet(self.0.iter().zip(other.0.iter()).map(|(a, b)| a & !b).collect())
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn to_vec(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| bits(w).map(move |b| i * 64 + b))
            .collect()
    }
}

/// Iterate over the set bits of a word, lowest first.
pub fn bits(mut w: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if w == 0 {
            None
        } else {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(b)
        }
    })
}

/// Mask with the lowest `n` bits set (`n <= 64`).
#[inline]
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        if n >= 3 {
            for v in 0..n {
                g.set_edge(v, (v + 1) % n);
            }
        } else if n == 2 {
            g.set_edge(0, 1);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v);
        }
        g
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.set_edge(0, v);
        }
        g
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
    pub fn petersen() -> Self {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.set_edge(i, (i + 1) % 5);
            g.set_edge(5 + i, 5 + (i + 2) % 5);
            g.set_edge(i, i + 5);
        }
        g
    }

    /// Build a graph from an edge list. Duplicate pairs collapse to one edge.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Build from one bitmask row per vertex (graphs with at most 64 vertices).
    ///
    /// Rows are symmetrized; diagonal bits and bits at or above `rows.len()` are ignored.
    pub fn from_rows(rows: &[u64]) -> Result<Self> {
        let n = rows.len();
        Error::guard("vertex count for bit-row construction", 64, n)?;
        let mask = low_mask(n);
        let mut g = Graph::empty(n);
        for (u, &row) in rows.iter().enumerate() {
            for v in bits(row & mask & !(1 << u)) {
                g.set_edge(u, v);
            }
        }
        Ok(g)
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        let w = self.words;
        self.rows[u * w + v / 64] |= 1 << (v % 64);
        self.rows[v * w + u / 64] |= 1 << (u % 64);
    }

    fn clear_edge(&mut self, u: usize, v: usize) {
        let w = self.words;
        self.rows[u * w + v / 64] &= !(1 << (v % 64));
        self.rows[v * w + u / 64] &= !(1 << (u % 64));
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// True when rows fit in one machine word (`n <= 64`).
    pub fn is_narrow(&self) -> bool {
        self.n <= 64
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adjacency words of `v`.
    pub fn row_words(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Single-word adjacency row. Only meaningful for narrow graphs.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        debug_assert!(self.is_narrow());
        self.rows[v * self.words]
    }

    /// Neighborhood of `v` as a vertex set of the requested representation.
    pub fn neighborhood<S: VertexSet>(&self, v: usize) -> S {
        S::from_words(self.row_words(v))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row_words(v)
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| bits(w).map(move |b| i * 64 + b))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row_words(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Degree of `v` in the complement.
    pub fn missing_degree(&self, v: usize) -> usize {
        self.n - 1 - self.degree(v)
    }

    /// Maximum degree of the complement (0 for graphs with no vertices).
    pub fn max_missing_degree(&self) -> usize {
        (0..self.n).map(|v| self.missing_degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    /// Contract the edge `uv`.
    ///
    /// Vertex `v` is removed and every index above `v` shifts down by one; the
    /// merged vertex occupies `u`'s slot (index `u` if `u < v`, else `u - 1`)
    /// and is adjacent to the union of both neighborhoods minus `{u, v}`.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::precondition(format!("({u}, {v}) is not an edge")));
        }
        let map = |w: usize| if w > v { w - 1 } else { w };
        let mut g = Graph::empty(self.n - 1);
        for (a, b) in self.edges() {
            let a = if a == v { u } else { a };
            let b = if b == v { u } else { b };
            if a != b {
                g.set_edge(map(a), map(b));
            }
        }
        Ok(g)
    }

    /// Subgraph induced on `set`; vertex `i` of the result is `mapping[i]` of `self`.
    ///
    /// The mapping lists the vertices of `set` in increasing order.
    pub fn induced_subgraph(&self, set: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut mapping = set.to_vec();
        mapping.sort_unstable();
        mapping.dedup();
        if let Some(&bad) = mapping.iter().find(|&&v| v >= self.n) {
            return Err(Error::input(format!(
                "vertex {bad} outside 0..{}",
                self.n
            )));
        }
        let mut g = Graph::empty(mapping.len());
        for i in 0..mapping.len() {
            for j in i + 1..mapping.len() {
                if self.has_edge(mapping[i], mapping[j]) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok((g, mapping))
    }

    /// Concatenate vertex blocks in order with no edges between blocks.
    pub fn disjoint_union(graphs: &[Graph]) -> Graph {
        let n = graphs.iter().map(Graph::vertex_count).sum();
        let mut g = Graph::empty(n);
        let mut offset = 0;
        for h in graphs {
            for (u, v) in h.edges() {
                g.set_edge(offset + u, offset + v);
            }
            offset += h.n;
        }
        g
    }

    /// The shape `K(a, b)`: vertices `2i, 2i+1` (`i < a`) are the only
    /// non-adjacent pairs; the last `b` vertices see everything.
    pub fn complement_of_matching(shape: ShapeParams) -> Graph {
        let n = shape.vertex_count();
        let mut g = Graph::complete(n);
        for i in 0..shape.a {
            g.clear_edge(2 * i, 2 * i + 1);
        }
        g
    }

    /// Apply a relabeling: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n || perm.iter().any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::input("relabeling is not a permutation"));
        }
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        Ok(g)
    }
}

/// Parameters of the complement-of-matching shape `K(a, b)`: the complement
/// of a perfect matching on `2a` vertices, fully joined to a clique on `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ShapeParams {
    pub a: usize,
    pub b: usize,
}

impl ShapeParams {
    pub fn new(a: usize, b: usize) -> Self {
        ShapeParams { a, b }
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.a + self.b
    }

    pub fn to_graph(&self) -> Graph {
        Graph::complement_of_matching(*self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn edge_list_basics() {
        let g = Graph::from_edge_list(0, &[]).unwrap();
        assert_eq!(g.vertex_count(), 0);
        let k3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2), (2, 0)]).unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(k3.edge_count(), 3);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            Graph::from_edge_list(3, &[(1, 1)]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn complement_of_c4_is_two_disjoint_edges() {
        let comp = c4().complement();
        let pairs: Vec<_> = comp.edges().collect();
        assert_eq!(pairs, vec![(0, 2), (1, 3)]);
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
        let m = Graph::complement_of_matching(ShapeParams::new(2, 0)).complement();
        assert_eq!(m.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn contraction_examples() {
        for (u, v) in c4().edges() {
            assert_eq!(c4().contract_edge(u, v).unwrap(), Graph::complete(3));
        }
        assert_eq!(
            Graph::complete(5).contract_edge(1, 3).unwrap(),
            Graph::complete(4)
        );
        assert_eq!(Graph::path(3).contract_edge(0, 1).unwrap(), Graph::complete(2));
        assert!(matches!(
            c4().contract_edge(0, 2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn contraction_reindexing_rule() {
        // Path 0-1-2-3; contracting (2, 1) keeps the merged vertex at 1 and shifts 3 down to 2.
        let g = Graph::path(4).contract_edge(2, 1).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        // Contracting (3, 0) in C4 removes 0: 1->0, 2->1, merged 3->2.
        let g = c4().contract_edge(3, 0).unwrap();
        assert_eq!(g, Graph::complete(3));
        let star = Graph::star(3).contract_edge(2, 0).unwrap();
        // Merged vertex sits at index 1 (2 shifted down) and sees the other leaves.
        assert_eq!(star.degree(1), 2);
    }

    #[test]
    fn induced_subgraph_examples() {
        let (k3, map) = Graph::complete(5).induced_subgraph(&[4, 0, 2]).unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(map, vec![0, 2, 4]);
        let (p3, _) = c4().induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(p3, Graph::path(3));
        let (e, _) = c4().induced_subgraph(&[]).unwrap();
        assert_eq!(e.vertex_count(), 0);
        assert!(c4().induced_subgraph(&[7]).is_err());
    }

    #[test]
    fn disjoint_union_examples() {
        let g = Graph::disjoint_union(&[Graph::complete(2), Graph::complete(2)]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        assert_eq!(Graph::disjoint_union(&[]).vertex_count(), 0);
    }

    #[test]
    fn shape_examples() {
        assert_eq!(ShapeParams::new(0, 4).to_graph(), Graph::complete(4));
        assert_eq!(ShapeParams::new(2, 0).to_graph(), c4().relabel(&[0, 2, 1, 3]).unwrap());
        let g = ShapeParams::new(1, 1).to_graph();
        assert_eq!(g.edge_count(), 2);
        assert!(!g.has_edge(0, 1));
        assert_eq!(g, Graph::path(3).relabel(&[0, 2, 1]).unwrap());
    }

    #[test]
    fn wide_graphs_behave_like_narrow_ones() {
        let g = Graph::complement_of_matching(ShapeParams::new(40, 3));
        assert!(!g.is_narrow());
        assert_eq!(g.vertex_count(), 83);
        assert_eq!(g.max_missing_degree(), 1);
        assert_eq!(g.complement().edge_count(), 40);
        assert_eq!(g.complement().complement(), g);
        let set: WideSet = g.neighborhood(70);
        assert!(set.contains(72) && set.contains(82) && !set.contains(70) && !set.contains(71));
        assert_eq!(set.len(), 81);
        let h = g.contract_edge(0, 80).unwrap();
        assert_eq!(h.vertex_count(), 82);
    }

    #[test]
    fn components_and_connectivity() {
        let g = Graph::disjoint_union(&[Graph::path(3), Graph::empty(1), Graph::cycle(4)]);
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3], vec![4, 5, 6, 7]]);
        assert!(!g.is_connected());
        assert!(Graph::empty(0).is_connected());
        assert!(Graph::petersen().is_connected());
        assert!(Graph::petersen().edges().count() == 15);
    }
}
