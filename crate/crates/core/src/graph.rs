//! Small simple undirected graphs stored as one 64-bit adjacency row per vertex.

use std::fmt;

use smallvec::SmallVec;
use thiserror::Error;

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge(usize),
}

/// A set of vertex indices below 64.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> VertexSet {
        VertexSet(vs.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Least element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Bits;
    fn into_iter(self) -> Bits {
        Bits(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// Ascending iterator over the set bits of a word.
#[derive(Clone)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

pub(crate) type Rows = SmallVec<[u64; 16]>;

/// Immutable simple undirected graph on vertices `0..n`, `n <= 64`.
///
/// Row `v` holds the open neighbourhood of `v`. Rows are symmetric, have no
/// loop bits and no bits at positions `>= n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adj: Rows,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        Graph {
            adj: SmallVec::from_elem(0, n),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        let mut adj: Rows = SmallVec::from_elem(0, n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from raw rows, checking every invariant.
    pub fn from_rows(rows: &[u64]) -> Result<Graph, GraphError> {
        let n = rows.len();
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        let mask = VertexSet::full(n).0;
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let w = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::SelfLoop(v));
            }
            for w in Bits(row) {
                if rows[w] >> v & 1 == 0 {
                    return Err(GraphError::NotAnEdge(w, v));
                }
            }
        }
        Ok(Graph {
            adj: SmallVec::from_slice(rows),
        })
    }

    /// Rows must already satisfy the type invariants.
    #[inline]
    pub(crate) fn from_rows_unchecked(rows: &[u64]) -> Graph {
        debug_assert!(Graph::from_rows(rows).is_ok());
        Graph {
            adj: SmallVec::from_slice(rows),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| {
                let above = u64::MAX.checked_shl(u as u32 + 1).unwrap_or(0);
                Bits(row & above).map(move |v| (u, v))
            })
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] >> v & 1 == 1
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    fn check_set(&self, s: VertexSet) -> Result<(), GraphError> {
        match s.difference(self.vertices()).first() {
            None => Ok(()),
            Some(v) => Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            }),
        }
    }

    pub fn neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.adj[v]))
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        Ok(self.neighborhood(v)?.with(v))
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        Ok(self.neighborhood(v)?.len())
    }

    /// Neighbourhood without bounds checking; panics if `v` is out of range.
    #[inline]
    pub fn nbrs(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn deg(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Maximum degree; 0 for the null graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.deg(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Vertices of maximum degree.
    pub fn max_degree_vertices(&self) -> VertexSet {
        let delta = self.max_degree();
        (0..self.order()).filter(|&v| self.deg(v) == delta).collect()
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.adj[v] == 0).collect()
    }

    /// `G[s]`, relabelled by ascending original index.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph, GraphError> {
        self.check_set(s)?;
        let keep: SmallVec<[usize; 16]> = s.iter().collect();
        let rows: Rows = keep
            .iter()
            .map(|&v| compress(self.adj[v] & s.0, s.0))
            .collect();
        Ok(Graph { adj: rows })
    }

    /// `G - v`; surviving vertices keep their relative order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        self.induced_subgraph(self.vertices().without(v))
    }

    /// `G - uv`. Removing a non-edge is an error.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Ok(Graph { adj })
    }

    /// `G + uv` for a non-adjacent pair.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Ok(Graph { adj })
    }

    /// Adds a new vertex `n` adjacent to `nbrs`.
    pub fn add_vertex(&self, nbrs: VertexSet) -> Result<Graph, GraphError> {
        let n = self.order();
        if n + 1 > MAX_ORDER {
            return Err(GraphError::TooLarge(n + 1));
        }
        self.check_set(nbrs)?;
        let mut adj = self.adj.clone();
        for w in nbrs {
            adj[w] |= 1 << n;
        }
        adj.push(nbrs.0);
        Ok(Graph { adj })
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| self.adj[u] & self.adj[v] == 0)
    }

    /// Block-diagonal union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n1 = self.order();
        let total = n1 + other.order();
        if total > MAX_ORDER {
            return Err(GraphError::TooLarge(total));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << n1));
        Ok(Graph { adj })
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length mismatch");
        let mut adj: Rows = SmallVec::from_elem(0, self.order());
        for (v, &row) in self.adj.iter().enumerate() {
            adj[perm[v]] = Bits(row).fold(0u64, |acc, w| acc | 1 << perm[w]);
        }
        Graph { adj }
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices().0;
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &r)| !r & full & !(1 << v))
            .collect();
        Graph { adj }
    }
}

/// Packs the bits of `word` selected by `mask` into the low bits, in order.
#[inline]
fn compress(word: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    for (i, b) in Bits(mask).enumerate() {
        out |= (word >> b & 1) << i;
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", crate::graph6::write_graph6(self))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::graph6::write_graph6(self))
    }
}

/// Standard families.
pub mod families {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges).expect("complete")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a)
            .flat_map(|u| (a..a + b).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(a + b, &edges).expect("complete bipartite")
    }

    pub fn star(leaves: usize) -> Graph {
        complete_bipartite(1, leaves)
    }

    /// Outer 5-cycle 0..5, inner pentagram 5..10, spokes i -- i+5.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Graph::from_edges(10, &edges).expect("petersen")
    }

    /// Mycielskian of `g`: shadow vertex `n + v` copies `N(v)`, apex `2n` joins all shadows.
    pub fn mycielskian(g: &Graph) -> Graph {
        let n = g.order();
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        for (u, v) in g.edges() {
            edges.push((u, n + v));
            edges.push((v, n + u));
        }
        for v in 0..n {
            edges.push((n + v, 2 * n));
        }
        Graph::from_edges(2 * n + 1, &edges).expect("mycielskian")
    }

    /// Mycielskian of the 5-cycle: 11 vertices, triangle-free, chromatic number 4.
    pub fn grotzsch() -> Graph {
        mycielskian(&cycle(5))
    }
}
