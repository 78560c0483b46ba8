//! Splitting a graph around a vertex `u`: `A = N(u)`, `B = V - N[u]` and
//! `H = G[B]`.

use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub u: usize,
    /// Open neighbourhood of `u`.
    pub a: VertexSet,
    /// Vertices outside the closed neighbourhood of `u`.
    pub b: VertexSet,
    /// `G[B]`; vertex `i` of `h` is the `i`-th smallest member of `b`.
    pub h: Graph,
}

impl Decomposition {
    pub fn around(g: &Graph, u: usize) -> Result<Decomposition, GraphError> {
        let a = g.neighborhood(u)?;
        let b = g.vertices().difference(a.with(u));
        let h = g.induced_subgraph(b)?;
        Ok(Decomposition { u, a, b, h })
    }

    /// `Delta(H)`.
    pub fn h_max_degree(&self) -> usize {
        self.h.max_degree()
    }

    /// Members `z` of `B` (original indices) with `d_H(z) = Delta(H)`.
    pub fn h_max_degree_vertices(&self) -> VertexSet {
        let members: Vec<usize> = self.b.iter().collect();
        self.h.max_degree_vertices().iter().map(|i| members[i]).collect()
    }

    /// `N_H(z)` for an original vertex `z` in `B`.
    pub fn h_neighbourhood(&self, g: &Graph, z: usize) -> VertexSet {
        g.nbrs(z).intersection(self.b)
    }
}

/// Decompositions around every maximum-degree vertex of `g`, by ascending `u`.
pub fn around_max_degree_vertices(g: &Graph) -> Vec<Decomposition> {
    g.max_degree_vertices()
        .iter()
        .map(|u| Decomposition::around(g, u).expect("vertex in range"))
        .collect()
}
