//! Canonical labelling and isomorphism testing for graphs of order at most 16.
//!
//! The canonicaliser is a small individualisation-refinement search:
//! equitable refinement of an ordered partition, branching on the first
//! largest non-singleton cell (least vertex first), and the canonical graph
//! is the lexicographically least relabelled adjacency matrix over all
//! leaves. Automorphisms found at leaves prune sibling branches in the same
//! orbit and allow jumping back to the point where a leaf's path left the
//! first or best path.

use thiserror::Error;

use crate::graph::{Bits, Graph, VertexSet};
use crate::graph6::write_graph6;

/// Largest order accepted by the canonicaliser.
pub const MAX_CANON_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("order {0} exceeds the canonical labelling limit of {MAX_CANON_ORDER}")]
    TooLarge(usize),
    #[error("expected host order {expected}, got {got}")]
    OrderMismatch { expected: usize, got: usize },
}

/// Canonical relabelling of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// graph6 of the canonically relabelled graph; equal iff isomorphic.
    pub canon_g6: String,
    /// `perm[v]` is the canonical label of original vertex `v`.
    pub perm: Vec<usize>,
    graph: Graph,
}

impl CanonicalForm {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }
}

/// A bijection between the vertex sets of two graphs of equal order.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct VertexMap(pub Vec<usize>);

impl VertexMap {
    pub fn identity(n: usize) -> VertexMap {
        VertexMap((0..n).collect())
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    /// True iff the map is a bijection carrying edges onto edges and
    /// non-edges onto non-edges.
    pub fn is_isomorphism(&self, g: &Graph, h: &Graph) -> bool {
        let n = g.order();
        if h.order() != n || self.0.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &t in &self.0 {
            if t >= n || std::mem::replace(&mut seen[t], true) {
                return false;
            }
        }
        (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == h.has_edge(self.0[u], self.0[v])))
    }
}

/// Vertex `v` of `g` together with an isomorphism from `g - v` onto the
/// pattern. The map is indexed by the vertices of `g - v`, i.e. original
/// indices above `v` are shifted down by one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletedCopy {
    pub vertex: usize,
    pub map: VertexMap,
}

/// Result of a full canonical search.
#[derive(Debug, Clone)]
pub struct Labelling {
    /// Canonically relabelled graph.
    pub canon: Graph,
    /// `lab[i]` is the original vertex receiving canonical label `i`.
    pub lab: Vec<usize>,
    /// `orbit[v]` is the least vertex in the automorphism orbit of `v`.
    pub orbit: Vec<usize>,
    /// Generators of the automorphism group found by the search.
    pub generators: Vec<Vec<usize>>,
}

impl Labelling {
    /// Original vertex placed last by the canonical labelling.
    pub fn last_vertex(&self) -> Option<usize> {
        self.lab.last().copied()
    }

    pub fn same_orbit(&self, a: usize, b: usize) -> bool {
        self.orbit[a] == self.orbit[b]
    }

    pub fn perm(&self) -> Vec<usize> {
        let mut perm = vec![0; self.lab.len()];
        for (i, &v) in self.lab.iter().enumerate() {
            perm[v] = i;
        }
        perm
    }
}

const M: usize = MAX_CANON_ORDER;

#[derive(Clone, Copy)]
pub(crate) struct Partition {
    cells: [u64; M],
    len: usize,
}

impl Partition {
    fn unit(n: usize) -> Partition {
        let mut cells = [0u64; M];
        let len = if n == 0 {
            0
        } else {
            cells[0] = VertexSet::full(n).bits();
            1
        };
        Partition { cells, len }
    }

    pub(crate) fn cells(&self) -> &[u64] {
        &self.cells[..self.len]
    }

    /// Equitable refinement. Splitters are processed first-in first-out;
    /// a split cell is replaced in place by its pieces ordered by ascending
    /// neighbour count, and every piece is queued.
    fn refine(&mut self, adj: &[u64], initial: &[u64]) {
        let mut queue = [0u64; 4 * M];
        let mut head = 0;
        let mut tail = 0;
        for &w in initial {
            queue[tail] = w;
            tail += 1;
        }
        while head < tail {
            let w = queue[head];
            head += 1;
            let mut i = 0;
            while i < self.len {
                let x = self.cells[i];
                if x & (x - 1) == 0 {
                    i += 1;
                    continue;
                }
                let mut counts = [0u8; M];
                let mut seen = 0u32;
                for v in Bits(x) {
                    let c = (adj[v] & w).count_ones() as u8;
                    counts[v] = c;
                    seen |= 1 << c;
                }
                if seen & (seen - 1) == 0 {
                    i += 1;
                    continue;
                }
                let pieces = seen.count_ones() as usize;
                self.cells.copy_within(i + 1..self.len, i + pieces);
                self.len += pieces - 1;
                let mut rest = seen;
                let mut at = i;
                while rest != 0 {
                    let c = rest.trailing_zeros() as u8;
                    rest &= rest - 1;
                    let piece = Bits(x)
                        .filter(|&v| counts[v] == c)
                        .fold(0u64, |acc, v| acc | 1 << v);
                    self.cells[at] = piece;
                    queue[tail] = piece;
                    tail += 1;
                    at += 1;
                }
                i += pieces;
            }
        }
    }

    fn target_cell(&self) -> usize {
        let mut best = 0;
        let mut best_size = 1;
        for (i, &c) in self.cells().iter().enumerate() {
            let s = c.count_ones();
            if s > best_size {
                best = i;
                best_size = s;
            }
        }
        best
    }

    fn individualize(&mut self, cell: usize, v: usize) {
        let x = self.cells[cell];
        self.cells.copy_within(cell + 1..self.len, cell + 2);
        self.cells[cell] = 1 << v;
        self.cells[cell + 1] = x & !(1 << v);
        self.len += 1;
    }
}

/// Equitable partition obtained by refining the unit partition.
pub(crate) fn root_partition(g: &Graph) -> Partition {
    let n = g.order();
    let mut p = Partition::unit(n);
    if n > 0 {
        let all = VertexSet::full(n).bits();
        p.refine(g.rows(), &[all]);
    }
    p
}

#[derive(Clone)]
struct Leaf {
    lab: [u8; M],
    rows: [u64; M],
    path: [u8; M],
    depth: usize,
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<[u8; M]>,
    path: [u8; M],
}

fn find(parent: &mut [u8; M], mut v: usize) -> usize {
    while parent[v] as usize != v {
        parent[v] = parent[parent[v] as usize];
        v = parent[v] as usize;
    }
    v
}

fn union(parent: &mut [u8; M], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi] = lo as u8;
    }
}

fn common_prefix(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    /// Orbit partition of the group generated by the stored automorphisms
    /// that fix the first `depth` path vertices pointwise.
    fn stabiliser_orbits(&self, depth: usize) -> [u8; M] {
        let mut parent = [0u8; M];
        for (v, p) in parent.iter_mut().enumerate() {
            *p = v as u8;
        }
        for gamma in &self.autos {
            if self.path[..depth].iter().all(|&v| gamma[v as usize] == v) {
                for (v, &w) in gamma[..self.n].iter().enumerate() {
                    union(&mut parent, v, w as usize);
                }
            }
        }
        parent
    }

    fn node(&mut self, part: &Partition, depth: usize) -> Option<usize> {
        if part.len == self.n {
            return self.leaf(part, depth);
        }
        let ci = part.target_cell();
        let cell = part.cells[ci];
        let mut tried = 0u64;
        let mut orbits_for = usize::MAX;
        let mut orbits = [0u8; M];
        for v in Bits(cell) {
            if tried != 0 && !self.autos.is_empty() {
                if orbits_for != self.autos.len() {
                    orbits = self.stabiliser_orbits(depth);
                    orbits_for = self.autos.len();
                }
                let rv = find(&mut orbits, v);
                if Bits(tried).any(|t| find(&mut orbits, t) == rv) {
                    continue;
                }
            }
            tried |= 1 << v;
            let mut child = *part;
            child.individualize(ci, v);
            child.refine(self.adj, &[1 << v]);
            self.path[depth] = v as u8;
            if let Some(level) = self.node(&child, depth + 1) {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, part: &Partition, depth: usize) -> Option<usize> {
        let n = self.n;
        let mut lab = [0u8; M];
        let mut pos = [0u8; M];
        for (i, &c) in part.cells().iter().enumerate() {
            let v = c.trailing_zeros() as usize;
            lab[i] = v as u8;
            pos[v] = i as u8;
        }
        let mut rows = [0u64; M];
        for i in 0..n {
            rows[i] = Bits(self.adj[lab[i] as usize]).fold(0u64, |acc, w| acc | 1 << pos[w]);
        }
        let leaf = Leaf {
            lab,
            rows,
            path: self.path,
            depth,
        };
        let Some(first) = &self.first else {
            self.first = Some(leaf.clone());
            self.best = Some(leaf);
            return None;
        };
        if first.rows[..n] == rows[..n] {
            let gamma = automorphism(&pos, &first.lab, n);
            let level = common_prefix(&self.path[..depth], &first.path[..first.depth]);
            self.autos.push(gamma);
            return Some(level);
        }
        let best = self.best.as_ref().expect("best leaf set with first");
        match rows[..n].cmp(&best.rows[..n]) {
            std::cmp::Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            std::cmp::Ordering::Equal => {
                let gamma = automorphism(&pos, &best.lab, n);
                let level = common_prefix(&self.path[..depth], &best.path[..best.depth]);
                self.autos.push(gamma);
                Some(level)
            }
            std::cmp::Ordering::Greater => None,
        }
    }
}

/// Maps each vertex to the vertex holding the same position in `target`.
fn automorphism(pos: &[u8; M], target: &[u8; M], n: usize) -> [u8; M] {
    let mut gamma = [0u8; M];
    for v in 0..n {
        gamma[v] = target[pos[v] as usize];
    }
    gamma
}

/// Runs the canonical search, returning labelling, orbits and generators.
pub fn canonical_labelling(g: &Graph) -> Result<Labelling, IsoError> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(IsoError::TooLarge(n));
    }
    if n == 0 {
        return Ok(Labelling {
            canon: Graph::empty(0),
            lab: Vec::new(),
            orbit: Vec::new(),
            generators: Vec::new(),
        });
    }
    let root = root_partition(g);
    let mut search = Search {
        adj: g.rows(),
        n,
        first: None,
        best: None,
        autos: Vec::new(),
        path: [0u8; M],
    };
    search.node(&root, 0);
    let best = search.best.expect("search visits at least one leaf");
    let mut parent = [0u8; M];
    for (v, p) in parent.iter_mut().enumerate() {
        *p = v as u8;
    }
    for gamma in &search.autos {
        for (v, &w) in gamma[..n].iter().enumerate() {
            union(&mut parent, v, w as usize);
        }
    }
    let orbit = (0..n).map(|v| find(&mut parent, v)).collect();
    Ok(Labelling {
        canon: Graph::from_rows_unchecked(&best.rows[..n]),
        lab: best.lab[..n].iter().map(|&v| v as usize).collect(),
        orbit,
        generators: search
            .autos
            .iter()
            .map(|a| a[..n].iter().map(|&v| v as usize).collect())
            .collect(),
    })
}

/// Canonically relabelled copy of `g`; two graphs are isomorphic iff these are equal.
pub fn canonical_graph(g: &Graph) -> Result<Graph, IsoError> {
    Ok(canonical_labelling(g)?.canon)
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, IsoError> {
    let l = canonical_labelling(g)?;
    let perm = l.perm();
    Ok(CanonicalForm {
        canon_g6: write_graph6(&l.canon),
        perm,
        graph: l.canon,
    })
}

/// Cheap isomorphism invariants: degree sequence, triangle-freeness and the
/// sorted multiset of neighbour-degree lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuickInvariants {
    degrees: Vec<usize>,
    triangle_free: bool,
    neighbour_degrees: Vec<Vec<usize>>,
}

impl QuickInvariants {
    pub fn of(g: &Graph) -> QuickInvariants {
        let mut neighbour_degrees: Vec<Vec<usize>> = (0..g.order())
            .map(|v| {
                let mut d: Vec<usize> = g.nbrs(v).iter().map(|w| g.deg(w)).collect();
                d.sort_unstable();
                d
            })
            .collect();
        neighbour_degrees.sort_unstable();
        QuickInvariants {
            degrees: g.degree_sequence(),
            triangle_free: g.is_triangle_free(),
            neighbour_degrees,
        }
    }
}

/// An isomorphism `g -> h`, if one exists. The map is checked edge by edge.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<Option<VertexMap>, IsoError> {
    for x in [g, h] {
        if x.order() > MAX_CANON_ORDER {
            return Err(IsoError::TooLarge(x.order()));
        }
    }
    if g.order() != h.order()
        || g.edge_count() != h.edge_count()
        || QuickInvariants::of(g) != QuickInvariants::of(h)
    {
        return Ok(None);
    }
    let cg = canonical_labelling(g)?;
    let ch = canonical_labelling(h)?;
    if cg.canon != ch.canon {
        return Ok(None);
    }
    let pg = cg.perm();
    let map = VertexMap(pg.iter().map(|&c| ch.lab[c]).collect());
    assert!(
        map.is_isomorphism(g, h),
        "canonical labelling produced an invalid isomorphism"
    );
    Ok(Some(map))
}

/// Least vertex `u` with `g - u` isomorphic to `h`, with the isomorphism.
pub fn contains_vertex_deleted_copy(g: &Graph, h: &Graph) -> Result<Option<DeletedCopy>, IsoError> {
    if g.order() != h.order() + 1 {
        return Err(IsoError::OrderMismatch {
            expected: h.order() + 1,
            got: g.order(),
        });
    }
    if g.order() > MAX_CANON_ORDER {
        return Err(IsoError::TooLarge(g.order()));
    }
    let target = canonical_labelling(h)?;
    for u in 0..g.order() {
        let sub = g.delete_vertex(u).expect("vertex in range");
        let cs = canonical_labelling(&sub)?;
        if cs.canon == target.canon {
            let map = VertexMap(cs.perm().iter().map(|&c| target.lab[c]).collect());
            assert!(map.is_isomorphism(&sub, h), "invalid deleted-copy map");
            return Ok(Some(DeletedCopy { vertex: u, map }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn rotate(n: usize, k: usize) -> Vec<usize> {
        (0..n).map(|v| (v + k) % n).collect()
    }

    #[test]
    fn cycle_relabellings_agree() {
        let c5 = cycle(5);
        let a = canonical_form(&c5).unwrap();
        let b = canonical_form(&c5.permute(&[2, 4, 1, 3, 0])).unwrap();
        let c = canonical_form(&c5.permute(&rotate(5, 3))).unwrap();
        assert_eq!(a.canon_g6, b.canon_g6);
        assert_eq!(a.canon_g6, c.canon_g6);
        assert_ne!(a.canon_g6, canonical_form(&path(5)).unwrap().canon_g6);
    }

    #[test]
    fn perm_maps_source_onto_canonical_graph() {
        let g = petersen();
        let cf = canonical_form(&g).unwrap();
        assert_eq!(&g.permute(&cf.perm), cf.graph());
        assert_eq!(write_graph6(&g.permute(&cf.perm)), cf.canon_g6);
    }

    #[test]
    fn orbits_of_symmetric_graphs() {
        let l = canonical_labelling(&petersen()).unwrap();
        assert!(l.orbit.iter().all(|&o| o == 0));
        let l = canonical_labelling(&path(4)).unwrap();
        assert_eq!(l.orbit, vec![0, 1, 1, 0]);
        let l = canonical_labelling(&Graph::empty(12)).unwrap();
        assert!(l.orbit.iter().all(|&o| o == 0));
        let l = canonical_labelling(&star(3).disjoint_union(&Graph::empty(1)).unwrap()).unwrap();
        assert_eq!(l.orbit, vec![0, 1, 1, 1, 4]);
    }

    #[test]
    fn identity_and_non_isomorphic_pairs() {
        let g = petersen();
        let m = are_isomorphic(&g, &g).unwrap().unwrap();
        assert!(m.is_isomorphism(&g, &g));
        let c6 = cycle(6);
        let two_k3 = cycle(3).disjoint_union(&cycle(3)).unwrap();
        assert_eq!(are_isomorphic(&c6, &two_k3).unwrap(), None);
    }

    #[test]
    fn relabelled_copy_is_found() {
        let g = grotzsch();
        let perm = rotate(11, 4);
        let h = g.permute(&perm);
        let m = are_isomorphic(&g, &h).unwrap().unwrap();
        assert!(m.is_isomorphism(&g, &h));
    }

    #[test]
    fn deleted_copies() {
        let c6 = cycle(6);
        assert_eq!(contains_vertex_deleted_copy(&c6, &cycle(5)).unwrap(), None);
        let hit = contains_vertex_deleted_copy(&c6, &path(5)).unwrap().unwrap();
        assert_eq!(hit.vertex, 0);
        assert!(hit.map.is_isomorphism(&c6.delete_vertex(0).unwrap(), &path(5)));
        assert_eq!(
            contains_vertex_deleted_copy(&c6, &path(3)),
            Err(IsoError::OrderMismatch { expected: 4, got: 6 })
        );
    }

    #[test]
    fn order_limit() {
        assert_eq!(
            canonical_form(&Graph::empty(17)).unwrap_err(),
            IsoError::TooLarge(17)
        );
        assert!(canonical_form(&path(16)).is_ok());
    }
}
