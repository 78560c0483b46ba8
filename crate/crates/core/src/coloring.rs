//! Exact k-defective colouring.
//!
//! A vertex set is k-independent when it induces a subgraph of maximum
//! degree at most k. A graph is (m,k)-colourable when its vertices split
//! into m k-independent classes; the k-defective chromatic number is the
//! least such m.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Bits, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partition assigns {got} vertices, graph has {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("vertex {vertex} assigned to class {class} of {m}")]
    ClassOutOfRange { vertex: usize, class: usize, m: usize },
    #[error("vertex {vertex} has {same} neighbours in its class, defect bound is {k}")]
    DefectExceeded { vertex: usize, same: usize, k: usize },
    #[error("malformed witness: {0}")]
    Malformed(String),
}

/// `true` iff every vertex of `s` has at most `k` neighbours inside `s`.
pub fn is_k_independent(g: &Graph, s: VertexSet, k: usize) -> bool {
    s.iter().all(|v| (g.rows()[v] & s.bits()).count_ones() as usize <= k)
}

/// Assignment of every vertex to one of `m` classes, each k-independent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DefectivePartition {
    pub m: usize,
    pub k: usize,
    pub assign: Vec<usize>,
}

impl DefectivePartition {
    pub fn from_classes(n: usize, m: usize, k: usize, classes: &[VertexSet]) -> Result<Self, PartitionError> {
        let mut assign = vec![usize::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            for v in class.iter() {
                if v >= n || assign[v] != usize::MAX {
                    return Err(PartitionError::Malformed(format!("vertex {v} misplaced")));
                }
                assign[v] = c;
            }
        }
        if let Some(v) = assign.iter().position(|&c| c == usize::MAX) {
            return Err(PartitionError::Malformed(format!("vertex {v} unassigned")));
        }
        if classes.len() > m {
            return Err(PartitionError::ClassOutOfRange {
                vertex: classes[m].first().unwrap_or(0),
                class: m,
                m,
            });
        }
        Ok(DefectivePartition { m, k, assign })
    }

    /// Classes `0..m` as vertex sets; unused classes are empty.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut classes = vec![VertexSet::EMPTY; self.m];
        for (v, &c) in self.assign.iter().enumerate() {
            classes[c] = classes[c].with(v);
        }
        classes
    }

    /// Checks the partition against `g` class by class.
    pub fn validate(&self, g: &Graph) -> Result<(), PartitionError> {
        if self.assign.len() != g.order() {
            return Err(PartitionError::WrongLength {
                expected: g.order(),
                got: self.assign.len(),
            });
        }
        if let Some((vertex, &class)) = self.assign.iter().enumerate().find(|(_, &c)| c >= self.m) {
            return Err(PartitionError::ClassOutOfRange {
                vertex,
                class,
                m: self.m,
            });
        }
        for class in self.classes() {
            if !is_k_independent(g, class, self.k) {
                let vertex = class
                    .iter()
                    .find(|&v| g.nbrs(v).intersection(class).len() > self.k)
                    .expect("some vertex exceeds the bound");
                return Err(PartitionError::DefectExceeded {
                    vertex,
                    same: g.nbrs(vertex).intersection(class).len(),
                    k: self.k,
                });
            }
        }
        Ok(())
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.validate(g).is_ok()
    }

    /// Parses the `"0,2,4|1,3"` witness form.
    pub fn parse_witness(s: &str, n: usize, k: usize) -> Result<Self, PartitionError> {
        let mut classes = Vec::new();
        if !(s.is_empty() && n == 0) {
            for part in s.split('|') {
                let mut class = VertexSet::EMPTY;
                for t in part.split(',').filter(|t| !t.is_empty()) {
                    let v: usize = t
                        .trim()
                        .parse()
                        .map_err(|e| PartitionError::Malformed(format!("{t:?}: {e}")))?;
                    if v >= n || class.contains(v) {
                        return Err(PartitionError::Malformed(format!("vertex {v} misplaced")));
                    }
                    class = class.with(v);
                }
                classes.push(class);
            }
        }
        DefectivePartition::from_classes(n, classes.len(), k, &classes)
    }
}

/// Classes separated by `|`, members by `,`.
impl fmt::Display for DefectivePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, class) in self.classes().iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (j, v) in class.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// `chi_k(G)` with a witness partition using exactly `chi` classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiResult {
    pub chi: usize,
    pub witness: DefectivePartition,
}

struct Colourer<'a> {
    adj: &'a [u64],
    order: Vec<usize>,
    m: usize,
    k: u32,
    classes: Vec<u64>,
    defect: Vec<u32>,
    assign: Vec<usize>,
}

impl Colourer<'_> {
    fn place(&mut self, i: usize, used: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let v = self.order[i];
        let open = self.m.min(used + 1);
        for c in 0..open {
            let same = self.adj[v] & self.classes[c];
            let cnt = same.count_ones();
            if cnt > self.k || Bits(same).any(|w| self.defect[w] >= self.k) {
                continue;
            }
            self.classes[c] |= 1 << v;
            self.defect[v] = cnt;
            for w in Bits(same) {
                self.defect[w] += 1;
            }
            self.assign[v] = c;
            if self.place(i + 1, used.max(c + 1)) {
                return true;
            }
            for w in Bits(same) {
                self.defect[w] -= 1;
            }
            self.defect[v] = 0;
            self.classes[c] &= !(1 << v);
        }
        false
    }
}

/// Vertices by descending degree, ties by ascending index.
fn branch_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.deg(v)), v));
    order
}

/// An (m,k)-colouring of `g` if one exists. The search is complete.
///
/// Branching follows descending degree; a vertex may open class `c` only if
/// classes `0..c` are already in use.
pub fn find_mk_coloring(g: &Graph, m: usize, k: usize) -> Option<DefectivePartition> {
    let n = g.order();
    if n == 0 {
        return Some(DefectivePartition {
            m,
            k,
            assign: Vec::new(),
        });
    }
    if m == 0 {
        return None;
    }
    let mut search = Colourer {
        adj: g.rows(),
        order: branch_order(g),
        m: m.min(n),
        k: k.min(64) as u32,
        classes: vec![0; m.min(n)],
        defect: vec![0; n],
        assign: vec![0; n],
    };
    let found = search.place(0, 0);
    found.then_some(DefectivePartition {
        m,
        k,
        assign: search.assign,
    })
}

/// `chi_k(g)`, searching upward from one colour. The null graph has `chi = 0`.
pub fn defective_chromatic_number(g: &Graph, k: usize) -> ChiResult {
    if g.order() == 0 {
        return ChiResult {
            chi: 0,
            witness: DefectivePartition {
                m: 0,
                k,
                assign: Vec::new(),
            },
        };
    }
    for m in 1..=g.order() {
        if let Some(witness) = find_mk_coloring(g, m, k) {
            return ChiResult { chi: m, witness };
        }
    }
    unreachable!("every graph is (n,k)-colourable")
}

/// `chi_k(g)` only.
pub fn chi(g: &Graph, k: usize) -> usize {
    defective_chromatic_number(g, k).chi
}

/// `1 + floor(Delta / (k + 1))`, an upper bound on `chi_k`.
pub fn lovasz_bound(g: &Graph, k: usize) -> usize {
    1 + g.max_degree() / (k + 1)
}

/// `ceil(n / (k + 1))`, an upper bound on `chi_k`.
pub fn order_bound(g: &Graph, k: usize) -> usize {
    g.order().div_ceil(k + 1)
}

/// Outcome of a criticality test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Criticality<T> {
    pub holds: bool,
    /// `chi_k` of the tested graph.
    pub chi: usize,
    /// When `holds`, one `(m-1, k)`-colouring per deleted element.
    pub witnesses: Vec<(T, DefectivePartition)>,
    /// First element whose deletion leaves `chi_k >= m`.
    pub blocker: Option<T>,
}

impl<T> Criticality<T> {
    fn not_at_level(chi: usize) -> Self {
        Criticality {
            holds: false,
            chi,
            witnesses: Vec::new(),
            blocker: None,
        }
    }
}

/// (m,k)-criticality: `chi_k(g) = m` and every vertex-deleted subgraph has
/// `chi_k < m`.
pub fn is_mk_critical(g: &Graph, m: usize, k: usize) -> Criticality<usize> {
    let chi = chi(g, k);
    if chi != m || m == 0 {
        return Criticality::not_at_level(chi);
    }
    let mut witnesses = Vec::with_capacity(g.order());
    for u in 0..g.order() {
        let sub = g.delete_vertex(u).expect("vertex in range");
        match find_mk_coloring(&sub, m - 1, k) {
            Some(p) => witnesses.push((u, p)),
            None => {
                return Criticality {
                    holds: false,
                    chi,
                    witnesses: Vec::new(),
                    blocker: Some(u),
                }
            }
        }
    }
    Criticality {
        holds: true,
        chi,
        witnesses,
        blocker: None,
    }
}

/// (m,k)-edge-criticality: `chi_k(g) = m` and deleting any single edge
/// drops `chi_k` below `m`.
pub fn is_mk_edge_critical(g: &Graph, m: usize, k: usize) -> Criticality<(usize, usize)> {
    let chi = chi(g, k);
    if chi != m || m == 0 {
        return Criticality::not_at_level(chi);
    }
    let mut witnesses = Vec::with_capacity(g.edge_count());
    for (u, v) in g.edges() {
        let sub = g.delete_edge(u, v).expect("iterating real edges");
        match find_mk_coloring(&sub, m - 1, k) {
            Some(p) => witnesses.push(((u, v), p)),
            None => {
                return Criticality {
                    holds: false,
                    chi,
                    witnesses: Vec::new(),
                    blocker: Some((u, v)),
                }
            }
        }
    }
    Criticality {
        holds: true,
        chi,
        witnesses,
        blocker: None,
    }
}
