//! One representative per isomorphism class of triangle-free graphs (or of
//! all graphs, for small orders) by canonical augmentation.
//!
//! A child of a canonical parent on `n - 1` vertices adds vertex `n - 1`
//! with some neighbourhood `S`; for triangle-free generation `S` must be an
//! independent set of the parent. The child is kept iff its new vertex lies
//! in the automorphism orbit of the vertex that the canonical labelling
//! places last, so each class has exactly one parent class. Isomorphic
//! children of one parent are merged through their canonical graphs.
//! Representatives are emitted in canonical labelling.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring;
use crate::graph::{Bits, Graph};
use crate::iso::{self, root_partition};

/// Largest order supported for triangle-free generation.
pub const MAX_TRIANGLE_FREE_ORDER: usize = 12;
/// Largest order supported for unfiltered generation.
pub const MAX_ALL_ORDER: usize = 9;
/// Largest order for the labelled brute-force oracle.
pub const MAX_BRUTE_FORCE_ORDER: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("order {n} unsupported for filter {filter} (supported 1..={max})")]
    OrderOutOfRange { n: usize, filter: Filter, max: usize },
    #[error("brute-force enumeration supports n <= {MAX_BRUTE_FORCE_ORDER}, got {0}")]
    BruteForceTooLarge(usize),
    #[error("invalid shard {index}/{count}")]
    BadShard { index: usize, count: usize },
    #[error("graph {0} appears in more than one shard")]
    CrossShardDuplicate(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    TriangleFree,
    All,
}

impl Filter {
    /// Short tag used in cache file names.
    pub fn tag(self) -> &'static str {
        match self {
            Filter::TriangleFree => "tf",
            Filter::All => "all",
        }
    }

    pub fn max_order(self) -> usize {
        match self {
            Filter::TriangleFree => MAX_TRIANGLE_FREE_ORDER,
            Filter::All => MAX_ALL_ORDER,
        }
    }

    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            Filter::TriangleFree => g.is_triangle_free(),
            Filter::All => true,
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Filter {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "tf" | "triangle-free" => Ok(Filter::TriangleFree),
            "all" => Ok(Filter::All),
            other => Err(format!("unknown filter {other:?} (expected tf or all)")),
        }
    }
}

/// Work split by parent: shard `index` of `count` takes the parents whose
/// position in generation order is congruent to `index` modulo `count`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shard {
    pub index: usize,
    pub count: usize,
}

impl Shard {
    pub fn new(index: usize, count: usize) -> Result<Shard, EnumerateError> {
        if count == 0 || index >= count {
            return Err(EnumerateError::BadShard { index, count });
        }
        Ok(Shard { index, count })
    }

    fn owns(&self, position: usize) -> bool {
        position % self.count == self.index
    }
}

impl FromStr for Shard {
    type Err = String;
    /// `"i/of"` with `0 <= i < of`.
    fn from_str(s: &str) -> Result<Self, String> {
        let (i, of) = s
            .split_once('/')
            .ok_or_else(|| format!("shard {s:?} is not of the form i/of"))?;
        let index = i.trim().parse().map_err(|e| format!("shard index: {e}"))?;
        let count = of.trim().parse().map_err(|e| format!("shard count: {e}"))?;
        Shard::new(index, count).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationSummary {
    pub n: usize,
    pub filter: Filter,
    pub class_count: u64,
    pub max_degree_histogram: BTreeMap<usize, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi1_histogram: Option<BTreeMap<usize, u64>>,
}

impl EnumerationSummary {
    fn new(n: usize, filter: Filter, with_chi1: bool) -> Self {
        EnumerationSummary {
            n,
            filter,
            class_count: 0,
            max_degree_histogram: BTreeMap::new(),
            chi1_histogram: with_chi1.then(BTreeMap::new),
        }
    }

    fn record(&mut self, g: &Graph) {
        self.class_count += 1;
        *self.max_degree_histogram.entry(g.max_degree()).or_default() += 1;
        if let Some(h) = &mut self.chi1_histogram {
            *h.entry(coloring::chi(g, 1)).or_default() += 1;
        }
    }
}

/// Independent sets of the graph on rows `adj`, in depth-first order.
fn independent_sets(adj: &[u64]) -> Vec<u64> {
    fn grow(adj: &[u64], candidates: u64, current: u64, out: &mut Vec<u64>) {
        out.push(current);
        for v in Bits(candidates) {
            let higher = candidates & !((2u64 << v) - 1);
            grow(adj, higher & !adj[v], current | 1 << v, out);
        }
    }
    let mut out = Vec::new();
    let all = if adj.is_empty() { 0 } else { (1u64 << adj.len()) - 1 };
    grow(adj, all, 0, &mut out);
    out
}

/// Accepted canonical children of a canonical parent, in discovery order.
pub fn children(parent: &Graph, filter: Filter) -> Vec<Graph> {
    let p = parent.order();
    let adj = parent.rows();
    let degrees: Vec<u32> = adj.iter().map(|r| r.count_ones()).collect();
    let parent_delta = degrees.iter().copied().max().unwrap_or(0);
    let neighbourhoods = match filter {
        Filter::TriangleFree => independent_sets(adj),
        Filter::All => (0..1u64 << p).collect(),
    };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut rows = [0u64; iso::MAX_CANON_ORDER];
    for s in neighbourhoods {
        // the canonical last vertex always has maximum degree
        let d = s.count_ones();
        if d < parent_delta || Bits(s).any(|v| degrees[v] + 1 > d) {
            continue;
        }
        for v in 0..p {
            rows[v] = adj[v] | ((s >> v & 1) << p);
        }
        rows[p] = s;
        let child = Graph::from_rows_unchecked(&rows[..=p]);
        let root = root_partition(&child);
        let last_cell = *root.cells().last().expect("non-empty graph");
        if last_cell >> p & 1 == 0 {
            continue;
        }
        let lab = iso::canonical_labelling(&child).expect("order within limit");
        let last = lab.last_vertex().expect("non-empty graph");
        if !lab.same_orbit(p, last) {
            continue;
        }
        if seen.insert(lab.canon.clone()) {
            out.push(lab.canon);
        }
    }
    out
}

/// All representatives of order `n`, materialised, in generation order.
pub fn level(n: usize, filter: Filter) -> Vec<Graph> {
    let mut current = vec![Graph::empty(0)];
    for _ in 0..n {
        let next: Vec<Vec<Graph>> = current.par_iter().map(|g| children(g, filter)).collect();
        current = next.into_iter().flatten().collect();
    }
    current
}

/// One enumeration run: target order, filter and optional shard.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationTask {
    pub n: usize,
    pub filter: Filter,
    pub shard: Option<Shard>,
}

impl EnumerationTask {
    pub fn new(n: usize, filter: Filter) -> Result<Self, EnumerateError> {
        let max = filter.max_order();
        if n == 0 || n > max {
            return Err(EnumerateError::OrderOutOfRange { n, filter, max });
        }
        Ok(EnumerationTask {
            n,
            filter,
            shard: None,
        })
    }

    pub fn triangle_free(n: usize) -> Result<Self, EnumerateError> {
        Self::new(n, Filter::TriangleFree)
    }

    pub fn with_shard(mut self, shard: Shard) -> Self {
        self.shard = Some(shard);
        self
    }

    /// Parents of order `n - 1` owned by this task's shard.
    fn parents(&self) -> Vec<Graph> {
        let all = level(self.n - 1, self.filter);
        match self.shard {
            None => all,
            Some(shard) => all
                .into_iter()
                .enumerate()
                .filter(|(i, _)| shard.owns(*i))
                .map(|(_, g)| g)
                .collect(),
        }
    }

    /// Streams every representative to `consumer`, one parent at a time.
    pub fn for_each<F: FnMut(&Graph)>(&self, consumer: F) -> EnumerationSummary {
        self.for_each_with(false, consumer)
    }

    /// As [`for_each`](Self::for_each), optionally tallying `chi_1`.
    pub fn for_each_with<F: FnMut(&Graph)>(&self, with_chi1: bool, mut consumer: F) -> EnumerationSummary {
        let mut summary = EnumerationSummary::new(self.n, self.filter, with_chi1);
        for parent in self.parents() {
            for child in children(&parent, self.filter) {
                summary.record(&child);
                consumer(&child);
            }
        }
        summary
    }

    /// Applies `f` to every representative in parallel; results come back in
    /// generation order regardless of thread count.
    pub fn par_filter_map<T, F>(&self, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(&Graph) -> Option<T> + Sync,
    {
        let per_parent: Vec<Vec<T>> = self
            .parents()
            .par_iter()
            .map(|p| children(p, self.filter).iter().filter_map(&f).collect())
            .collect();
        per_parent.into_iter().flatten().collect()
    }

    /// Every representative, in generation order.
    pub fn collect(&self) -> Vec<Graph> {
        self.par_filter_map(|g| Some(g.clone()))
    }
}

/// Calls `consumer` once per isomorphism class of triangle-free graphs of order `n`.
pub fn enumerate_triangle_free<F: FnMut(&Graph)>(n: usize, consumer: F) -> Result<EnumerationSummary, EnumerateError> {
    Ok(EnumerationTask::triangle_free(n)?.for_each(consumer))
}

/// Multiset union of shard outputs, failing on any graph seen in two shards.
pub fn merge_shards(shards: Vec<Vec<Graph>>) -> Result<Vec<Graph>, EnumerateError> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in shards.into_iter().flatten() {
        if !seen.insert(g.clone()) {
            return Err(EnumerateError::CrossShardDuplicate(g.to_string()));
        }
        out.push(g);
    }
    Ok(out)
}

/// Labelled brute force: every graph on `n` vertices, filtered by
/// `predicate`, one canonical representative per class, sorted.
pub fn brute_force_enumerate<P: Fn(&Graph) -> bool>(n: usize, predicate: P) -> Result<Vec<Graph>, EnumerateError> {
    if n > MAX_BRUTE_FORCE_ORDER {
        return Err(EnumerateError::BruteForceTooLarge(n));
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut classes = HashSet::new();
    for mask in 0u64..1 << pairs.len() {
        let mut rows = vec![0u64; n];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
        let g = Graph::from_rows_unchecked(&rows);
        if predicate(&g) {
            classes.insert(iso::canonical_graph(&g).expect("small order"));
        }
    }
    let mut out: Vec<Graph> = classes.into_iter().collect();
    out.sort_by_key(|g| g.to_string());
    Ok(out)
}
