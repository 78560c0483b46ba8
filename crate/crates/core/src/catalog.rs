//! Named graphs: the extremal (3,1) graphs of orders 9 and 10 plus a few
//! standard families.
//!
//! Each extremal entry is stored as graph6 together with the drawing label
//! of every vertex. Labels follow the drawings: a double line joins every
//! vertex of one box to every vertex of the other, boxes are independent.

use std::fmt;
use std::fs;
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{chi, is_mk_critical, is_mk_edge_critical};
use crate::graph::{families, Graph};
use crate::graph6::parse_graph6;
use crate::iso::{are_isomorphic, canonical_graph};
use crate::verify::report::{Certificate, UniverseDescription, VerificationReport};
use crate::verify::universe::Universes;
use crate::verify::VerifyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog graph {0:?}")]
    Unknown(String),
}

/// A property an entry is expected to have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "property", rename_all = "kebab-case")]
pub enum Expectation {
    Order { value: usize },
    Edges { value: usize },
    TriangleFree { value: bool },
    MaxDegree { value: usize },
    Regular { degree: usize },
    Chi { k: usize, value: usize },
    Critical { m: usize, k: usize, value: bool },
    EdgeCritical { m: usize, k: usize, value: bool },
}

impl Expectation {
    /// `Err` carries what was actually observed.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        let expect = |ok: bool, seen: String| if ok { Ok(()) } else { Err(seen) };
        match *self {
            Expectation::Order { value } => expect(g.order() == value, format!("order is {}", g.order())),
            Expectation::Edges { value } => expect(g.edge_count() == value, format!("{} edges", g.edge_count())),
            Expectation::TriangleFree { value } => {
                let t = g.is_triangle_free();
                expect(t == value, format!("triangle-free is {t}"))
            }
            Expectation::MaxDegree { value } => {
                expect(g.max_degree() == value, format!("max degree is {}", g.max_degree()))
            }
            Expectation::Regular { degree } => {
                let ds = g.degree_sequence();
                expect(ds.iter().all(|&d| d == degree), format!("degrees {ds:?}"))
            }
            Expectation::Chi { k, value } => {
                let c = chi(g, k);
                expect(c == value, format!("chi_{k} is {c}"))
            }
            Expectation::Critical { m, k, value } => {
                let c = is_mk_critical(g, m, k);
                expect(c.holds == value, format!("({m},{k})-critical is {}", c.holds))
            }
            Expectation::EdgeCritical { m, k, value } => {
                let c = is_mk_edge_critical(g, m, k);
                expect(c.holds == value, format!("({m},{k})-edge-critical is {}", c.holds))
            }
        }
    }
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Expectation::Order { value } => write!(f, "order = {value}"),
            Expectation::Edges { value } => write!(f, "edges = {value}"),
            Expectation::TriangleFree { value } => write!(f, "triangle-free = {value}"),
            Expectation::MaxDegree { value } => write!(f, "max degree = {value}"),
            Expectation::Regular { degree } => write!(f, "{degree}-regular"),
            Expectation::Chi { k, value } => write!(f, "chi_{k} = {value}"),
            Expectation::Critical { m, k, value } => write!(f, "({m},{k})-critical = {value}"),
            Expectation::EdgeCritical { m, k, value } => write!(f, "({m},{k})-edge-critical = {value}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub graph: Graph,
    /// Drawing label of each vertex; empty for standard families.
    pub labels: Vec<&'static str>,
    pub expected: Vec<Expectation>,
}

impl CatalogEntry {
    /// Failed expectations as `(expectation, observation)`.
    pub fn failures(&self) -> Vec<(Expectation, String)> {
        self.expected
            .iter()
            .filter_map(|e| e.check(&self.graph).err().map(|seen| (*e, seen)))
            .collect()
    }
}

// G1: u joined to the box {u1,u2,u3,u4}; {u1,u2} = {z1,z2} is a full join,
// as is {u3,u4} = {z,z3}; z is adjacent to z1 and z2.
const G1_G6: &str = "Hs`b?{W";
const G1_LABELS: [&str; 9] = ["u", "u1", "u2", "u3", "u4", "z1", "z2", "z", "z3"];

// G2 and G3 add edges from z3 into {z1,z2}. The drawings differ only there,
// so the names are fixed by edge count: G2 has z3z1 (15 edges), G3 has
// z3z1 and z3z2 (16 edges).
const G2_G6: &str = "Hs`b?{[";
const G3_G6: &str = "Hs`b?{]";

// G4: u joined to {u1..u5}; {u1,u2} = {z1,z2}; z adjacent to u3, u4, u5,
// z1, z2.
const G4_G6: &str = "HsaBB?^";
const G4_LABELS: [&str; 9] = ["u", "u1", "u2", "u3", "u4", "u5", "z1", "z2", "z"];

// G5: {u,v} = {u1..u5}; z1 ~ u3,u4,z; z2 ~ u3,u5,z; z ~ u1,u2.
const G5_G6: &str = "I]rE?WIKW";
const G5_LABELS: [&str; 10] = ["u", "v", "u1", "u2", "u3", "u4", "u5", "z1", "z2", "z"];

/// Names of the fixed entries, in catalog order.
pub const ENTRY_NAMES: [&str; 12] = [
    "G1", "G2", "G3", "G4", "G5", "G1uK1", "G4uK1", "petersen", "grotzsch", "C5", "P3uK1", "K3,3",
];

/// Names of the order-9 extremal graphs.
pub const ORDER9_NAMES: [&str; 4] = ["G1", "G2", "G3", "G4"];

fn g6(s: &str) -> Graph {
    parse_graph6(s).expect("embedded graph6 is valid")
}

fn extremal(edges: usize, max_degree: usize, order: usize, critical: bool, edge_critical: bool) -> Vec<Expectation> {
    vec![
        Expectation::Order { value: order },
        Expectation::Edges { value: edges },
        Expectation::TriangleFree { value: true },
        Expectation::MaxDegree { value: max_degree },
        Expectation::Chi { k: 1, value: 3 },
        Expectation::Critical { m: 3, k: 1, value: critical },
        Expectation::EdgeCritical { m: 3, k: 1, value: edge_critical },
    ]
}

fn entry(name: &'static str) -> Option<CatalogEntry> {
    let (graph, labels, expected): (Graph, Vec<&'static str>, Vec<Expectation>) = match name {
        "G1" => (g6(G1_G6), G1_LABELS.to_vec(), extremal(14, 4, 9, true, true)),
        "G2" => (g6(G2_G6), G1_LABELS.to_vec(), extremal(15, 4, 9, true, false)),
        "G3" => (g6(G3_G6), G1_LABELS.to_vec(), extremal(16, 4, 9, true, false)),
        "G4" => (g6(G4_G6), G4_LABELS.to_vec(), extremal(14, 5, 9, true, true)),
        "G5" => (g6(G5_G6), G5_LABELS.to_vec(), extremal(18, 5, 10, true, true)),
        "G1uK1" | "G4uK1" => {
            let (base, labels, delta) = if name == "G1uK1" {
                (G1_G6, G1_LABELS, 4)
            } else {
                (G4_G6, G4_LABELS, 5)
            };
            let g = g6(base).disjoint_union(&Graph::empty(1)).expect("small");
            let mut l = labels.to_vec();
            l.push("w");
            (g, l, extremal(14, delta, 10, false, true))
        }
        "petersen" => (
            families::petersen(),
            Vec::new(),
            vec![
                Expectation::Order { value: 10 },
                Expectation::Edges { value: 15 },
                Expectation::Regular { degree: 3 },
                Expectation::TriangleFree { value: true },
                Expectation::Chi { k: 0, value: 3 },
                Expectation::Chi { k: 1, value: 2 },
            ],
        ),
        "grotzsch" => (
            families::grotzsch(),
            Vec::new(),
            vec![
                Expectation::Order { value: 11 },
                Expectation::Edges { value: 20 },
                Expectation::TriangleFree { value: true },
                Expectation::Chi { k: 0, value: 4 },
                Expectation::Critical { m: 4, k: 0, value: true },
            ],
        ),
        "C5" => (
            families::cycle(5),
            Vec::new(),
            vec![
                Expectation::Order { value: 5 },
                Expectation::Regular { degree: 2 },
                Expectation::Chi { k: 0, value: 3 },
                Expectation::Critical { m: 3, k: 0, value: true },
                Expectation::EdgeCritical { m: 3, k: 0, value: true },
                Expectation::Chi { k: 1, value: 2 },
            ],
        ),
        "P3uK1" => (
            families::path(3).disjoint_union(&Graph::empty(1)).expect("small"),
            Vec::new(),
            vec![
                Expectation::Order { value: 4 },
                Expectation::Chi { k: 1, value: 2 },
                Expectation::Chi { k: 2, value: 1 },
            ],
        ),
        "K3,3" => (
            families::complete_bipartite(3, 3),
            Vec::new(),
            vec![
                Expectation::Regular { degree: 3 },
                Expectation::TriangleFree { value: true },
                Expectation::Chi { k: 0, value: 2 },
                Expectation::Chi { k: 3, value: 1 },
            ],
        ),
        _ => return None,
    };
    Some(CatalogEntry {
        name,
        graph,
        labels,
        expected,
    })
}

/// Every fixed entry, in catalog order.
pub fn entries() -> Vec<CatalogEntry> {
    ENTRY_NAMES.iter().map(|n| entry(n).expect("listed")).collect()
}

pub fn catalog_entry(name: &str) -> Result<CatalogEntry, CatalogError> {
    ENTRY_NAMES
        .iter()
        .find(|&&n| n == name)
        .and_then(|n| entry(n))
        .ok_or_else(|| CatalogError::Unknown(name.to_string()))
}

/// A fixed entry by name, or a family member such as `P4`, `C7`, `K3`,
/// `K2,3` or `E5` (edgeless).
pub fn catalog_graph(name: &str) -> Result<Graph, CatalogError> {
    if let Ok(e) = catalog_entry(name) {
        return Ok(e.graph);
    }
    family(name).ok_or_else(|| CatalogError::Unknown(name.to_string()))
}

fn family(name: &str) -> Option<Graph> {
    let num = |s: &str| s.parse::<usize>().ok().filter(|&n| n <= 16);
    let (head, rest) = name.split_at(name.char_indices().nth(1)?.0);
    match head {
        "P" => num(rest).filter(|&n| n >= 1).map(families::path),
        "C" => num(rest).filter(|&n| n >= 3).map(families::cycle),
        "E" => num(rest).map(Graph::empty),
        "K" => match rest.split_once(',') {
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b)?);
                (a + b <= 16).then(|| families::complete_bipartite(a, b))
            }
            None => num(rest).map(families::complete),
        },
        _ => None,
    }
}

/// Writes `catalog.g6` (one graph per line, catalog order) and
/// `catalog.labels.txt` (`name TAB g6 TAB index:label ...`).
pub fn export_catalog(dir: &Path) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut g6s = String::new();
    let mut labels = String::new();
    for e in entries() {
        let s = e.graph.to_string();
        g6s.push_str(&s);
        g6s.push('\n');
        let map: Vec<String> = e.labels.iter().enumerate().map(|(i, l)| format!("{i}:{l}")).collect();
        labels.push_str(&format!("{}\t{}\t{}\n", e.name, s, map.join(" ")));
    }
    fs::write(dir.join("catalog.g6"), g6s)?;
    fs::write(dir.join("catalog.labels.txt"), labels)
}

/// Checks the given entries against their expectations and against the
/// enumerated extremal sets of orders 9 and 10.
pub fn validate_entries(entries: &[CatalogEntry], universes: &Universes) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let mut r = VerificationReport::new(
        "catalog",
        "catalog entries have their recorded properties and match the enumerated extremal graphs",
        UniverseDescription {
            n: "9-10".into(),
            filter: "tf".into(),
            hypothesis: "chi_1 = 3 (order 9); (3,1)-critical (order 10)".into(),
        },
    );
    for e in entries {
        for (exp, seen) in e.failures() {
            r.refute(e.graph.to_string(), format!("{}: expected {exp}, found {seen}", e.name));
        }
    }

    let by_name = |name: &str| entries.iter().find(|e| e.name == name);

    // order 9: the four graphs are distinct and are exactly the chi_1 = 3 classes
    let u9 = universes.triangle_free(9)?;
    let c9 = universes.chi1(9, crate::enumerate::Filter::TriangleFree)?;
    let extremal9: Vec<&Graph> = u9.graphs.iter().zip(c9.iter()).filter(|(_, &c)| c == 3).map(|(g, _)| g).collect();
    r.universe_size += u9.len() as u64;
    r.tally("order9_chi1_eq_3", extremal9.len() as u64);
    let mut keys9 = Vec::new();
    for name in ORDER9_NAMES {
        let Some(e) = by_name(name) else { continue };
        let key = canonical_graph(&e.graph).map_err(VerifyError::from)?;
        if keys9.iter().any(|(_, k)| *k == key) {
            r.refute(e.graph.to_string(), format!("{name}: isomorphic to another order-9 entry"));
        }
        match extremal9.iter().find(|g| ***g == key) {
            Some(g) => {
                let map = are_isomorphic(&e.graph, g).map_err(VerifyError::from)?.expect("same key");
                // certificate maps the enumerated representative onto the entry
                let inv = invert(&map.0);
                r.certificates.push(Certificate::Isomorphism {
                    g6: g.to_string(),
                    target: name.to_string(),
                    map: inv,
                });
            }
            None => r.refute(
                e.graph.to_string(),
                format!("{name}: not among the enumerated order-9 graphs with chi_1 = 3"),
            ),
        }
        keys9.push((name, key));
    }
    for g in &extremal9 {
        if !keys9.iter().any(|(_, k)| k == *g) {
            r.refute(g.to_string(), "enumerated order-9 graph with chi_1 = 3 missing from the catalog");
        }
    }

    // order 10: G5 is the unique (3,1)-critical class
    let u10 = universes.triangle_free(10)?;
    let c10 = universes.chi1(10, crate::enumerate::Filter::TriangleFree)?;
    r.universe_size += u10.len() as u64;
    let critical: Vec<&Graph> = critical_members(&u10.graphs, &c10);
    r.tally("order10_critical", critical.len() as u64);
    if let Some(e) = by_name("G5") {
        let key = canonical_graph(&e.graph).map_err(VerifyError::from)?;
        match critical.as_slice() {
            [only] if **only == key => {}
            _ => r.refute(
                e.graph.to_string(),
                format!(
                    "G5: expected to be the unique (3,1)-critical order-10 class, enumeration found {}",
                    critical.len()
                ),
            ),
        }
    }
    Ok(r.finish(started))
}

pub(crate) fn critical_members<'a>(graphs: &'a [Graph], chi1: &[usize]) -> Vec<&'a Graph> {
    use rayon::prelude::*;
    graphs
        .par_iter()
        .zip(chi1.par_iter())
        .filter(|(g, &c)| c == 3 && is_mk_critical(g, 3, 1).holds)
        .map(|(g, _)| g)
        .collect()
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

pub fn validate_catalog(universes: &Universes) -> Result<VerificationReport, VerifyError> {
    validate_entries(&entries(), universes)
}
