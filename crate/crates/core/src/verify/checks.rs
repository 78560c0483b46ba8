//! The individual checks. Each scans a universe in parallel, then folds the
//! per-graph verdicts in universe order so reports are reproducible.

use std::sync::OnceLock;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::catalog::{self, catalog_graph};
use crate::coloring::{chi, find_mk_coloring, is_mk_critical, is_mk_edge_critical, lovasz_bound, order_bound};
use crate::decompose::around_max_degree_vertices;
use crate::enumerate::{EnumerationTask, Filter};
use crate::graph::{families, Graph};
use crate::iso::{are_isomorphic, canonical_graph};

use super::report::{Certificate, UniverseDescription, VerificationReport};
use super::universe::Universes;
use super::VerifyError;

pub const LEMMA_IDS: std::ops::RangeInclusive<usize> = 4..=13;

/// What `verify all` runs, in order.
pub const DEFAULT_CHECKS: [&str; 18] = [
    "small-orders",
    "order9",
    "order10",
    "critical10",
    "lemma4",
    "lemma5",
    "lemma6",
    "lemma7",
    "lemma8",
    "lemma9",
    "lemma10",
    "lemma11",
    "lemma12",
    "lemma13",
    "lovasz",
    "f32",
    "catalog",
    "monotonicity",
];

/// Witness colourings kept per order in sweep reports.
const CERTS_PER_ORDER: usize = 2;

/// Largest order read from a (cacheable) universe; larger orders stream.
const MATERIALISE_UP_TO: usize = 10;

pub const DEFAULT_SEED: u64 = 1729;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    /// Extends `f32` to orders 11 and 12.
    pub long: bool,
    pub seed: u64,
    pub random_graphs: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            long: false,
            seed: DEFAULT_SEED,
            random_graphs: 10_000,
        }
    }
}

pub fn available_checks() -> &'static [&'static str] {
    &DEFAULT_CHECKS
}

pub fn run_check(id: &str, universes: &Universes, opts: &CheckOptions) -> Result<VerificationReport, VerifyError> {
    match id {
        "small-orders" => verify_small_orders_colorable(universes),
        "order9" => verify_order9_classification(universes),
        "order10" => verify_order10_characterization(universes),
        "critical10" => verify_critical_and_edge_critical_order10(universes),
        "lovasz" => verify_lovasz_bound(universes, 10, 2),
        "f32" => verify_f32_lower_bound(universes, opts.long),
        "catalog" => catalog::validate_catalog(universes),
        "monotonicity" => Ok(verify_monotonicity(opts.seed, opts.random_graphs, 10)),
        other => match other.strip_prefix("lemma").and_then(|s| s.parse::<usize>().ok()) {
            Some(id) if LEMMA_IDS.contains(&id) => verify_structural_lemma(universes, id),
            _ => Err(VerifyError::UnknownCheck(other.to_string())),
        },
    }
}

fn describe(n: impl Into<String>, filter: &str, hypothesis: impl Into<String>) -> UniverseDescription {
    UniverseDescription {
        n: n.into(),
        filter: filter.to_string(),
        hypothesis: hypothesis.into(),
    }
}

/// A catalog graph with its canonical key.
struct Target {
    name: &'static str,
    graph: Graph,
    key: Graph,
}

fn targets(names: &[&'static str]) -> Vec<Target> {
    names
        .iter()
        .map(|&name| {
            let graph = catalog_graph(name).expect("catalog name");
            let key = canonical_graph(&graph).expect("small");
            Target { name, graph, key }
        })
        .collect()
}

fn key(g: &Graph) -> Graph {
    canonical_graph(g).expect("universe graphs are within the canonical limit")
}

/// Least `u`, then first target in list order, with `g - u` isomorphic to
/// the target.
fn deleted_copy(g: &Graph, targets: &[Target]) -> Option<(usize, &'static str, Certificate)> {
    for u in 0..g.order() {
        let sub = g.delete_vertex(u).expect("in range");
        let k = key(&sub);
        if let Some(t) = targets.iter().find(|t| t.key == k) {
            let map = are_isomorphic(&sub, &t.graph).expect("small").expect("equal keys");
            let cert = Certificate::DeletedCopy {
                g6: g.to_string(),
                vertex: u,
                target: t.name.to_string(),
                map: map.0,
            };
            return Some((u, t.name, cert));
        }
    }
    None
}

fn isomorphism_cert(g: &Graph, t: &Target) -> Certificate {
    let map = are_isomorphic(g, &t.graph).expect("small").expect("equal keys");
    Certificate::Isomorphism {
        g6: g.to_string(),
        target: t.name.to_string(),
        map: map.0,
    }
}

// ---------------------------------------------------------------- sweeps

fn colourable_sweep(
    universes: &Universes,
    check_id: &str,
    statement: &str,
    orders: std::ops::RangeInclusive<usize>,
    m: usize,
    k: usize,
) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let mut r = VerificationReport::new(
        check_id,
        statement,
        describe(format!("{}-{}", orders.start(), orders.end()), "tf", "none"),
    );
    let reason = |g: &Graph| format!("not ({m},{k})-colourable; chi_{k} = {}", chi(g, k));
    for n in orders {
        if n <= MATERIALISE_UP_TO {
            let u = universes.triangle_free(n)?;
            let found: Vec<_> = u.graphs.par_iter().map(|g| find_mk_coloring(g, m, k)).collect();
            for (i, (g, p)) in u.graphs.iter().zip(&found).enumerate() {
                match p {
                    None => r.refute(u.g6[i].clone(), reason(g)),
                    Some(p) if i < CERTS_PER_ORDER => {
                        r.certificates.push(Certificate::colouring(u.g6[i].clone(), p, None))
                    }
                    Some(_) => {}
                }
            }
            r.universe_size += u.len() as u64;
            r.tally(format!("order_{n:02}"), u.len() as u64);
        } else {
            let task = EnumerationTask::triangle_free(n)?;
            let verdicts = task.par_filter_map(|g| {
                Some(find_mk_coloring(g, m, k).is_none().then(|| (g.to_string(), reason(g))))
            });
            r.universe_size += verdicts.len() as u64;
            r.tally(format!("order_{n:02}"), verdicts.len() as u64);
            for (g6, why) in verdicts.into_iter().flatten() {
                r.refute(g6, why);
            }
        }
    }
    Ok(r.finish(started))
}

/// Every triangle-free graph of order at most 8 is (2,1)-colourable.
pub fn verify_small_orders_colorable(universes: &Universes) -> Result<VerificationReport, VerifyError> {
    colourable_sweep(
        universes,
        "small-orders",
        "every triangle-free graph with n <= 8 is (2,1)-colourable",
        1..=8,
        2,
        1,
    )
}

/// Every triangle-free graph with order in `orders` is (m,k)-colourable.
pub fn verify_colourable(
    universes: &Universes,
    orders: std::ops::RangeInclusive<usize>,
    m: usize,
    k: usize,
) -> Result<VerificationReport, VerifyError> {
    if *orders.start() == 0 || *orders.end() > crate::enumerate::MAX_TRIANGLE_FREE_ORDER {
        return Err(VerifyError::BadParameter(format!(
            "orders must lie in 1..={}",
            crate::enumerate::MAX_TRIANGLE_FREE_ORDER
        )));
    }
    let statement = format!(
        "every triangle-free graph with {} <= n <= {} is ({m},{k})-colourable",
        orders.start(),
        orders.end()
    );
    colourable_sweep(universes, "colourable", &statement, orders, m, k)
}

/// Every triangle-free graph of order at most 12 (10 unless `long`) is
/// (2,2)-colourable.
pub fn verify_f32_lower_bound(universes: &Universes, long: bool) -> Result<VerificationReport, VerifyError> {
    let top = if long { 12 } else { 10 };
    colourable_sweep(
        universes,
        "f32",
        &format!("every triangle-free graph with n <= {top} is (2,2)-colourable"),
        1..=top,
        2,
        2,
    )
}

// ---------------------------------------------------------------- order 9

pub fn verify_order9_classification(universes: &Universes) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let mut r = VerificationReport::new(
        "order9",
        "the triangle-free graphs of order 9 with chi_1 = 3 are exactly G1..G4; all are (3,1)-critical; \
         exactly G1 and G4 are (3,1)-edge-critical",
        describe("9", "tf", "chi_1 = 3"),
    );
    let u = universes.triangle_free(9)?;
    let c = universes.chi1(9, Filter::TriangleFree)?;
    r.universe_size = u.len() as u64;
    let names = catalog::ORDER9_NAMES;
    let ts = targets(&names);
    let mut matched = vec![false; ts.len()];

    for (i, g) in u.graphs.iter().enumerate() {
        r.tally(format!("chi1_eq_{}", c[i]), 1);
        if c[i] > 3 {
            r.refute(u.g6[i].clone(), format!("chi_1 = {}", c[i]));
        }
        if c[i] != 3 {
            continue;
        }
        let Some(t) = ts.iter().position(|t| t.key == *g) else {
            r.refute(u.g6[i].clone(), "chi_1 = 3 but isomorphic to none of G1..G4");
            continue;
        };
        matched[t] = true;
        let name = ts[t].name;
        r.certificates.push(isomorphism_cert(g, &ts[t]));

        let crit = is_mk_critical(g, 3, 1);
        if crit.holds {
            r.tally("critical", 1);
            for (v, p) in &crit.witnesses {
                let about = format!("{name} - vertex {v}");
                let sub = g.delete_vertex(*v).expect("in range");
                r.certificates.push(Certificate::colouring(sub.to_string(), p, Some(about)));
            }
        } else {
            r.refute(u.g6[i].clone(), format!("{name} is not (3,1)-critical"));
        }

        let edge = is_mk_edge_critical(g, 3, 1);
        let expected = name == "G1" || name == "G4";
        if edge.holds {
            r.tally("edge_critical", 1);
            r.tally(format!("edge_critical_{name}"), 1);
        }
        if edge.holds != expected {
            r.refute(
                u.g6[i].clone(),
                format!("{name}: (3,1)-edge-critical is {}, expected {expected}", edge.holds),
            );
        }
    }
    for (t, hit) in ts.iter().zip(&matched) {
        if !hit {
            r.refute(t.graph.to_string(), format!("{} has no enumerated counterpart with chi_1 = 3", t.name));
        }
    }
    r.tally("class_count", c.iter().filter(|&&x| x == 3).count() as u64);
    Ok(r.finish(started))
}

// ---------------------------------------------------------------- order 10

fn order9_targets() -> &'static [Target] {
    static T: OnceLock<Vec<Target>> = OnceLock::new();
    T.get_or_init(|| targets(&catalog::ORDER9_NAMES))
}

fn g5_target() -> &'static Target {
    static T: OnceLock<Vec<Target>> = OnceLock::new();
    &T.get_or_init(|| targets(&["G5"]))[0]
}

enum Verdict {
    Outside,
    Holds {
        census: Vec<String>,
        certificates: Vec<Certificate>,
    },
    Fails {
        reason: String,
        census: Vec<String>,
    },
}

/// Runs `judge` over the triangle-free order-10 universe and folds the
/// verdicts in universe order.
fn scan10<F>(universes: &Universes, mut r: VerificationReport, started: Instant, judge: F) -> Result<VerificationReport, VerifyError>
where
    F: Fn(&Graph, usize) -> Verdict + Sync,
{
    let u = universes.triangle_free(10)?;
    let c = universes.chi1(10, Filter::TriangleFree)?;
    r.universe_size = u.len() as u64;
    let verdicts: Vec<Verdict> = u.graphs.par_iter().zip(c.par_iter()).map(|(g, &x)| judge(g, x)).collect();
    for (i, v) in verdicts.into_iter().enumerate() {
        match v {
            Verdict::Outside => {}
            Verdict::Holds { census, certificates } => {
                r.tally("hypothesis_members", 1);
                for key in census {
                    r.tally(key, 1);
                }
                r.certificates.extend(certificates);
            }
            Verdict::Fails { reason, census } => {
                r.tally("hypothesis_members", 1);
                for key in census {
                    r.tally(key, 1);
                }
                r.refute(u.g6[i].clone(), reason);
            }
        }
    }
    Ok(r.finish(started))
}

pub fn verify_order10_characterization(universes: &Universes) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let r = VerificationReport::new(
        "order10",
        "a triangle-free graph of order 10 with chi_1 = 3 is G5 or has a vertex u* with G - u* one of G1..G4; \
         conversely such graphs have chi_1 = 3; no triangle-free graph of order 10 has chi_1 >= 4",
        describe("10", "tf", "none (branches split on chi_1)"),
    );
    let g9 = order9_targets();
    let g5 = g5_target();
    scan10(universes, r, started, |g, x| {
        let is_g5 = *g == g5.key;
        let copy = deleted_copy(g, g9);
        let mut census = vec![format!("chi1_eq_{x}")];
        if x >= 4 {
            return Verdict::Fails {
                reason: format!("chi_1 = {x}"),
                census,
            };
        }
        if x < 3 {
            return match (is_g5, copy) {
                (true, _) => Verdict::Fails {
                    reason: format!("isomorphic to G5 but chi_1 = {x}"),
                    census,
                },
                (false, Some((u, name, _))) => Verdict::Fails {
                    reason: format!("G - {u} is {name} but chi_1 = {x}"),
                    census,
                },
                (false, None) => Verdict::Holds {
                    census,
                    certificates: Vec::new(),
                },
            };
        }
        match (is_g5, copy) {
            (true, None) => {
                census.push("branch_G5".into());
                Verdict::Holds {
                    census,
                    certificates: vec![isomorphism_cert(g, g5)],
                }
            }
            (true, Some((u, name, _))) => Verdict::Fails {
                reason: format!("isomorphic to G5 yet G - {u} is {name}"),
                census,
            },
            (false, Some((_, name, cert))) => {
                census.push(format!("branch_deleted_{name}"));
                Verdict::Holds {
                    census,
                    certificates: vec![cert],
                }
            }
            (false, None) => Verdict::Fails {
                reason: "chi_1 = 3, not G5, and no vertex-deleted copy of G1..G4".into(),
                census,
            },
        }
    })
}

pub fn verify_critical_and_edge_critical_order10(universes: &Universes) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let mut r = VerificationReport::new(
        "critical10",
        "among triangle-free graphs of order 10 the (3,1)-critical set is {G5} and the (3,1)-edge-critical set \
         is {G5, G1uK1, G4uK1}; edge-critical without isolated vertices implies critical",
        describe("10", "tf", "chi_1 = 3"),
    );
    let u = universes.triangle_free(10)?;
    let c = universes.chi1(10, Filter::TriangleFree)?;
    r.universe_size = u.len() as u64;
    let ts = targets(&["G5", "G1uK1", "G4uK1"]);

    let flags: Vec<Option<(bool, bool)>> = u
        .graphs
        .par_iter()
        .zip(c.par_iter())
        .map(|(g, &x)| (x == 3).then(|| (is_mk_critical(g, 3, 1).holds, is_mk_edge_critical(g, 3, 1).holds)))
        .collect();

    let mut seen = vec![false; ts.len()];
    for (i, f) in flags.iter().enumerate() {
        let Some((crit, edge)) = *f else { continue };
        let g = &u.graphs[i];
        let name = ts.iter().position(|t| t.key == *g);
        if crit {
            r.tally("critical", 1);
        }
        if edge {
            r.tally("edge_critical", 1);
        }
        if edge && g.isolated_vertices().is_empty() && !crit {
            r.refute(u.g6[i].clone(), "edge-critical with no isolated vertex but not critical");
        }
        let want_crit = name == Some(0);
        let want_edge = name.is_some();
        if crit != want_crit {
            r.refute(u.g6[i].clone(), format!("(3,1)-critical is {crit}, expected {want_crit}"));
        }
        if edge != want_edge {
            r.refute(u.g6[i].clone(), format!("(3,1)-edge-critical is {edge}, expected {want_edge}"));
        }
        if let Some(t) = name {
            seen[t] = true;
            r.certificates.push(isomorphism_cert(g, &ts[t]));
            let ec = is_mk_edge_critical(g, 3, 1);
            for ((a, b), p) in &ec.witnesses {
                let sub = g.delete_edge(*a, *b).expect("edge");
                let about = format!("{} - edge {a}{b}", ts[t].name);
                r.certificates.push(Certificate::colouring(sub.to_string(), p, Some(about)));
            }
            if crit {
                for (v, p) in &is_mk_critical(g, 3, 1).witnesses {
                    let sub = g.delete_vertex(*v).expect("in range");
                    let about = format!("{} - vertex {v}", ts[t].name);
                    r.certificates.push(Certificate::colouring(sub.to_string(), p, Some(about)));
                }
            }
        }
    }
    for (t, hit) in ts.iter().zip(seen) {
        if !hit {
            r.refute(t.graph.to_string(), format!("{} not found among chi_1 = 3 graphs of order 10", t.name));
        }
    }
    Ok(r.finish(started))
}

// ---------------------------------------------------------------- lemmas

/// Named small graphs that can occur as `H`.
fn shapes() -> &'static [(&'static str, Graph)] {
    static S: OnceLock<Vec<(&'static str, Graph)>> = OnceLock::new();
    S.get_or_init(|| {
        let u = |a: Graph, b: Graph| a.disjoint_union(&b).expect("small");
        let raw = vec![
            ("P3uK1", u(families::path(3), Graph::empty(1))),
            ("P4", families::path(4)),
            ("C4", families::cycle(4)),
            ("P3u2K1", u(families::path(3), Graph::empty(2))),
            ("P3uK2", u(families::path(3), families::path(2))),
            ("P4uK1", u(families::path(4), Graph::empty(1))),
            ("P5", families::path(5)),
            ("C5", families::cycle(5)),
            ("C4uK1", u(families::cycle(4), Graph::empty(1))),
        ];
        raw.into_iter().map(|(n, g)| (n, key(&g))).collect()
    })
}

fn shape_of(h: &Graph) -> Option<&'static str> {
    let k = key(h);
    shapes().iter().find(|(_, s)| *s == k).map(|(n, _)| *n)
}

const FIVE_VERTEX_SHAPES: [&str; 6] = ["P3u2K1", "P3uK2", "P4uK1", "P5", "C5", "C4uK1"];

fn lemma_shapes(id: usize) -> &'static [&'static str] {
    match id {
        9 => &["P3u2K1", "P3uK2"],
        10 => &["P4uK1"],
        11 => &["P5"],
        12 => &["C5"],
        13 => &["C4uK1"],
        _ => &[],
    }
}

fn copy_verdict(g: &Graph, allowed: &[Target], mut census: Vec<String>, what: &str) -> Verdict {
    match deleted_copy(g, allowed) {
        Some((_, name, cert)) => {
            census.push(format!("deleted_{name}"));
            Verdict::Holds {
                census,
                certificates: vec![cert],
            }
        }
        None => Verdict::Fails {
            reason: format!("no vertex u* with G - u* in {what}"),
            census,
        },
    }
}

pub fn verify_structural_lemma(universes: &Universes, lemma_id: usize) -> Result<VerificationReport, VerifyError> {
    if !LEMMA_IDS.contains(&lemma_id) {
        return Err(VerifyError::UnknownLemma(lemma_id));
    }
    let started = Instant::now();
    let id = format!("lemma{lemma_id}");
    let g9 = order9_targets();
    let (statement, hypothesis): (String, String) = match lemma_id {
        4 => (
            "Delta(H) >= 2 for every maximum-degree u, and 4 <= Delta(G) <= 6".into(),
            "chi_1 >= 3".into(),
        ),
        5 => ("some u* has G - u* isomorphic to G4".into(), "chi_1 = 3, Delta = 6".into()),
        6 => (
            "for every maximum-degree u, |B| = 4 and Delta(H) = 2".into(),
            "chi_1 = 3, Delta = 5".into(),
        ),
        7 => (
            "some u* has G - u* isomorphic to one of G1..G4, or G is isomorphic to G5".into(),
            "chi_1 = 3, Delta = 5".into(),
        ),
        8 => (
            "if some maximum-degree u has 3 <= Delta(H) <= 4 then some u* has G - u* isomorphic to G1 or G2; \
             every maximum-degree u with Delta(H) = 2 has H among P3u2K1, P3uK2, P4uK1, P5, C5, C4uK1"
                .into(),
            "chi_1 = 3, Delta = 4".into(),
        ),
        _ => (
            "some u* has G - u* isomorphic to one of G1..G3".into(),
            format!(
                "chi_1 = 3, Delta = 4, some maximum-degree u has H isomorphic to {}",
                lemma_shapes(lemma_id).join(" or ")
            ),
        ),
    };
    let r = VerificationReport::new(&id, &statement, describe("10", "tf", hypothesis));

    scan10(universes, r, started, move |g, x| {
        let delta = g.max_degree();
        let splits = || around_max_degree_vertices(g);
        match lemma_id {
            4 => {
                if x < 3 {
                    return Verdict::Outside;
                }
                let census = vec![format!("delta_{delta}")];
                if !(4..=6).contains(&delta) {
                    return Verdict::Fails {
                        reason: format!("Delta = {delta}"),
                        census,
                    };
                }
                match splits().iter().find(|d| d.h_max_degree() < 2) {
                    Some(d) => Verdict::Fails {
                        reason: format!("u = {} gives Delta(H) = {}", d.u, d.h_max_degree()),
                        census,
                    },
                    None => Verdict::Holds {
                        census,
                        certificates: Vec::new(),
                    },
                }
            }
            5 => {
                if x != 3 || delta != 6 {
                    return Verdict::Outside;
                }
                copy_verdict(g, &g9[3..4], Vec::new(), "{G4}")
            }
            6 => {
                if x != 3 || delta != 5 {
                    return Verdict::Outside;
                }
                let ds = splits();
                let census = vec![format!("h_shape_{}", shape_of(&ds[0].h).unwrap_or("other"))];
                match ds.iter().find(|d| d.b.len() != 4 || d.h_max_degree() != 2) {
                    Some(d) => Verdict::Fails {
                        reason: format!("u = {} gives |B| = {}, Delta(H) = {}", d.u, d.b.len(), d.h_max_degree()),
                        census,
                    },
                    None => Verdict::Holds {
                        census,
                        certificates: Vec::new(),
                    },
                }
            }
            7 => {
                if x != 3 || delta != 5 {
                    return Verdict::Outside;
                }
                let g5 = g5_target();
                match deleted_copy(g, g9) {
                    Some((_, name, cert)) => Verdict::Holds {
                        census: vec![format!("branch_deleted_{name}")],
                        certificates: vec![cert],
                    },
                    None if *g == g5.key => Verdict::Holds {
                        census: vec!["branch_G5".into()],
                        certificates: vec![isomorphism_cert(g, g5)],
                    },
                    None => Verdict::Fails {
                        reason: "neither G5 nor a vertex-deleted copy of G1..G4".into(),
                        census: Vec::new(),
                    },
                }
            }
            8 => {
                if x != 3 || delta != 4 {
                    return Verdict::Outside;
                }
                let ds = splits();
                for d in ds.iter().filter(|d| d.h_max_degree() == 2) {
                    let s = shape_of(&d.h);
                    if !s.is_some_and(|s| FIVE_VERTEX_SHAPES.contains(&s)) {
                        return Verdict::Fails {
                            reason: format!("u = {} gives Delta(H) = 2 with H = {}", d.u, d.h),
                            census: Vec::new(),
                        };
                    }
                }
                let top = ds.iter().map(|d| d.h_max_degree()).max().unwrap_or(0);
                let census = vec![format!("max_h_degree_{top}")];
                if (3..=4).contains(&top) {
                    copy_verdict(g, &g9[..2], census, "{G1, G2}")
                } else {
                    Verdict::Holds {
                        census,
                        certificates: Vec::new(),
                    }
                }
            }
            _ => {
                if x != 3 || delta != 4 {
                    return Verdict::Outside;
                }
                let wanted = lemma_shapes(lemma_id);
                let hit = splits()
                    .into_iter()
                    .find(|d| shape_of(&d.h).is_some_and(|s| wanted.contains(&s)));
                match hit {
                    None => Verdict::Outside,
                    Some(d) => {
                        let census = vec![format!("h_shape_{}", shape_of(&d.h).expect("matched"))];
                        copy_verdict(g, &g9[..3], census, "{G1, G2, G3}")
                    }
                }
            }
        }
    })
}

// ---------------------------------------------------------------- bounds

/// `chi_k <= 1 + floor(Delta / (k + 1))` for triangle-free graphs up to
/// `n_max`, `k <= k_max`.
pub fn verify_lovasz_bound(universes: &Universes, n_max: usize, k_max: usize) -> Result<VerificationReport, VerifyError> {
    if n_max == 0 || n_max > MATERIALISE_UP_TO {
        return Err(VerifyError::BadParameter(format!("n_max must lie in 1..={MATERIALISE_UP_TO}")));
    }
    let started = Instant::now();
    let mut r = VerificationReport::new(
        "lovasz",
        &format!("chi_k <= 1 + floor(Delta/(k+1)) for every triangle-free graph with n <= {n_max} and k <= {k_max}"),
        describe(format!("1-{n_max}"), "tf", "none"),
    );
    for n in 1..=n_max {
        let u = universes.triangle_free(n)?;
        r.universe_size += u.len() as u64;
        for k in 0..=k_max {
            let chis: Vec<usize> = if k == 1 {
                universes.chi1(n, Filter::TriangleFree)?.to_vec()
            } else {
                u.graphs.par_iter().map(|g| chi(g, k)).collect()
            };
            for (i, g) in u.graphs.iter().enumerate() {
                let bound = lovasz_bound(g, k);
                if chis[i] > bound {
                    r.refute(u.g6[i].clone(), format!("chi_{k} = {} exceeds {bound}", chis[i]));
                } else if chis[i] == bound {
                    r.tally(format!("tight_k{k}_delta{}", g.max_degree()), 1);
                }
                if chis[i] > order_bound(g, k) {
                    r.refute(u.g6[i].clone(), format!("chi_{k} = {} exceeds ceil(n/(k+1))", chis[i]));
                }
            }
            if n == n_max {
                for (i, g) in u.graphs.iter().enumerate().take(CERTS_PER_ORDER) {
                    let p = find_mk_coloring(g, chis[i], k).expect("chi is attained");
                    r.certificates.push(Certificate::colouring(u.g6[i].clone(), &p, None));
                }
            }
        }
    }
    Ok(r.finish(started))
}

// ---------------------------------------------------------------- random laws

/// Seeded G(n, p) samples with `n` in `1..=n_max` and `p` in `[0.1, 0.7)`.
pub fn random_graphs(seed: u64, count: usize, n_max: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=n_max);
            let p: f64 = rng.gen_range(0.1..0.7);
            let mut edges = Vec::new();
            for v in 1..n {
                for u in 0..v {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges).expect("valid")
        })
        .collect()
}

/// Violations of the deletion and defect monotonicity laws on one graph.
pub fn monotonicity_violations(g: &Graph, k_max: usize) -> Vec<String> {
    let mut out = Vec::new();
    let chis: Vec<usize> = (0..=k_max + 1).map(|k| chi(g, k)).collect();
    for k in 0..=k_max {
        let c = chis[k];
        if chis[k + 1] > c {
            out.push(format!("chi_{} = {} > chi_{k} = {c}", k + 1, chis[k + 1]));
        }
        for v in 0..g.order() {
            let d = chi(&g.delete_vertex(v).expect("in range"), k);
            if d > c || d + 1 < c {
                out.push(format!("chi_{k}(G - {v}) = {d}, chi_{k}(G) = {c}"));
            }
        }
        for (a, b) in g.edges() {
            let d = chi(&g.delete_edge(a, b).expect("edge"), k);
            if d > c || d + 1 < c {
                out.push(format!("chi_{k}(G - {a}{b}) = {d}, chi_{k}(G) = {c}"));
            }
        }
    }
    out
}

/// Deletion and defect monotonicity of `chi_k`, `k <= 2`, on seeded random
/// graphs (not necessarily triangle-free).
pub fn verify_monotonicity(seed: u64, count: usize, n_max: usize) -> VerificationReport {
    let started = Instant::now();
    let mut r = VerificationReport::new(
        "monotonicity",
        "chi_k(G - x) <= chi_k(G) <= chi_k(G - x) + 1 for every vertex or edge x, and chi_(k+1) <= chi_k, for k <= 2",
        describe(format!("1-{n_max}"), "random", format!("seed {seed}, {count} samples")),
    );
    let gs = random_graphs(seed, count, n_max);
    let found: Vec<Vec<String>> = gs.par_iter().map(|g| monotonicity_violations(g, 2)).collect();
    r.universe_size = gs.len() as u64;
    for (g, bad) in gs.iter().zip(found) {
        r.tally(format!("order_{:02}", g.order()), 1);
        for why in bad {
            r.refute(g.to_string(), why);
        }
    }
    r.finish(started)
}
