//! One line per acceptance criterion. Run with
//! `cargo test -p defcol-core --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::panic;
use std::process::ExitCode;
use std::time::Instant;

use common::{brute_chi, brute_key, labelled_graphs, naive_triangle_free, permutations};
use defcol_core::catalog::catalog_graph;
use defcol_core::coloring::chi;
use defcol_core::enumerate::{brute_force_enumerate, merge_shards, EnumerationTask, Filter, Shard};
use defcol_core::iso::canonical_graph;
use defcol_core::verify::checks::{monotonicity_violations, random_graphs};
use defcol_core::verify::{self, run_check, CheckOptions, Universes, VerificationReport};
use defcol_core::{defective_chromatic_number, is_mk_critical, is_mk_edge_critical, Graph};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&Universes) -> Outcome);

trait Str<T> {
    fn s(self) -> Result<T, String>;
}

impl<T, E: std::fmt::Display> Str<T> for Result<T, E> {
    fn s(self) -> Result<T, String> {
        self.map_err(|e| e.to_string())
    }
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn verified(r: &VerificationReport) -> Result<(), String> {
    ensure(
        r.is_verified(),
        format!("{} refuted: {:?}", r.check_id, r.counterexamples.iter().take(3).collect::<Vec<_>>()),
    )?;
    let bad = r.revalidate();
    ensure(bad.is_empty(), format!("{}: certificates fail to revalidate: {bad:?}", r.check_id))
}

fn key_of(name: &str) -> Graph {
    canonical_graph(&catalog_graph(name).unwrap()).unwrap()
}

fn c1(u: &Universes) -> Outcome {
    let r = verify::verify_small_orders_colorable(u).s()?;
    verified(&r)?;
    let mut count = 0;
    for n in 1..=8 {
        for g in &u.triangle_free(n).s()?.graphs {
            ensure(chi(g, 1) <= 2, format!("{g} has chi_1 > 2"))?;
            count += 1;
        }
    }
    Ok(format!("{count} triangle-free classes with n <= 8, all chi_1 <= 2"))
}

fn c2(u: &Universes) -> Outcome {
    let r = verify::verify_order9_classification(u).s()?;
    verified(&r)?;
    ensure(r.census["class_count"] == 4, "class count is not 4")?;
    let g9 = u.triangle_free(9).s()?;
    let ext: BTreeSet<&Graph> = g9.graphs.iter().filter(|g| chi(g, 1) == 3).collect();
    let want: BTreeSet<Graph> = ["G1", "G2", "G3", "G4"].iter().map(|n| key_of(n)).collect();
    ensure(ext.len() == 4, format!("{} classes with chi_1 = 3", ext.len()))?;
    ensure(ext.iter().all(|g| want.contains(*g)), "key set differs from catalog G1..G4")?;
    ensure(ext.iter().all(|g| is_mk_critical(g, 3, 1).holds), "a class is not (3,1)-critical")?;
    let edge: BTreeSet<Graph> = ext.iter().filter(|g| is_mk_edge_critical(g, 3, 1).holds).map(|g| (*g).clone()).collect();
    let want_edge: BTreeSet<Graph> = ["G1", "G4"].iter().map(|n| key_of(n)).collect();
    ensure(edge == want_edge, "edge-critical subset is not {G1, G4}")?;
    verified(&verify::run_check("catalog", u, &CheckOptions::default()).s()?)?;
    Ok(format!("4 of {} order-9 classes have chi_1 = 3, equal to G1..G4; all critical; edge-critical = {{G1, G4}}", g9.len()))
}

fn c3(u: &Universes) -> Outcome {
    let r = verify::verify_order10_characterization(u).s()?;
    verified(&r)?;
    Ok(format!(
        "{} order-10 classes with chi_1 = 3 all matched (G5 branch {}), 0 counterexamples",
        r.census.get("chi1_eq_3").copied().unwrap_or(0),
        r.census.get("branch_G5").copied().unwrap_or(0)
    ))
}

fn critical_sets(u: &Universes) -> Result<(BTreeSet<Graph>, BTreeSet<Graph>), String> {
    let g10 = u.triangle_free(10).s()?;
    let mut crit = BTreeSet::new();
    let mut edge = BTreeSet::new();
    for g in &g10.graphs {
        if chi(g, 1) != 3 {
            continue;
        }
        if is_mk_critical(g, 3, 1).holds {
            crit.insert(g.clone());
        }
        if is_mk_edge_critical(g, 3, 1).holds {
            edge.insert(g.clone());
        }
    }
    Ok((crit, edge))
}

fn c4(u: &Universes) -> Outcome {
    let (crit, _) = critical_sets(u)?;
    ensure(crit.len() == 1, format!("{} critical classes", crit.len()))?;
    ensure(crit.contains(&key_of("G5")), "the critical class is not G5")?;
    verified(&verify::verify_critical_and_edge_critical_order10(u).s()?)?;
    Ok("exactly one (3,1)-critical triangle-free order-10 class, isomorphic to G5".into())
}

fn c5(u: &Universes) -> Outcome {
    let (_, edge) = critical_sets(u)?;
    let want: BTreeSet<Graph> = ["G5", "G1uK1", "G4uK1"].iter().map(|n| key_of(n)).collect();
    ensure(edge == want, format!("edge-critical set has {} classes, differs from expected", edge.len()))?;
    Ok("(3,1)-edge-critical order-10 set is exactly {G5, G1uK1, G4uK1}".into())
}

fn c6(u: &Universes) -> Outcome {
    let mut sizes = Vec::new();
    for id in verify::LEMMA_IDS {
        let r = verify::verify_structural_lemma(u, id).s()?;
        verified(&r)?;
        let m = r.census.get("hypothesis_members").copied().unwrap_or(0);
        ensure(m > 0, format!("lemma{id}: empty hypothesis set"))?;
        sizes.push(format!("{id}:{m}"));
    }
    Ok(format!("10 lemma checks verified; hypothesis sizes {}", sizes.join(" ")))
}

fn c7(u: &Universes) -> Outcome {
    let r = verify::verify_lovasz_bound(u, 10, 2).s()?;
    verified(&r)?;
    ensure(r.census.get("tight_k1_delta4").copied().unwrap_or(0) > 0, "no tight k=1, Delta=4 witness")?;
    Ok(format!("bound holds on {} classes (n <= 10) for k = 0, 1, 2", r.universe_size))
}

fn c8(_: &Universes) -> Outcome {
    let mut chi_checks = 0;
    for n in 0..=6 {
        for g in labelled_graphs(n) {
            for k in 0..=2 {
                let r = defective_chromatic_number(&g, k);
                ensure(r.chi == brute_chi(&g, k) && r.witness.is_valid_for(&g), format!("chi mismatch on {g}, k={k}"))?;
                chi_checks += 1;
            }
        }
    }
    let mut graphs = 0;
    for n in 0..=6 {
        let perms = permutations(n);
        let mut pairs = std::collections::HashMap::new();
        let mut rev = std::collections::HashMap::new();
        for g in labelled_graphs(n) {
            let c = canonical_graph(&g).unwrap();
            let b = brute_key(&g, &perms);
            ensure(pairs.entry(c.clone()).or_insert_with(|| b.clone()) == &b, format!("key split on {g}"))?;
            ensure(rev.entry(b).or_insert_with(|| c.clone()) == &c, format!("key merge on {g}"))?;
            graphs += 1;
        }
    }
    let mut counts = Vec::new();
    for n in 1..=7 {
        let got = EnumerationTask::triangle_free(n).unwrap().collect().len();
        let want = brute_force_enumerate(n, naive_triangle_free).unwrap().len();
        ensure(got == want, format!("n={n}: {got} vs {want}"))?;
        let all = EnumerationTask::new(n, Filter::All).unwrap().collect().len();
        let all_want = brute_force_enumerate(n, |_| true).unwrap().len();
        ensure(all == all_want, format!("unfiltered n={n}: {all} vs {all_want}"))?;
        counts.push(got.to_string());
    }
    ensure(counts[4] == "14", "n=5 does not give 14 classes")?;
    let sample = random_graphs(verify::checks::DEFAULT_SEED, 10_000, 10);
    let violations: usize = sample.iter().map(|g| monotonicity_violations(g, 2).len()).sum();
    ensure(violations == 0, format!("{violations} monotonicity violations"))?;
    Ok(format!(
        "{chi_checks} chi_k comparisons, {graphs} labelled graphs keyed, tf counts {}, 10000 random graphs with 0 violations",
        counts.join(",")
    ))
}

fn c9(u: &Universes) -> Outcome {
    let r = verify::verify_f32_lower_bound(u, true).s()?;
    verified(&r)?;
    ensure(r.census.get("order_12").copied() == Some(1_262_180), "order-12 count unexpected")?;
    Ok(format!("all {} triangle-free classes with n <= 12 are (2,2)-colourable", r.universe_size))
}

fn run_all(u: &Universes) -> Result<Vec<String>, String> {
    let opts = CheckOptions::default();
    verify::available_checks()
        .iter()
        .map(|id| run_check(id, u, &opts).map(|r| r.without_timing().to_json()).map_err(|e| e.to_string()))
        .collect()
}

fn c10(_: &Universes) -> Outcome {
    let dir = tempfile::tempdir().s()?;
    let cold = run_all(&Universes::with_cache_dir(dir.path()))?;
    let warm = run_all(&Universes::with_cache_dir(dir.path()))?;
    let fresh = run_all(&Universes::in_memory())?;
    ensure(cold == warm && warm == fresh, "verify all reports differ between runs")?;
    let whole: Vec<String> = {
        let mut v: Vec<String> = EnumerationTask::triangle_free(10).unwrap().collect().iter().map(|g| g.to_string()).collect();
        v.sort();
        v
    };
    let parts = (0..4)
        .map(|i| EnumerationTask::triangle_free(10).unwrap().with_shard(Shard::new(i, 4).unwrap()).collect())
        .collect();
    let mut merged: Vec<String> = merge_shards(parts).s()?.iter().map(|g| g.to_string()).collect();
    merged.sort();
    ensure(merged == whole, "4-way sharded n=10 differs from unsharded")?;
    Ok(format!("3 verify-all runs ({} reports) identical modulo timing; sharded n=10 equals unsharded", cold.len()))
}

fn main() -> ExitCode {
    let universes = Universes::in_memory();
    let criteria: [Criterion; 10] = [
        ("small orders (2,1)-colourable", c1),
        ("order-9 classification", c2),
        ("order-10 characterisation", c3),
        ("order-10 critical set", c4),
        ("order-10 edge-critical set", c5),
        ("structural lemmas", c6),
        ("degree bound", c7),
        ("oracle suites", c8),
        ("(2,2)-colourable to order 12", c9),
        ("determinism", c10),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = panic::catch_unwind(panic::AssertUnwindSafe(|| f(&universes)))
            .unwrap_or_else(|p| Err(p.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into())));
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
