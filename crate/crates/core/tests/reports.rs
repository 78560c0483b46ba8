use defcol_core::catalog::{self, catalog_entry, entries, validate_entries};
use defcol_core::iso::canonical_graph;
use defcol_core::verify::{self, run_check, CheckOptions, Outcome, Universes, VerificationReport};

fn quick() -> CheckOptions {
    CheckOptions {
        random_graphs: 500,
        ..CheckOptions::default()
    }
}

#[test]
fn small_orders_verified_and_sized() {
    let u = Universes::in_memory();
    let r = verify::verify_small_orders_colorable(&u).unwrap();
    assert_eq!(r.outcome, Outcome::Verified);
    assert_eq!(r.census["order_05"], 14);
    assert_eq!(r.universe_size, 1 + 2 + 3 + 7 + 14 + 38 + 107 + 410);
    assert!(r.revalidate().is_empty());
}

#[test]
fn proper_two_colouring_control_is_refuted_by_c5() {
    let u = Universes::in_memory();
    let r = verify::verify_colourable(&u, 1..=8, 2, 0).unwrap();
    assert_eq!(r.outcome, Outcome::Refuted);
    let c5 = canonical_graph(&catalog::catalog_graph("C5").unwrap()).unwrap().to_string();
    assert!(r.counterexamples.iter().any(|c| c.g6 == c5));
}

#[test]
fn order9_defect1_control_finds_exactly_the_four() {
    let u = Universes::in_memory();
    let r = verify::verify_colourable(&u, 9..=9, 2, 1).unwrap();
    assert_eq!(r.outcome, Outcome::Refuted);
    let mut got: Vec<String> = r.counterexamples.iter().map(|c| c.g6.clone()).collect();
    let mut want: Vec<String> = catalog::ORDER9_NAMES
        .iter()
        .map(|n| canonical_graph(&catalog::catalog_graph(n).unwrap()).unwrap().to_string())
        .collect();
    got.sort();
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn every_certificate_revalidates() {
    let u = Universes::in_memory();
    for id in verify::available_checks() {
        let r = run_check(id, &u, &quick()).unwrap();
        assert!(r.is_verified(), "{id}: {:?}", r.counterexamples);
        assert!(r.revalidate().is_empty(), "{id}: {:?}", r.revalidate());
        assert_eq!(r.outcome == Outcome::Verified, r.counterexamples.is_empty());
    }
}

#[test]
fn tampered_certificates_fail() {
    let u = Universes::in_memory();
    let mut r = run_check("order10", &u, &quick()).unwrap();
    match &mut r.certificates[0] {
        verify::Certificate::DeletedCopy { map, .. } | verify::Certificate::Isomorphism { map, .. } => map.swap(0, 1),
        verify::Certificate::Colouring { .. } => unreachable!(),
    }
    // a transposition may happen to be an automorphism; try two more
    let mut bad = !r.revalidate().is_empty();
    for (a, b) in [(0, 2), (1, 3)] {
        if bad {
            break;
        }
        if let verify::Certificate::DeletedCopy { map, .. } | verify::Certificate::Isomorphism { map, .. } =
            &mut r.certificates[0]
        {
            map.swap(a, b);
        }
        bad = !r.revalidate().is_empty();
    }
    assert!(bad);
}

#[test]
fn corrupted_g5_is_flagged() {
    let u = Universes::in_memory();
    let mut es = entries();
    let g5 = es.iter_mut().find(|e| e.name == "G5").unwrap();
    let (a, b) = g5.graph.edges().next().unwrap();
    g5.graph = g5.graph.delete_edge(a, b).unwrap();
    let r = validate_entries(&es, &u).unwrap();
    assert_eq!(r.outcome, Outcome::Refuted);
    assert!(r.counterexamples.iter().all(|c| c.reason.starts_with("G5")), "{:?}", r.counterexamples);
}

#[test]
fn swapped_names_are_flagged() {
    let u = Universes::in_memory();
    let mut es = entries();
    let g2 = catalog_entry("G2").unwrap().graph;
    es.iter_mut().find(|e| e.name == "G3").unwrap().graph = g2;
    let r = validate_entries(&es, &u).unwrap();
    assert!(r.counterexamples.iter().any(|c| c.reason.contains("G3")));
    assert!(r.counterexamples.iter().any(|c| c.reason.contains("missing from the catalog")));
}

#[test]
fn g2_is_not_edge_critical() {
    let e = catalog_entry("G2").unwrap();
    assert!(!defcol_core::is_mk_edge_critical(&e.graph, 3, 1).holds);
}

#[test]
fn warm_and_cold_cache_agree() {
    let dir = tempfile::tempdir().unwrap();
    let strip = |rs: Vec<VerificationReport>| -> Vec<String> { rs.iter().map(|r| r.without_timing().to_json()).collect() };
    let ids = ["order9", "order10", "lemma7", "f32"];
    let cold = Universes::with_cache_dir(dir.path());
    let a = strip(ids.iter().map(|i| run_check(i, &cold, &quick()).unwrap()).collect());
    assert!(dir.path().join("tf-10.g6").exists());
    let warm = Universes::with_cache_dir(dir.path());
    let b = strip(ids.iter().map(|i| run_check(i, &warm, &quick()).unwrap()).collect());
    assert_eq!(a, b);
}

#[test]
fn census_records_lemma7_branches() {
    let u = Universes::in_memory();
    let r = run_check("lemma7", &u, &quick()).unwrap();
    assert_eq!(r.census.get("branch_G5"), Some(&1));
    let branches: u64 = r.census.iter().filter(|(k, _)| k.starts_with("branch_")).map(|(_, v)| v).sum();
    assert_eq!(branches, r.census["hypothesis_members"]);
}

#[test]
fn json_shape_matches_contract() {
    let u = Universes::in_memory();
    let r = run_check("order9", &u, &quick()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    for key in ["check_id", "universe", "universe_size", "outcome", "counterexamples", "certificates", "wall_time_ms"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["universe"]["n"], "9");
    assert_eq!(v["outcome"], "verified");
    let back: VerificationReport = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
}
