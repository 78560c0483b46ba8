mod common;

use common::{labelled_graphs, naive_triangle_free};
use defcol_core::coloring::{chi, lovasz_bound, order_bound};
use defcol_core::decompose::Decomposition;
use defcol_core::graph::MAX_ORDER;
use defcol_core::verify::checks::{monotonicity_violations, random_graphs};
use defcol_core::verify::Universes;
use defcol_core::{parse_graph6, write_graph6, Graph, VertexSet};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for j in 1..n {
                for i in 0..j {
                    if it.next().unwrap() {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_round_trip(g in graph_strategy(MAX_ORDER)) {
        let s = write_graph6(&g);
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn triangle_check_matches_triples(g in graph_strategy(12)) {
        prop_assert_eq!(g.is_triangle_free(), naive_triangle_free(&g));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn chi_is_monotone(g in graph_strategy(9)) {
        prop_assert!(monotonicity_violations(&g, 2).is_empty());
    }

    #[test]
    fn disjoint_union_takes_the_max(g in graph_strategy(6), h in graph_strategy(6), k in 0usize..3) {
        let u = g.disjoint_union(&h).unwrap();
        prop_assert_eq!(chi(&u, k), chi(&g, k).max(chi(&h, k)));
    }

    #[test]
    fn bounds_hold(g in graph_strategy(10), k in 0usize..4) {
        let c = chi(&g, k);
        prop_assert!(c <= lovasz_bound(&g, k));
        prop_assert!(c <= order_bound(&g, k));
    }

    #[test]
    fn deletions_and_subgraphs(g in graph_strategy(12), pick in any::<u64>()) {
        let n = g.order();
        prop_assume!(n > 0);
        let v = (pick % n as u64) as usize;
        let d = g.delete_vertex(v).unwrap();
        prop_assert_eq!(d.order(), n - 1);
        prop_assert_eq!(d.edge_count(), g.edge_count() - g.deg(v));
        let s = VertexSet(pick).intersection(g.vertices());
        let sub = g.induced_subgraph(s).unwrap();
        prop_assert_eq!(sub.order(), s.len());
        let members: Vec<usize> = s.iter().collect();
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                prop_assert_eq!(sub.has_edge(i, j), g.has_edge(a, b));
            }
        }
    }

    #[test]
    fn decomposition_partitions_vertices(g in graph_strategy(12), pick in any::<usize>()) {
        prop_assume!(g.order() > 0);
        let u = pick % g.order();
        let d = Decomposition::around(&g, u).unwrap();
        prop_assert!(d.a.intersection(d.b).is_empty());
        prop_assert_eq!(d.a.len() + d.b.len() + 1, g.order());
        prop_assert_eq!(d.h.order(), d.b.len());
    }
}

/// Seeded sample of 10^4 random graphs: every deletion and defect law.
#[test]
fn monotonicity_on_seeded_sample() {
    let gs = random_graphs(99, 10_000, 10);
    assert_eq!(gs.len(), 10_000);
    for g in &gs {
        assert!(monotonicity_violations(g, 2).is_empty(), "{g}");
    }
}

#[test]
fn triangle_check_exhaustive_to_seven() {
    for n in 0..=7 {
        for g in labelled_graphs(n) {
            assert_eq!(g.is_triangle_free(), naive_triangle_free(&g), "{g}");
        }
    }
}

/// Triangle-free G, u of maximum degree, z in B with d_H(z) = |B| - 1 and
/// at most 2k neighbours of z in A: then chi_k(G) <= 2.
#[test]
fn colourability_lemma_on_small_universes() {
    let us = Universes::in_memory();
    let mut applied = 0;
    for n in 2..=9 {
        for g in &us.triangle_free(n).unwrap().graphs {
            for u in g.max_degree_vertices() {
                let d = Decomposition::around(g, u).unwrap();
                if d.b.is_empty() || d.h_max_degree() + 1 != d.b.len() {
                    continue;
                }
                for z in d.h_max_degree_vertices() {
                    let a_nbrs = g.nbrs(z).intersection(d.a).len();
                    for k in 0..=3 {
                        if a_nbrs <= 2 * k {
                            applied += 1;
                            assert!(chi(g, k) <= 2, "{g} u={u} z={z} k={k}");
                        }
                    }
                }
            }
        }
    }
    assert!(applied > 1000, "hypothesis rarely met: {applied}");
}
