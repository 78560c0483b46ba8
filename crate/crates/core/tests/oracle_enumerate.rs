mod common;

use std::collections::BTreeSet;

use common::{brute_key, labelled_graphs, naive_triangle_free, permutations};
use defcol_core::enumerate::{brute_force_enumerate, merge_shards, EnumerationTask, Filter, Shard};
use defcol_core::iso::canonical_graph;

fn classes(n: usize, filter: Filter) -> BTreeSet<String> {
    EnumerationTask::new(n, filter).unwrap().collect().iter().map(|g| g.to_string()).collect()
}

/// Class count from the permutation oracle, no canonical labelling involved.
fn oracle_count(n: usize, triangle_free: bool) -> usize {
    let perms = permutations(n);
    labelled_graphs(n)
        .filter(|g| !triangle_free || naive_triangle_free(g))
        .map(|g| brute_key(&g, &perms))
        .collect::<BTreeSet<_>>()
        .len()
}

#[test]
fn counts_match_permutation_oracle() {
    for n in 1..=6 {
        assert_eq!(classes(n, Filter::TriangleFree).len(), oracle_count(n, true), "tf n={n}");
        assert_eq!(classes(n, Filter::All).len(), oracle_count(n, false), "all n={n}");
    }
}

#[test]
fn sets_match_labelled_brute_force_to_seven() {
    for n in 1..=7 {
        let tf: BTreeSet<String> = brute_force_enumerate(n, naive_triangle_free)
            .unwrap()
            .iter()
            .map(|g| g.to_string())
            .collect();
        assert_eq!(classes(n, Filter::TriangleFree), tf, "tf n={n}");
        let all: BTreeSet<String> = brute_force_enumerate(n, |_| true).unwrap().iter().map(|g| g.to_string()).collect();
        assert_eq!(classes(n, Filter::All), all, "all n={n}");
    }
}

#[test]
fn outputs_are_canonical_and_distinct() {
    let gs = EnumerationTask::triangle_free(9).unwrap().collect();
    assert_eq!(gs.len(), 1897);
    let set: BTreeSet<_> = gs.iter().collect();
    assert_eq!(set.len(), gs.len());
    for g in gs.iter().step_by(17) {
        assert_eq!(&canonical_graph(g).unwrap(), g);
        assert!(naive_triangle_free(g));
    }
}

#[test]
fn triangle_free_counts_to_ten() {
    let want = [1, 2, 3, 7, 14, 38, 107, 410, 1897, 12172];
    for (i, &c) in want.iter().enumerate() {
        assert_eq!(classes(i + 1, Filter::TriangleFree).len(), c, "n={}", i + 1);
    }
}

#[test]
fn unfiltered_counts_to_eight() {
    let want = [1, 2, 4, 11, 34, 156, 1044, 12346];
    for (i, &c) in want.iter().enumerate() {
        assert_eq!(classes(i + 1, Filter::All).len(), c, "n={}", i + 1);
    }
}

#[test]
fn shards_partition_the_output() {
    for (n, count) in [(8, 3), (10, 4)] {
        let whole = classes(n, Filter::TriangleFree);
        let parts: Vec<_> = (0..count)
            .map(|i| {
                EnumerationTask::triangle_free(n)
                    .unwrap()
                    .with_shard(Shard::new(i, count).unwrap())
                    .collect()
            })
            .collect();
        let merged = merge_shards(parts).unwrap();
        let merged: BTreeSet<String> = merged.iter().map(|g| g.to_string()).collect();
        assert_eq!(merged, whole, "n={n}");
    }
}

#[test]
fn generation_order_is_thread_independent() {
    let task = EnumerationTask::triangle_free(9).unwrap();
    let a = task.collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(3).build().unwrap();
    let b = pool.install(|| task.collect());
    assert_eq!(a, b);
}
