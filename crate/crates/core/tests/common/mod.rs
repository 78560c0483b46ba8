//! Slow, obviously-correct reference implementations.
#![allow(dead_code)]

use defcol_core::Graph;

/// Every labelled graph on `n` vertices.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// Triangle test by looking at every triple.
pub fn naive_triangle_free(g: &Graph) -> bool {
    let n = g.order();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether the vertices with `class[v] == c` induce max degree <= k.
fn class_ok(g: &Graph, class: &[usize], c: usize, k: usize) -> bool {
    let n = g.order();
    (0..n).filter(|&v| class[v] == c).all(|v| {
        (0..n).filter(|&w| w != v && class[w] == c && g.has_edge(v, w)).count() <= k
    })
}

/// chi_k by trying every set partition (restricted growth strings).
pub fn brute_chi(g: &Graph, k: usize) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let mut best = n;
    let mut rgs = vec![0usize; n];
    loop {
        let classes = rgs.iter().max().unwrap() + 1;
        if classes < best && (0..classes).all(|c| class_ok(g, &rgs, c, k)) {
            best = classes;
        }
        // next restricted growth string
        let mut i = n - 1;
        loop {
            if i == 0 {
                return best;
            }
            let prefix_max = rgs[..i].iter().max().copied().unwrap_or(0);
            if rgs[i] <= prefix_max {
                rgs[i] += 1;
                for x in rgs.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        heap(k - 1, a, out);
        for i in 0..k - 1 {
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
            heap(k - 1, a, out);
        }
    }
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    heap(n, &mut a, &mut out);
    out
}

/// Adjacency rows after sending `v` to `p[v]`, computed edge by edge.
pub fn relabel_rows(g: &Graph, p: &[usize]) -> Vec<u64> {
    let mut rows = vec![0u64; g.order()];
    for a in 0..g.order() {
        for b in 0..g.order() {
            if g.has_edge(a, b) {
                rows[p[a]] |= 1 << p[b];
            }
        }
    }
    rows
}

/// Least relabelled adjacency over all permutations; equal iff isomorphic.
pub fn brute_key(g: &Graph, perms: &[Vec<usize>]) -> Vec<u64> {
    perms.iter().map(|p| relabel_rows(g, p)).min().unwrap()
}

/// `orbit[v]` = least vertex in the automorphism orbit of `v`.
pub fn brute_orbits(g: &Graph, perms: &[Vec<usize>]) -> Vec<usize> {
    let n = g.order();
    let own = relabel_rows(g, &(0..n).collect::<Vec<_>>());
    let autos: Vec<&Vec<usize>> = perms.iter().filter(|p| relabel_rows(g, p) == own).collect();
    (0..n).map(|v| autos.iter().map(|p| p[v]).min().unwrap()).collect()
}
