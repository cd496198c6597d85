#![allow(dead_code)]

use proptest::prelude::*;

use cliqueminor::Graph;

/// Random graph on `lo..=hi` vertices with edge probability about one half.
pub fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

/// Cliques counted by testing every vertex subset.
pub fn subset_clique_count(g: &Graph) -> u64 {
    let n = g.vertex_count();
    (0u64..1 << n)
        .filter(|&m| (0..n).all(|u| m >> u & 1 == 0 || (u + 1..n).all(|v| m >> v & 1 == 0 || g.has_edge(u, v))))
        .count() as u64
}

/// Maximum matching size by dynamic programming over vertex subsets.
pub fn matching_dp(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut f = vec![0usize; 1 << n];
    for mask in 1usize..1 << n {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut best = f[rest];
        for u in 0..n {
            if rest >> u & 1 == 1 && g.has_edge(u, v) {
                best = best.max(1 + f[rest & !(1 << u)]);
            }
        }
        f[mask] = best;
    }
    f[(1 << n) - 1]
}
