//! Exhaustive enumeration of small graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertex limit for labeled enumeration (`2^21` graphs at the limit).
pub const LABELED_GUARD: usize = 7;

/// Vertex pairs `(u, v)`, `u < v`, in lexicographic order; bit `i` of a mask selects pair `i`.
pub fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Every labeled graph on `n` vertices, in increasing edge-mask order.
pub fn labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    Error::guard("vertex count for labeled enumeration", LABELED_GUARD, n)?;
    let pairs = vertex_pairs(n);
    Ok((0u64..1 << pairs.len()).map(move |mask| graph_from_mask(n, &pairs, mask)))
}

pub fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut rows = vec![0u64; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
    }
    Graph::from_rows(&rows).expect("enumerated graphs are narrow")
}

fn invariant(g: &Graph) -> (usize, Vec<usize>) {
    let mut deg: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    deg.sort_unstable();
    (g.edge_count(), deg)
}

/// Isomorphism test for narrow graphs by degree-respecting backtracking.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if invariant(g) != invariant(h) {
        return false;
    }
    let n = g.vertex_count();
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    fn go(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: &mut u64) -> bool {
        let n = g.vertex_count();
        if v == n {
            return true;
        }
        for w in 0..n {
            if *used >> w & 1 == 1 || g.degree(v) != h.degree(w) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w)) {
                map[v] = w;
                *used |= 1 << w;
                if go(g, h, v + 1, map, used) {
                    return true;
                }
                *used &= !(1 << w);
            }
        }
        false
    }
    go(g, h, 0, &mut map, &mut used)
}

/// One representative per isomorphism class of connected graphs on `n` vertices,
/// each the first of its class in labeled order.
pub fn connected_graphs_up_to_isomorphism(n: usize) -> Result<Vec<Graph>> {
    let mut reps: Vec<(Graph, (usize, Vec<usize>))> = Vec::new();
    for g in labeled_graphs(n)? {
        if n == 0 || !g.is_connected() {
            continue;
        }
        let inv = invariant(&g);
        if !reps.iter().any(|(r, ri)| *ri == inv && are_isomorphic(r, &g)) {
            reps.push((g, inv));
        }
    }
    Ok(reps.into_iter().map(|(g, _)| g).collect())
}
