//! Exact clique censuses by the peeling process.
//!
//! The census repeatedly takes a minimum-degree vertex of the remaining
//! graph (lowest index on ties), counts the cliques it starts by recursing
//! into its remaining neighborhood, then deletes it. Every clique is counted
//! exactly once, by its earliest-peeled vertex. The empty clique is counted.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, WideSet};
use crate::scalar::CliqueCount;

/// Vertex limit for [`count_cliques_naive`].
pub const NAIVE_GUARD: usize = 20;

/// Exact clique statistics of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCensus {
    /// Number of cliques, the empty clique included.
    pub total: BigUint,
    /// Clique number.
    pub omega: usize,
    /// `containing[v]` is the number of cliques containing `v`.
    pub containing: Vec<BigUint>,
    /// `fractions[v] = containing[v] / total`.
    pub fractions: Vec<BigRational>,
}

impl CliqueCensus {
    pub fn fraction(&self, v: usize) -> &BigRational {
        &self.fractions[v]
    }
}

/// Pick the minimum-degree vertex of `G[cand]`, lowest index on ties.
fn min_degree_vertex<S: VertexSet>(rows: &[S], cand: &S) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None;
    for v in cand.to_vec() {
        let d = rows[v].intersect(cand).len();
        if best.map_or(true, |(bd, _)| d < bd) {
            best = Some((d, v));
        }
    }
    best.map(|(_, v)| v)
}

fn peel_count<S: VertexSet, C: CliqueCount>(
    rows: &[S],
    mut cand: S,
    depth: usize,
    omega: &mut usize,
) -> C {
    *omega = (*omega).max(depth);
    let mut total = C::one();
    while let Some(v) = min_degree_vertex(rows, &cand) {
        let inner = rows[v].intersect(&cand);
        total += &peel_count::<S, C>(rows, inner, depth + 1, omega);
        cand.remove(v);
    }
    total
}

fn rows_of<S: VertexSet>(g: &Graph) -> Vec<S> {
    (0..g.vertex_count()).map(|v| g.neighborhood(v)).collect()
}

/// Count cliques (empty included) and report the clique number, using the
/// counter type `C`. Fails if `C` cannot hold `2^n`.
pub fn count_cliques_with<C: CliqueCount>(g: &Graph) -> Result<(C, usize)> {
    Error::guard("vertex count for counter type", C::MAX_VERTICES, g.vertex_count())?;
    let mut omega = 0;
    let n = g.vertex_count();
    let count = if g.is_narrow() {
        peel_count::<u64, C>(&rows_of(g), u64::full(n), 0, &mut omega)
    } else {
        peel_count::<WideSet, C>(&rows_of(g), WideSet::full(n), 0, &mut omega)
    };
    Ok((count, omega))
}

fn count_subset(g: &Graph, set: &[usize]) -> BigUint {
    let n = g.vertex_count();
    let mut omega = 0;
    if g.is_narrow() {
        let mut cand = 0u64;
        for &v in set {
            cand.insert(v);
        }
        let rows = rows_of::<u64>(g);
        if n <= u64::MAX_VERTICES {
            BigUint::from(peel_count::<u64, u64>(&rows, cand, 0, &mut omega))
        } else {
            BigUint::from(peel_count::<u64, u128>(&rows, cand, 0, &mut omega))
        }
    } else {
        let mut cand = WideSet::empty(n);
        for &v in set {
            cand.insert(v);
        }
        if n <= u128::MAX_VERTICES {
            BigUint::from(peel_count::<WideSet, u128>(&rows_of(g), cand, 0, &mut omega))
        } else {
            peel_count::<WideSet, BigUint>(&rows_of(g), cand, 0, &mut omega)
        }
    }
}

/// Total number of cliques of `g`, empty clique included.
pub fn count_cliques(g: &Graph) -> BigUint {
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    count_subset(g, &all)
}

/// Full census: total, clique number, and exact per-vertex clique fractions.
pub fn clique_census(g: &Graph) -> CliqueCensus {
    let n = g.vertex_count();
    let total = count_cliques(g);
    let omega = clique_number(g);
    let containing: Vec<BigUint> = (0..n)
        .map(|v| count_subset(g, &g.neighbors(v).collect::<Vec<_>>()))
        .collect();
    let denom = BigInt::from(total.clone());
    let fractions = containing
        .iter()
        .map(|c| BigRational::new(BigInt::from(c.clone()), denom.clone()))
        .collect();
    CliqueCensus {
        total,
        omega,
        containing,
        fractions,
    }
}

/// Brute-force clique count over all `2^n` vertex subsets (test oracle).
pub fn count_cliques_naive(g: &Graph) -> Result<BigUint> {
    let n = g.vertex_count();
    Error::guard("vertex count for naive clique counting", NAIVE_GUARD, n)?;
    let rows: Vec<u64> = (0..n).map(|v| g.row(v)).collect();
    let mut count = 0u64;
    for mask in 0u64..1 << n {
        let clique = crate::graph::bits(mask).all(|v| mask & !(1 << v) & !rows[v] == 0);
        if clique {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

/// Greedy coloring of `cand` in index order, as `(vertex, color)` with colors from 1.
fn color_classes<S: VertexSet>(rows: &[S], cand: &S) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(cand.len());
    let mut uncolored = cand.clone();
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut open = uncolored.clone();
        while let Some(v) = open.first() {
            open.remove(v);
            open = open.difference(&rows[v]);
            uncolored.remove(v);
            out.push((v, color));
        }
    }
    out
}

/// Branch and bound with the coloring bound: a set needing `c` colors holds no clique above `c`.
fn max_clique_search<S: VertexSet>(rows: &[S], current: &mut Vec<usize>, mut cand: S, best: &mut Vec<usize>) {
    if current.len() > best.len() {
        best.clone_from(current);
    }
    for (v, color) in color_classes(rows, &cand).into_iter().rev() {
        if current.len() + color <= best.len() {
            return;
        }
        current.push(v);
        max_clique_search(rows, current, rows[v].intersect(&cand), best);
        current.pop();
        cand.remove(v);
    }
}

/// A maximum clique, as a sorted vertex list.
pub fn maximum_clique(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut best = Vec::new();
    if g.is_narrow() {
        max_clique_search(&rows_of::<u64>(g), &mut Vec::new(), u64::full(n), &mut best);
    } else {
        max_clique_search(&rows_of::<WideSet>(g), &mut Vec::new(), WideSet::full(n), &mut best);
    }
    best.sort_unstable();
    best
}

pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

/// Why a vertex left the remaining graph during a peeling replay.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PeelReason {
    MinDegreeDelete,
    SelectedIntoClique,
    NonNeighborDelete,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeelStep {
    pub vertex: usize,
    /// Size of the remaining graph just before this step.
    pub remaining: usize,
    pub reason: PeelReason,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeelingTrace {
    pub steps: Vec<PeelStep>,
    /// Clique vertices in the order the process selects them.
    pub clique_order: Vec<usize>,
}

impl PeelingTrace {
    /// Remaining-graph sizes `n_1, n_2, ...` at each selection.
    pub fn selection_sizes(&self) -> Vec<usize> {
        self.steps
            .iter()
            .filter(|s| s.reason == PeelReason::SelectedIntoClique)
            .map(|s| s.remaining)
            .collect()
    }
}

/// Replay the peeling process along one clique.
///
/// Minimum-degree vertices outside the clique are deleted (lowest index on
/// ties, the same rule the census uses); when the minimum-degree vertex is
/// in the clique it is selected, and it leaves together with its
/// non-neighbors. This is exactly the path by which [`count_cliques`]
/// reaches `target`.
pub fn peeling_trace(g: &Graph, target: &[usize]) -> Result<PeelingTrace> {
    let n = g.vertex_count();
    Error::guard("vertex count for peeling trace", 64, n)?;
    if target.iter().any(|&v| v >= n) {
        return Err(Error::input("target vertex out of range"));
    }
    if !g.is_clique(target) {
        return Err(Error::precondition("target set is not a clique"));
    }
    let rows = rows_of::<u64>(g);
    let mut wanted = 0u64;
    for &v in target {
        wanted.insert(v);
    }
    let mut cand = u64::full(n);
    let mut steps = Vec::new();
    let mut order = Vec::new();
    while let Some(v) = min_degree_vertex(&rows, &cand) {
        let remaining = cand.len();
        if wanted.contains(v) {
            steps.push(PeelStep {
                vertex: v,
                remaining,
                reason: PeelReason::SelectedIntoClique,
            });
            order.push(v);
            wanted.remove(v);
            let dropped = cand & !rows[v] & !(1 << v);
            for w in crate::graph::bits(dropped) {
                steps.push(PeelStep {
                    vertex: w,
                    remaining,
                    reason: PeelReason::NonNeighborDelete,
                });
            }
            cand &= rows[v];
        } else {
            steps.push(PeelStep {
                vertex: v,
                remaining,
                reason: PeelReason::MinDegreeDelete,
            });
            cand.remove(v);
        }
        if wanted == 0 && !target.is_empty() {
            break;
        }
    }
    Ok(PeelingTrace {
        steps,
        clique_order: order,
    })
}

/// `sum_v containing[v]`, which equals the summed size of all cliques.
pub fn total_clique_size(census: &CliqueCensus) -> BigUint {
    census.containing.iter().fold(BigUint::zero(), |acc, c| acc + c)
}

/// Whether `alpha_v = 1/2` exactly.
pub fn is_half(f: &BigRational) -> bool {
    f * BigInt::from(2) == BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ShapeParams;

    fn ratio(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn complete_graphs() {
        for n in 0..8 {
            let c = clique_census(&Graph::complete(n));
            assert_eq!(c.total, BigUint::from(1u64 << n));
            assert_eq!(c.omega, n);
            assert!(c.fractions.iter().all(|f| *f == ratio(1, 2)));
        }
    }

    #[test]
    fn shapes_count_three_to_a_two_to_b() {
        for a in 0..5 {
            for b in 0..5 {
                let g = ShapeParams::new(a, b).to_graph();
                let expected = BigUint::from(3u32).pow(a as u32) * BigUint::from(2u32).pow(b as u32);
                assert_eq!(count_cliques(&g), expected, "K({a},{b})");
            }
        }
    }

    #[test]
    fn c5_census() {
        let c = clique_census(&Graph::cycle(5));
        assert_eq!(c.total, BigUint::from(11u32));
        assert_eq!(c.omega, 2);
        assert!(c.fractions.iter().all(|f| *f == ratio(3, 11)));
    }

    #[test]
    fn naive_counts() {
        assert_eq!(count_cliques_naive(&Graph::empty(0)).unwrap(), BigUint::from(1u32));
        assert_eq!(count_cliques_naive(&Graph::complete(3)).unwrap(), BigUint::from(8u32));
        assert_eq!(count_cliques_naive(&Graph::cycle(4)).unwrap(), BigUint::from(9u32));
        assert!(matches!(
            count_cliques_naive(&Graph::empty(21)),
            Err(Error::Guard { .. })
        ));
    }

    #[test]
    fn wide_graph_census() {
        // 71 vertices: K(4,3) (648 cliques) next to C60 (121 cliques).
        let g = Graph::disjoint_union(&[ShapeParams::new(4, 3).to_graph(), Graph::cycle(60)]);
        assert!(!g.is_narrow());
        let expected = BigUint::from(648u32 + 121 - 1);
        assert_eq!(count_cliques(&g), expected);
        assert_eq!(clique_number(&g), 7);
        let (c, omega) = count_cliques_with::<BigUint>(&g).unwrap();
        assert_eq!(c, expected);
        assert_eq!(omega, 7);
        let (c, _) = count_cliques_with::<u128>(&g).unwrap();
        assert_eq!(BigUint::from(c), expected);
        assert!(count_cliques_with::<u64>(&g).is_err());
        let census = clique_census(&g);
        assert_eq!(census.containing[70], BigUint::from(3u8));
    }

    #[test]
    fn matching_complement_fractions_are_one_third() {
        for a in 1..=6 {
            let c = clique_census(&ShapeParams::new(a, 0).to_graph());
            assert!(c.fractions.iter().all(|f| *f == ratio(1, 3)));
        }
    }

    #[test]
    fn trace_on_k4() {
        let t = peeling_trace(&Graph::complete(4), &[0, 1, 2, 3]).unwrap();
        assert_eq!(t.steps.len(), 4);
        assert_eq!(t.selection_sizes(), vec![4, 3, 2, 1]);
        assert_eq!(t.clique_order, vec![0, 1, 2, 3]);
    }

    #[test]
    fn trace_on_c4_edge() {
        let c4 = Graph::cycle(4);
        let t = peeling_trace(&c4, &[0, 1]).unwrap();
        let expect = vec![
            PeelStep { vertex: 0, remaining: 4, reason: PeelReason::SelectedIntoClique },
            PeelStep { vertex: 2, remaining: 4, reason: PeelReason::NonNeighborDelete },
            PeelStep { vertex: 1, remaining: 2, reason: PeelReason::SelectedIntoClique },
            PeelStep { vertex: 3, remaining: 2, reason: PeelReason::NonNeighborDelete },
        ];
        assert_eq!(t.steps, expect);
    }

    #[test]
    fn trace_of_empty_clique_deletes_everything() {
        let g = Graph::petersen();
        let t = peeling_trace(&g, &[]).unwrap();
        assert_eq!(t.steps.len(), 10);
        assert!(t.steps.iter().all(|s| s.reason == PeelReason::MinDegreeDelete));
        let sizes: Vec<_> = t.steps.iter().map(|s| s.remaining).collect();
        assert_eq!(sizes, (1..=10).rev().collect::<Vec<_>>());
    }

    #[test]
    fn trace_rejects_non_clique() {
        assert!(matches!(
            peeling_trace(&Graph::cycle(4), &[0, 2]),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn trace_order_reaches_target_via_peeled_vertices() {
        // Star K_{1,3}: leaves have degree 1, so leaf 1 goes first when targeting {0, 2}.
        let g = Graph::star(3);
        let t = peeling_trace(&g, &[0, 2]).unwrap();
        assert_eq!(t.steps[0], PeelStep { vertex: 1, remaining: 4, reason: PeelReason::MinDegreeDelete });
        assert_eq!(t.clique_order, vec![2, 0]);
    }
}
