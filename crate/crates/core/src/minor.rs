//! Minor containment with witness models, exact Hadwiger numbers, and the
//! constructive Hadwiger number of very dense graphs.
//!
//! Search works on partitions into connected branch sets. When both `H` and
//! the host component are connected, any model extends to one whose branch
//! sets cover the whole component (an unused vertex next to a branch set can
//! always join it), so the search only enumerates partitions of a component
//! into exactly `|V(H)|` connected parts. Parts are unordered: each new part
//! contains the lowest unassigned vertex. A partition succeeds when its
//! quotient graph contains `H` as a spanning subgraph. If `H` is disconnected
//! the lowest unassigned vertex may also be deleted.

use std::collections::HashMap;

use serde::Serialize;

use crate::clique::maximum_clique;
use crate::error::{Error, Result};
use crate::graph::{bits, low_mask, Graph};
use crate::matching::maximum_matching;

/// Host size above which [`hadwiger_exact`] refuses to run.
pub const HADWIGER_EXACT_GUARD: usize = 12;

/// Default step budget of [`find_minor_model`].
pub const DEFAULT_BUDGET: u64 = 500_000_000;

/// Branch sets certifying `H` as a minor of `G`: `branch_sets[h]` is the set for vertex `h` of `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorModel {
    pub branch_sets: Vec<Vec<usize>>,
}

impl MinorModel {
    /// Check the three model invariants: disjoint nonempty branch sets, each
    /// connected in `g`, and a `g`-edge between the sets of every `h`-edge.
    pub fn validate(&self, g: &Graph, h: &Graph) -> Result<()> {
        if self.branch_sets.len() != h.vertex_count() {
            return Err(Error::Internal(format!(
                "model has {} branch sets for {} minor vertices",
                self.branch_sets.len(),
                h.vertex_count()
            )));
        }
        let mut owner = vec![usize::MAX; g.vertex_count()];
        for (i, set) in self.branch_sets.iter().enumerate() {
            if set.is_empty() {
                return Err(Error::Internal(format!("branch set {i} is empty")));
            }
            for &v in set {
                if v >= g.vertex_count() || owner[v] != usize::MAX {
                    return Err(Error::Internal(format!(
                        "vertex {v} out of range or shared between branch sets"
                    )));
                }
                owner[v] = i;
            }
            let (sub, _) = g.induced_subgraph(set)?;
            if !sub.is_connected() {
                return Err(Error::Internal(format!("branch set {i} is not connected")));
            }
        }
        for (x, y) in h.edges() {
            let touching = self.branch_sets[x]
                .iter()
                .any(|&u| self.branch_sets[y].iter().any(|&v| g.has_edge(u, v)));
            if !touching {
                return Err(Error::Internal(format!(
                    "no edge between branch sets {x} and {y}"
                )));
            }
        }
        Ok(())
    }

    /// Number of singleton branch sets.
    pub fn singletons(&self) -> usize {
        self.branch_sets.iter().filter(|s| s.len() == 1).count()
    }
}

/// Outcome of a minor search. Budget exhaustion is never reported as absence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinorSearch {
    Found(MinorModel),
    Absent,
    Indeterminate { steps: u64 },
}

impl MinorSearch {
    pub fn model(&self) -> Option<&MinorModel> {
        match self {
            MinorSearch::Found(m) => Some(m),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, MinorSearch::Found(_))
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, MinorSearch::Absent)
    }
}

struct OutOfBudget;

/// All connected subsets of `allowed` containing `root` with at most `max` vertices.
fn connected_sets(rows: &[u64], root: usize, allowed: u64, max: usize, out: &mut Vec<u64>) {
    fn rec(rows: &[u64], allowed: u64, max: usize, set: u64, frontier: u64, excluded: u64, out: &mut Vec<u64>) {
        if frontier == 0 || set.count_ones() as usize == max {
            out.push(set);
            return;
        }
        let v = frontier.trailing_zeros() as usize;
        let bit = 1u64 << v;
        rec(rows, allowed, max, set, frontier & !bit, excluded | bit, out);
        let grown = set | bit;
        let next = (frontier & !bit) | (rows[v] & allowed & !grown & !excluded);
        rec(rows, allowed, max, grown, next, excluded, out);
    }
    if max == 0 {
        return;
    }
    let root_bit = 1u64 << root;
    rec(rows, allowed, max, root_bit, rows[root] & allowed & !root_bit, 0, out);
}

fn is_connected_set(rows: &[u64], set: u64) -> bool {
    if set == 0 {
        return true;
    }
    let mut reached = set & set.wrapping_neg();
    loop {
        let next = bits(reached).fold(reached, |acc, v| acc | (rows[v] & set));
        if next == reached {
            return reached == set;
        }
        reached = next;
    }
}

/// Pattern graph data used by the quotient test.
struct Pattern {
    t: usize,
    rows: Vec<u64>,
    degrees: Vec<usize>,
    sorted_degrees: Vec<usize>,
    order: Vec<usize>,
}

impl Pattern {
    fn new(h: &Graph) -> Self {
        let t = h.vertex_count();
        let rows: Vec<u64> = (0..t).map(|v| h.row(v)).collect();
        let degrees: Vec<usize> = (0..t).map(|v| h.degree(v)).collect();
        let mut sorted_degrees = degrees.clone();
        sorted_degrees.sort_unstable_by(|a, b| b.cmp(a));
        // Highest degree first, then prefer vertices adjacent to already placed ones.
        let mut order = Vec::with_capacity(t);
        let mut placed = 0u64;
        while order.len() < t {
            let next = (0..t)
                .filter(|&v| placed >> v & 1 == 0)
                .max_by_key(|&v| ((rows[v] & placed).count_ones(), degrees[v], usize::MAX - v))
                .unwrap();
            placed |= 1 << next;
            order.push(next);
        }
        Pattern {
            t,
            rows,
            degrees,
            sorted_degrees,
            order,
        }
    }

    /// Find `sigma` with `h`-edges mapped onto `quotient`-edges.
    fn embed(&self, quotient: &[u64]) -> Option<Vec<usize>> {
        let qdeg: Vec<usize> = quotient.iter().map(|r| r.count_ones() as usize).collect();
        let mut sigma = vec![usize::MAX; self.t];
        fn rec(p: &Pattern, quotient: &[u64], qdeg: &[usize], depth: usize, used: u64, sigma: &mut Vec<usize>) -> bool {
            if depth == p.t {
                return true;
            }
            let x = p.order[depth];
            let mut need = low_mask(p.t) & !used;
            for y in bits(p.rows[x]) {
                if sigma[y] != usize::MAX {
                    need &= quotient[sigma[y]];
                }
            }
            for q in bits(need) {
                if qdeg[q] < p.degrees[x] {
                    continue;
                }
                sigma[x] = q;
                if rec(p, quotient, qdeg, depth + 1, used | 1 << q, sigma) {
                    return true;
                }
                sigma[x] = usize::MAX;
            }
            false
        }
        rec(self, quotient, &qdeg, 0, 0, &mut sigma).then_some(sigma)
    }
}

struct PartitionSearch<'a> {
    rows: &'a [u64],
    pattern: &'a Pattern,
    allow_deletion: bool,
    parts: Vec<u64>,
    steps: u64,
    budget: u64,
    memo: HashMap<Vec<u64>, Option<Vec<usize>>>,
    found: Option<(Vec<u64>, Vec<usize>)>,
}

impl PartitionSearch<'_> {
    fn tick(&mut self, n: u64) -> Result<(), OutOfBudget> {
        self.steps += n;
        if self.steps > self.budget {
            Err(OutOfBudget)
        } else {
            Ok(())
        }
    }

    fn reach(&self, part: u64) -> u64 {
        bits(part).fold(0u64, |acc, v| acc | self.rows[v])
    }

    fn quotient(&self) -> Vec<u64> {
        let t = self.parts.len();
        let mut q = vec![0u64; t];
        for i in 0..t {
            let reach = self.reach(self.parts[i]);
            for j in 0..t {
                if i != j && reach & self.parts[j] != 0 {
                    q[i] |= 1 << j;
                }
            }
        }
        q
    }

    /// Degree-sequence domination: a necessary condition for completing the partition.
    fn degrees_feasible(&self, unassigned: u64) -> bool {
        let t = self.pattern.t;
        let k = self.parts.len();
        let left = t - k;
        let mut bounds: Vec<usize> = (0..k)
            .map(|i| {
                let reach = self.reach(self.parts[i]);
                let fixed = (0..k).filter(|&j| j != i && reach & self.parts[j] != 0).count();
                fixed + if reach & unassigned != 0 { left } else { 0 }
            })
            .collect();
        bounds.extend(std::iter::repeat(t - 1).take(left));
        bounds.sort_unstable_by(|a, b| b.cmp(a));
        bounds
            .iter()
            .zip(self.pattern.sorted_degrees.iter())
            .all(|(b, d)| b >= d)
    }

    fn check_complete(&mut self) -> bool {
        let q = self.quotient();
        let hit = match self.memo.get(&q) {
            Some(hit) => hit.clone(),
            None => {
                let res = self.pattern.embed(&q);
                self.memo.insert(q, res.clone());
                res
            }
        };
        match hit {
            Some(sigma) => {
                self.found = Some((self.parts.clone(), sigma));
                true
            }
            None => false,
        }
    }

    fn run(&mut self, unassigned: u64) -> Result<bool, OutOfBudget> {
        self.tick(1)?;
        let t = self.pattern.t;
        let k = self.parts.len();
        if k == t {
            if unassigned != 0 && !self.allow_deletion {
                return Ok(false);
            }
            return Ok(self.check_complete());
        }
        let left = t - k;
        let free = unassigned.count_ones() as usize;
        if free < left || !self.degrees_feasible(unassigned) {
            return Ok(false);
        }
        let root = unassigned.trailing_zeros() as usize;
        if left == 1 && !self.allow_deletion {
            if !is_connected_set(self.rows, unassigned) {
                return Ok(false);
            }
            self.parts.push(unassigned);
            let res = self.run(0)?;
            self.parts.pop();
            return Ok(res);
        }
        let mut sets = Vec::new();
        connected_sets(self.rows, root, unassigned, free - (left - 1), &mut sets);
        self.tick(sets.len() as u64)?;
        sets.sort_by_key(|s| s.count_ones());
        for s in sets {
            self.parts.push(s);
            let res = self.run(unassigned & !s)?;
            self.parts.pop();
            if res {
                return Ok(true);
            }
        }
        if self.allow_deletion {
            return self.run(unassigned & !(1u64 << root));
        }
        Ok(false)
    }
}

/// Search `host` for a model of the pattern; returns `(parts, sigma)` with `sigma[h]` the part index of `h`.
fn search_partitions(
    host: &Graph,
    pattern: &Pattern,
    allow_deletion: bool,
    steps: &mut u64,
    budget: u64,
) -> Result<Option<(Vec<u64>, Vec<usize>)>, OutOfBudget> {
    let rows: Vec<u64> = (0..host.vertex_count()).map(|v| host.row(v)).collect();
    let mut search = PartitionSearch {
        rows: &rows,
        pattern,
        allow_deletion,
        parts: Vec::new(),
        steps: *steps,
        budget,
        memo: HashMap::new(),
        found: None,
    };
    let res = search.run(low_mask(host.vertex_count()));
    *steps = search.steps;
    res.map(|_| search.found.take())
}

fn model_from(parts: &[u64], sigma: &[usize], mapping: &[usize]) -> MinorModel {
    MinorModel {
        branch_sets: sigma
            .iter()
            .map(|&p| bits(parts[p]).map(|v| mapping[v]).collect())
            .collect(),
    }
}

/// Search for a model of `h` in `g` with the default step budget.
pub fn find_minor_model(g: &Graph, h: &Graph) -> Result<MinorSearch> {
    find_minor_model_with_budget(g, h, DEFAULT_BUDGET)
}

/// Exhaustive minor search. Returns [`MinorSearch::Indeterminate`] once more
/// than `budget` search steps have been spent without a decision.
pub fn find_minor_model_with_budget(g: &Graph, h: &Graph, budget: u64) -> Result<MinorSearch> {
    Error::guard("host vertex count for minor search", 64, g.vertex_count())?;
    Error::guard("pattern vertex count for minor search", 64, h.vertex_count())?;
    let t = h.vertex_count();
    if t == 0 {
        return Ok(MinorSearch::Found(MinorModel { branch_sets: Vec::new() }));
    }
    if t > g.vertex_count() || h.edge_count() > g.edge_count() {
        return Ok(MinorSearch::Absent);
    }
    let pattern = Pattern::new(h);
    let mut steps = 0u64;
    if h.is_connected() {
        let mut exhausted = false;
        for comp in g.components() {
            if comp.len() < t {
                continue;
            }
            let (sub, mapping) = g.induced_subgraph(&comp)?;
            if sub.edge_count() < h.edge_count() {
                continue;
            }
            match search_partitions(&sub, &pattern, false, &mut steps, budget) {
                Ok(Some((parts, sigma))) => {
                    return Ok(MinorSearch::Found(model_from(&parts, &sigma, &mapping)))
                }
                Ok(None) => {}
                Err(OutOfBudget) => {
                    exhausted = true;
                    break;
                }
            }
        }
        return Ok(if exhausted {
            MinorSearch::Indeterminate { steps }
        } else {
            MinorSearch::Absent
        });
    }
    let identity: Vec<usize> = (0..g.vertex_count()).collect();
    Ok(match search_partitions(g, &pattern, true, &mut steps, budget) {
        Ok(Some((parts, sigma))) => MinorSearch::Found(model_from(&parts, &sigma, &identity)),
        Ok(None) => MinorSearch::Absent,
        Err(OutOfBudget) => MinorSearch::Indeterminate { steps },
    })
}

/// Every partition of `V(g)` into connected parts, i.e. every graph reachable
/// from `g` by edge contractions alone. Parts are bitmasks (`g` must be narrow).
pub fn connected_partitions(g: &Graph) -> Result<Vec<Vec<u64>>> {
    Error::guard("vertex count for contraction enumeration", 64, g.vertex_count())?;
    let rows: Vec<u64> = (0..g.vertex_count()).map(|v| g.row(v)).collect();
    let mut out = Vec::new();
    fn rec(rows: &[u64], unassigned: u64, parts: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if unassigned == 0 {
            out.push(parts.clone());
            return;
        }
        let root = unassigned.trailing_zeros() as usize;
        let mut sets = Vec::new();
        connected_sets(rows, root, unassigned, 64, &mut sets);
        for s in sets {
            parts.push(s);
            rec(rows, unassigned & !s, parts, out);
            parts.pop();
        }
    }
    rec(&rows, low_mask(g.vertex_count()), &mut Vec::new(), &mut out);
    Ok(out)
}

/// Quotient of `g` by vertex-disjoint parts: part `i` becomes vertex `i`.
pub fn quotient_graph(g: &Graph, parts: &[u64]) -> Graph {
    let reach: Vec<u64> = parts
        .iter()
        .map(|&p| bits(p).fold(0u64, |acc, v| acc | g.row(v)))
        .collect();
    let rows: Vec<u64> = (0..parts.len())
        .map(|i| {
            (0..parts.len())
                .filter(|&j| j != i && reach[i] & parts[j] != 0)
                .fold(0u64, |acc, j| acc | 1 << j)
        })
        .collect();
    Graph::from_rows(&rows).expect("quotient has at most 64 parts")
}

/// Exact Hadwiger number with a witness model of the clique minor.
pub fn hadwiger_exact(g: &Graph) -> Result<(usize, MinorModel)> {
    let n = g.vertex_count();
    Error::guard("vertex count for exact Hadwiger number", HADWIGER_EXACT_GUARD, n)?;
    let clique = maximum_clique(g);
    let omega = clique.len();
    let upper = (n + omega) / 2;
    for k in (omega + 1..=upper).rev() {
        match find_minor_model_with_budget(g, &Graph::complete(k), u64::MAX)? {
            MinorSearch::Found(model) => return Ok((k, model)),
            MinorSearch::Absent => {}
            MinorSearch::Indeterminate { .. } => {
                return Err(Error::Internal("unbounded minor search ran out of budget".into()))
            }
        }
    }
    Ok((
        omega,
        MinorModel {
            branch_sets: clique.into_iter().map(|v| vec![v]).collect(),
        },
    ))
}

/// Auxiliary graph on `V(g)`: `uv` is an edge iff it is an edge of `g` and
/// every vertex of `g` is adjacent to `u` or `v` (a dominating pair).
pub fn dominating_pair_graph(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let words = n.div_ceil(64).max(1);
    let mut full = vec![0u64; words];
    for v in 0..n {
        full[v / 64] |= 1 << (v % 64);
    }
    let closed = |v: usize| -> Vec<u64> {
        let mut r = g.row_words(v).to_vec();
        r[v / 64] |= 1 << (v % 64);
        r
    };
    let edges: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| {
            let (cu, cv) = (closed(u), closed(v));
            cu.iter().zip(cv.iter()).zip(full.iter()).all(|((a, b), f)| a | b == *f)
        })
        .collect();
    Graph::from_edge_list(n, &edges).expect("edges come from a valid graph")
}

/// Maximum missing degree `Delta` and the density threshold `omega + 2 Delta^2 + 2`.
pub fn dense_threshold(g: &Graph, omega: usize) -> usize {
    let delta = g.max_missing_degree();
    omega + 2 * delta * delta + 2
}

/// Hadwiger number of a very dense graph, `floor((n + omega) / 2)`, with the
/// constructive model: a maximum clique as singletons plus a maximum matching
/// of the dominating-pair graph outside that clique as two-vertex branch sets.
///
/// Requires `n >= omega + 2 Delta^2 + 2`.
pub fn hadwiger_dense(g: &Graph) -> Result<(usize, MinorModel)> {
    let n = g.vertex_count();
    let clique = maximum_clique(g);
    let omega = clique.len();
    let threshold = dense_threshold(g, omega);
    if n < threshold {
        return Err(Error::precondition(format!(
            "dense Hadwiger construction needs n >= omega + 2*Delta^2 + 2 = {threshold}, got n = {n}"
        )));
    }
    let aux = dominating_pair_graph(g);
    let rest: Vec<usize> = (0..n).filter(|v| clique.binary_search(v).is_err()).collect();
    let (aux_rest, mapping) = aux.induced_subgraph(&rest)?;
    let matching = maximum_matching(&aux_rest);
    if matching.size() != rest.len() / 2 {
        return Err(Error::Internal(format!(
            "dominating-pair graph outside the clique has matching {} < {}",
            matching.size(),
            rest.len() / 2
        )));
    }
    let mut branch_sets: Vec<Vec<usize>> = clique.iter().map(|&v| vec![v]).collect();
    branch_sets.extend(
        matching
            .edges
            .iter()
            .map(|&(u, v)| vec![mapping[u], mapping[v]]),
    );
    let h = branch_sets.len();
    if h != (n + omega) / 2 {
        return Err(Error::Internal(format!(
            "constructed {h} branch sets, expected {}",
            (n + omega) / 2
        )));
    }
    let model = MinorModel { branch_sets };
    model.validate(g, &Graph::complete(h))?;
    Ok((h, model))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ShapeParams;

    fn found(g: &Graph, h: &Graph) -> bool {
        match find_minor_model(g, h).unwrap() {
            MinorSearch::Found(m) => {
                m.validate(g, h).unwrap();
                true
            }
            MinorSearch::Absent => false,
            MinorSearch::Indeterminate { .. } => panic!("indeterminate"),
        }
    }

    #[test]
    fn c4_minors() {
        let c4 = Graph::cycle(4);
        assert!(found(&c4, &Graph::complete(3)));
        assert!(!found(&c4, &Graph::complete(4)));
        assert!(found(&c4, &c4));
    }

    #[test]
    fn identity_model_is_singletons() {
        let p = Graph::petersen();
        let m = find_minor_model(&p, &p).unwrap();
        let m = m.model().unwrap();
        assert!(m.branch_sets.iter().all(|s| s.len() == 1));
        m.validate(&p, &p).unwrap();
    }

    #[test]
    fn petersen_has_k5_not_k6() {
        let p = Graph::petersen();
        assert!(found(&p, &Graph::complete(5)));
        assert!(!found(&p, &Graph::complete(6)));
    }

    #[test]
    fn disconnected_patterns() {
        let two_k3 = Graph::disjoint_union(&[Graph::complete(3), Graph::complete(3)]);
        assert!(found(&Graph::cycle(7), &Graph::disjoint_union(&[Graph::complete(2), Graph::complete(2)])));
        assert!(!found(&Graph::complete(5), &two_k3));
        assert!(found(&Graph::disjoint_union(&[Graph::cycle(4), Graph::cycle(5)]), &two_k3));
        assert!(found(&Graph::empty(3), &Graph::empty(2)));
        assert!(!found(&Graph::empty(1), &Graph::empty(2)));
    }

    #[test]
    fn budget_exhaustion_is_indeterminate() {
        let g = Graph::petersen();
        let r = find_minor_model_with_budget(&g, &Graph::complete(6), 3).unwrap();
        assert!(matches!(r, MinorSearch::Indeterminate { .. }));
    }

    #[test]
    fn hadwiger_small() {
        for n in 1..7 {
            let (h, m) = hadwiger_exact(&Graph::complete(n)).unwrap();
            assert_eq!(h, n);
            assert!(m.branch_sets.iter().all(|s| s.len() == 1));
        }
        assert_eq!(hadwiger_exact(&Graph::cycle(4)).unwrap().0, 3);
        assert_eq!(hadwiger_exact(&Graph::empty(0)).unwrap().0, 0);
        assert_eq!(hadwiger_exact(&Graph::petersen()).unwrap().0, 5);
        assert!(matches!(
            hadwiger_exact(&Graph::empty(13)),
            Err(Error::Guard { .. })
        ));
    }

    #[test]
    fn hadwiger_of_matching_complements() {
        for m in 1..=4 {
            let g = ShapeParams::new(m, 0).to_graph();
            let (h, model) = hadwiger_exact(&g).unwrap();
            assert_eq!(h, 3 * m / 2, "m = {m}");
            model.validate(&g, &Graph::complete(h)).unwrap();
        }
    }

    #[test]
    fn dense_construction() {
        let g = ShapeParams::new(5, 0).to_graph();
        let (h, model) = hadwiger_dense(&g).unwrap();
        assert_eq!(h, 7);
        model.validate(&g, &Graph::complete(7)).unwrap();
        assert_eq!(hadwiger_exact(&g).unwrap().0, 7);
        assert!(matches!(
            hadwiger_dense(&Graph::complete(6)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn dense_construction_on_wide_graph() {
        let g = ShapeParams::new(40, 5).to_graph();
        let (h, model) = hadwiger_dense(&g).unwrap();
        assert_eq!(h, (85 + 45) / 2);
        model.validate(&g, &Graph::complete(h)).unwrap();
    }

    #[test]
    fn dominating_pairs() {
        assert_eq!(dominating_pair_graph(&Graph::complete(5)), Graph::complete(5));
        assert_eq!(dominating_pair_graph(&Graph::cycle(4)), Graph::cycle(4));
        assert_eq!(dominating_pair_graph(&Graph::path(4)).edge_count(), 1);
    }

    #[test]
    fn partitions_of_small_graphs() {
        // Connected partitions of K3: all 5 set partitions; of P3: 4 (not {0,2}|{1}).
        assert_eq!(connected_partitions(&Graph::complete(3)).unwrap().len(), 5);
        assert_eq!(connected_partitions(&Graph::path(3)).unwrap().len(), 4);
        let q = quotient_graph(&Graph::cycle(4), &[0b0011, 0b0100, 0b1000]);
        assert_eq!(q, Graph::complete(3));
    }
}
