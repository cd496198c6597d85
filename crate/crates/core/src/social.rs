//! Social graphs: graphs in which no single edge contraction increases the clique count.
//!
//! Also here: good and bad vertices (clique fraction above or below the
//! threshold `alpha* = (2 - sqrt 2)/2 - 1/1000`), the search for a contraction
//! minor with the most cliques, and checkers for the structural facts about
//! social graphs at small sizes.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::clique::{clique_census, count_cliques, CliqueCensus};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::minor::{connected_partitions, quotient_graph};
use crate::BigRational;

/// Vertex limit for checks that contract every edge.
pub const SOCIAL_GUARD: usize = 12;
/// Vertex limit for the independent-set sweep.
pub const INDEPENDENT_GUARD: usize = 10;
/// Vertex limit for the exhaustive contraction-minor search.
pub const EXHAUSTIVE_CONTRACTION_LIMIT: usize = 8;

/// The good/bad threshold `(2 - sqrt 2)/2 - offset`, compared exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaStar {
    pub offset: BigRational,
}

impl Default for AlphaStar {
    fn default() -> Self {
        AlphaStar {
            offset: BigRational::new(1.into(), 1000.into()),
        }
    }
}

impl AlphaStar {
    pub fn with_offset(offset: BigRational) -> Result<Self> {
        if offset.is_negative() {
            return Err(Error::input("threshold offset must be nonnegative"));
        }
        Ok(AlphaStar { offset })
    }

    /// Whether `f < alpha*`.
    ///
    /// With `s/r = f + offset`, this is `s/r < 1 - sqrt(2)/2`, i.e. `r > s` and `r^2 < 2 (r - s)^2`.
    pub fn is_below(&self, f: &BigRational) -> bool {
        let sum = f + &self.offset;
        let (s, r): (&BigInt, &BigInt) = (sum.numer(), sum.denom());
        let diff = r - s;
        diff.is_positive() && r * r < &diff * &diff * 2
    }

    pub fn to_f64(&self) -> f64 {
        (2.0 - std::f64::consts::SQRT_2) / 2.0 - self.offset.to_f64().unwrap_or(f64::NAN)
    }
}

/// Social status and good/bad structure of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocialReport {
    pub is_social: bool,
    /// First edge, in lexicographic order, whose contraction increases the clique count.
    pub violating_edge: Option<(usize, usize)>,
    pub bad_vertices: Vec<usize>,
    #[serde(skip)]
    pub alpha_star: AlphaStar,
    /// Bad vertices together with every non-neighbor of a bad vertex.
    pub excluded: Vec<usize>,
    /// Vertices outside `excluded` with missing degree at least 2.
    pub structure_violations: Vec<usize>,
    pub max_missing_degree: usize,
    /// For social graphs: `|bad| <= 300 D^2`, with `D` the maximum missing degree.
    pub bad_count_within_bound: Option<bool>,
    /// For social graphs: `|excluded| <= 600 D^3`.
    pub excluded_within_bound: Option<bool>,
}

/// First edge whose contraction increases the clique count, if any.
fn first_violating_edge(g: &Graph, base: &BigUint) -> Result<Option<(usize, usize)>> {
    Error::guard("vertex count for social check", SOCIAL_GUARD, g.vertex_count())?;
    for (u, v) in g.edges() {
        if count_cliques(&g.contract_edge(u, v)?) > *base {
            return Ok(Some((u, v)));
        }
    }
    Ok(None)
}

fn bad_from_census(census: &CliqueCensus, threshold: &AlphaStar) -> Vec<usize> {
    (0..census.fractions.len())
        .filter(|&v| threshold.is_below(&census.fractions[v]))
        .collect()
}

/// Bad vertices under the standard threshold.
pub fn bad_vertices(g: &Graph) -> Vec<usize> {
    bad_vertices_with(g, &AlphaStar::default())
}

pub fn bad_vertices_with(g: &Graph, threshold: &AlphaStar) -> Vec<usize> {
    bad_from_census(&clique_census(g), threshold)
}

fn report(g: &Graph, threshold: &AlphaStar) -> Result<SocialReport> {
    let census = clique_census(g);
    let violating_edge = first_violating_edge(g, &census.total)?;
    let is_social = violating_edge.is_none();
    let bad = bad_from_census(&census, threshold);
    let n = g.vertex_count();
    let mut out = vec![false; n];
    for &u in &bad {
        out[u] = true;
        for w in 0..n {
            if w != u && !g.has_edge(u, w) {
                out[w] = true;
            }
        }
    }
    let excluded: Vec<usize> = (0..n).filter(|&v| out[v]).collect();
    let structure_violations = (0..n).filter(|&v| !out[v] && g.missing_degree(v) >= 2).collect();
    let d = g.max_missing_degree();
    let (bad_ok, excluded_ok) = if is_social {
        (Some(bad.len() <= 300 * d * d), Some(excluded.len() <= 600 * d * d * d))
    } else {
        (None, None)
    };
    Ok(SocialReport {
        is_social,
        violating_edge,
        bad_vertices: bad,
        alpha_star: threshold.clone(),
        excluded,
        structure_violations,
        max_missing_degree: d,
        bad_count_within_bound: bad_ok,
        excluded_within_bound: excluded_ok,
    })
}

/// Contracts every edge and compares clique counts.
pub fn is_social(g: &Graph) -> Result<SocialReport> {
    report(g, &AlphaStar::default())
}

/// Social check plus the structural quantities around bad vertices.
pub fn verify_structure(g: &Graph) -> Result<SocialReport> {
    report(g, &AlphaStar::default())
}

pub fn verify_structure_with(g: &Graph, threshold: &AlphaStar) -> Result<SocialReport> {
    report(g, threshold)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    Exact,
    Heuristic,
}

/// A contraction minor with (exactly or heuristically) the most cliques.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionMinor {
    pub graph: Graph,
    pub count: BigUint,
    /// Vertices of the input merged into each vertex of `graph`.
    pub branch_sets: Vec<Vec<usize>>,
    pub mode: SearchMode,
}

/// Exhaustive over all contraction results up to
/// [`EXHAUSTIVE_CONTRACTION_LIMIT`] vertices, greedy hill-climbing beyond.
///
/// Ties go to the minor with more vertices, so a social graph maps to itself.
pub fn best_contraction_minor(g: &Graph) -> Result<ContractionMinor> {
    if g.vertex_count() <= EXHAUSTIVE_CONTRACTION_LIMIT {
        exhaustive_contraction(g)
    } else {
        Ok(greedy_contraction(g))
    }
}

fn exhaustive_contraction(g: &Graph) -> Result<ContractionMinor> {
    let mut best: Option<(BigUint, Vec<u64>, Graph)> = None;
    for parts in connected_partitions(g)? {
        let q = quotient_graph(g, &parts);
        let c = count_cliques(&q);
        let better = match &best {
            None => true,
            Some((bc, bp, _)) => c > *bc || (c == *bc && parts.len() > bp.len()),
        };
        if better {
            best = Some((c, parts, q));
        }
    }
    let (count, parts, graph) = best.expect("every graph has the trivial partition");
    Ok(ContractionMinor {
        graph,
        count,
        branch_sets: parts.iter().map(|&p| bits(p).collect()).collect(),
        mode: SearchMode::Exact,
    })
}

fn greedy_contraction(g: &Graph) -> ContractionMinor {
    let mut graph = g.clone();
    let mut count = count_cliques(&graph);
    let mut sets: Vec<Vec<usize>> = (0..g.vertex_count()).map(|v| vec![v]).collect();
    loop {
        let mut step: Option<((usize, usize), BigUint, Graph)> = None;
        for (u, v) in graph.edges() {
            let h = graph.contract_edge(u, v).expect("edge from edges()");
            let c = count_cliques(&h);
            if c > *step.as_ref().map_or(&count, |s| &s.1) {
                step = Some(((u, v), c, h));
            }
        }
        let Some(((u, v), c, h)) = step else { break };
        let merged = sets.remove(v);
        sets[u].extend(merged);
        sets[u].sort_unstable();
        graph = h;
        count = c;
    }
    ContractionMinor {
        graph,
        count,
        branch_sets: sets,
        mode: SearchMode::Heuristic,
    }
}

/// Whether every nonempty independent set `I` has a vertex with clique fraction at most `1/(|I|+1)`.
pub fn verify_independent_fraction(g: &Graph) -> Result<bool> {
    Ok(independent_fraction_counterexample(g)?.is_none())
}

/// An independent set on which every clique fraction exceeds `1/(|I|+1)`, if one exists.
pub fn independent_fraction_counterexample(g: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count();
    Error::guard("vertex count for independent-set sweep", INDEPENDENT_GUARD, n)?;
    let census = clique_census(g);
    for set in independent_sets(g) {
        let k = BigInt::from(set.len() + 1);
        // min_v alpha_v <= 1/k  <=>  some containing[v] * k <= total.
        let ok = set
            .iter()
            .any(|&v| BigInt::from(census.containing[v].clone()) * &k <= BigInt::from(census.total.clone()));
        if !ok {
            return Ok(Some(set));
        }
    }
    Ok(None)
}

/// Largest independent set consisting of good vertices.
pub fn max_good_independent_set(g: &Graph) -> Result<Vec<usize>> {
    Error::guard("vertex count for independent-set sweep", INDEPENDENT_GUARD, g.vertex_count())?;
    let bad = bad_vertices(g);
    Ok(independent_sets(g)
        .filter(|s| s.iter().all(|v| !bad.contains(v)))
        .fold(Vec::new(), |best, s| if s.len() > best.len() { s } else { best }))
}

fn independent_sets(g: &Graph) -> impl Iterator<Item = Vec<usize>> + '_ {
    let n = g.vertex_count();
    (1u64..1 << n).filter_map(move |mask| {
        let set: Vec<usize> = bits(mask).collect();
        set.iter().all(|&v| g.row(v) & mask == 0).then_some(set)
    })
}
