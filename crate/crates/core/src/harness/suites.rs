use std::time::Instant;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::clique::{clique_census, count_cliques, count_cliques_naive, count_cliques_with};
use crate::error::{Error, Result};
use crate::extremal::{
    extremal_union_construct, family_ip_optimum, k_s_bound, shape_minor_free, single_minor_optimum,
    small_n_bound, wood_bound, ForbiddenMinorSpec, LowerEnvelope, SmallNBound,
};
use crate::graph::{Graph, ShapeParams};
use crate::matching::missing_matching_size;
use crate::minor::{
    dense_threshold, find_minor_model, find_minor_model_with_budget, hadwiger_dense, hadwiger_exact,
    MinorSearch, DEFAULT_BUDGET,
};
use crate::social::{independent_fraction_counterexample, max_good_independent_set, verify_structure};
use crate::Rational;

use super::enumerate::{connected_graphs_up_to_isomorphism, labeled_graphs};
use super::io::to_edge_list;

pub const SCHEMA_VERSION: u32 = 1;

pub const SUITES: &[&str] = &[
    "census-oracle",
    "shape-counts",
    "k-s-bound",
    "hadwiger-dense",
    "shape-predicate",
    "wood-small",
    "small-n",
    "envelope-example",
    "ip-lp-gap",
    "social-structure",
    "independent-fraction",
    "union-dp",
];

/// Optional knobs; each suite documents its own defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteParams {
    pub max_n: Option<usize>,
    pub t: Option<usize>,
    pub n: Option<usize>,
    pub max_t: Option<usize>,
    pub budget: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    /// Edge-list text of the offending graph.
    pub graph: String,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationResult {
    pub schema_version: u32,
    pub suite: String,
    pub params: Value,
    pub passed: bool,
    pub instances: u64,
    pub details: Value,
    pub counterexample: Option<Counterexample>,
    pub wall_time_ms: u64,
}

struct Outcome {
    params: Value,
    instances: u64,
    details: Value,
    counterexample: Option<Counterexample>,
}

impl Outcome {
    fn new(params: Value) -> Self {
        Outcome {
            params,
            instances: 0,
            details: Value::Null,
            counterexample: None,
        }
    }

    /// Record the first failure only.
    fn fail(&mut self, g: &Graph, note: impl Into<String>) {
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                graph: to_edge_list(g),
                note: note.into(),
            });
        }
    }
}

pub fn run_suite(name: &str, params: &SuiteParams) -> Result<VerificationResult> {
    let start = Instant::now();
    let out = match name {
        "census-oracle" => census_oracle(params)?,
        "shape-counts" => shape_counts(params)?,
        "k-s-bound" => k_s(params)?,
        "hadwiger-dense" => dense_hadwiger(params)?,
        "shape-predicate" => shape_predicate(params)?,
        "wood-small" => wood_small(params)?,
        "small-n" => small_n(params)?,
        "envelope-example" => envelope_example(params)?,
        "ip-lp-gap" => ip_lp_gap(params)?,
        "social-structure" => social_structure(params)?,
        "independent-fraction" => independent_fraction(params)?,
        "union-dp" => union_dp(params)?,
        other => {
            return Err(Error::input(format!(
                "unknown suite {other:?}; known suites: {}",
                SUITES.join(", ")
            )))
        }
    };
    Ok(VerificationResult {
        schema_version: SCHEMA_VERSION,
        suite: name.to_string(),
        params: out.params,
        passed: out.counterexample.is_none(),
        instances: out.instances,
        details: out.details,
        counterexample: out.counterexample,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

fn pow32(a: usize, b: usize) -> BigUint {
    BigUint::from(3u8).pow(a as u32) * BigUint::from(2u8).pow(b as u32)
}

fn census_oracle(p: &SuiteParams) -> Result<Outcome> {
    let max_n = p.max_n.unwrap_or(6);
    let mut out = Outcome::new(json!({ "max_n": max_n }));
    let mut per_n = Vec::new();
    for n in 0..=max_n {
        let mut k = 0u64;
        for g in labeled_graphs(n)? {
            k += 1;
            let census = clique_census(&g);
            let naive = count_cliques_naive(&g)?;
            let (small, omega) = count_cliques_with::<u64>(&g)?;
            if census.total != naive || BigUint::from(small) != naive || omega != census.omega {
                out.fail(&g, format!("peeling count {} but subset count {naive}", census.total));
            }
        }
        per_n.push(json!({ "n": n, "graphs": k }));
        out.instances += k;
    }
    out.details = json!({ "per_n": per_n });
    Ok(out)
}

fn shape_counts(p: &SuiteParams) -> Result<Outcome> {
    let max = p.max_n.unwrap_or(5);
    let mut out = Outcome::new(json!({ "max_a": max, "max_b": max }));
    for a in 0..=max {
        for b in 0..=max {
            let g = ShapeParams::new(a, b).to_graph();
            let census = clique_census(&g);
            out.instances += 1;
            let omega = if a > 0 { a + b } else { b };
            if census.total != pow32(a, b) || census.omega != omega {
                out.fail(&g, format!("K({a},{b}) has {} cliques and omega {}", census.total, census.omega));
            }
        }
    }
    Ok(out)
}

/// Complement of a perfect matching (the empty graph included).
fn is_matching_complement(g: &Graph) -> bool {
    (0..g.vertex_count()).all(|v| g.missing_degree(v) == 1)
}

fn k_s(p: &SuiteParams) -> Result<Outcome> {
    let max_n = p.max_n.unwrap_or(7);
    let mut out = Outcome::new(json!({ "max_n": max_n }));
    // best[s] = most cliques among graphs with n + omega = s exactly.
    let mut best = vec![0u64; 2 * max_n + 1];
    let mut equality = 0u64;
    for n in 0..=max_n {
        for g in labeled_graphs(n)? {
            out.instances += 1;
            let (c, omega) = count_cliques_with::<u64>(&g)?;
            let s = n + omega;
            best[s] = best[s].max(c);
            let bound = k_s_bound(s);
            let c = BigUint::from(c);
            if !bound.admits(&c) {
                out.fail(&g, format!("{c} cliques exceed 3^({s}/3)"));
            } else if bound.is_attained_by(&c) {
                equality += 1;
                if !is_matching_complement(&g) {
                    out.fail(&g, format!("bound attained at s = {s} by a graph that is not a matching complement"));
                }
            }
        }
    }
    let mut witnesses = Vec::new();
    for s in [3, 6, 9] {
        let w = k_s_bound(s).witness.expect("s divisible by 3");
        let g = w.to_graph();
        let census = clique_census(&g);
        let ok = g.vertex_count() + census.omega == s && k_s_bound(s).is_attained_by(&census.total);
        if !ok {
            out.fail(&g, format!("witness for s = {s} does not attain the bound"));
        }
        witnesses.push(json!({ "s": s, "shape": w, "count": census.total.to_string(), "attained": ok }));
    }
    // k(s) is exact for s <= max_n + 1, where every graph with n + omega <= s has n <= max_n.
    let mut k = Vec::new();
    let mut running = 0u64;
    for (s, &b) in best.iter().enumerate().take(max_n + 2) {
        running = running.max(b);
        k.push(json!({ "s": s, "k": running }));
    }
    out.details = json!({ "k": k, "equality_graphs": equality, "witnesses": witnesses });
    Ok(out)
}

fn dense_hadwiger(p: &SuiteParams) -> Result<Outcome> {
    let max_m = p.max_n.unwrap_or(4);
    let mut out = Outcome::new(json!({ "max_m": max_m }));
    let mut rows = Vec::new();
    for m in 2..=max_m {
        out.instances += 1;
        let g = ShapeParams::new(m, 0).to_graph();
        let expect = 3 * m / 2;
        let (h, model) = hadwiger_exact(&g)?;
        let exact_ok = h == expect && model.validate(&g, &Graph::complete(h)).is_ok();
        if !exact_ok {
            out.fail(&g, format!("exact Hadwiger number {h}, expected {expect}"));
        }
        let applies = g.vertex_count() >= dense_threshold(&g, m);
        let dense = if applies {
            let (hd, md) = hadwiger_dense(&g)?;
            let ok = hd == expect && md.validate(&g, &Graph::complete(hd)).is_ok();
            if !ok {
                out.fail(&g, format!("dense construction gave {hd}, expected {expect}"));
            }
            json!(hd)
        } else {
            if hadwiger_dense(&g).is_ok() {
                out.fail(&g, "dense construction ran below its threshold");
            }
            Value::Null
        };
        rows.push(json!({ "m": m, "expected": expect, "exact": h, "dense": dense, "dense_applies": applies }));
    }
    out.details = json!({ "cases": rows });
    Ok(out)
}

fn shape_predicate(p: &SuiteParams) -> Result<Outcome> {
    let max_t = p.max_t.unwrap_or(6);
    let max_ab = p.max_n.unwrap_or(4);
    let budget = p.budget.unwrap_or(DEFAULT_BUDGET);
    let mut out = Outcome::new(json!({ "max_t": max_t, "max_a": max_ab, "max_b": max_ab, "budget": budget }));
    let mut minors = 0;
    let (mut found, mut absent) = (0u64, 0u64);
    for t in 1..=max_t {
        for h in connected_graphs_up_to_isomorphism(t)? {
            minors += 1;
            let x = missing_matching_size(&h);
            for a in 0..=max_ab {
                for b in 0..=max_ab {
                    out.instances += 1;
                    let host = ShapeParams::new(a, b).to_graph();
                    let predicted_free = shape_minor_free(t, x, a, b)?;
                    match find_minor_model_with_budget(&host, &h, budget)? {
                        MinorSearch::Found(model) => {
                            found += 1;
                            if model.validate(&host, &h).is_err() {
                                out.fail(&h, format!("invalid model in K({a},{b})"));
                            } else if predicted_free {
                                out.fail(&h, format!("predicate says K({a},{b}) is free, model found"));
                            }
                        }
                        MinorSearch::Absent => {
                            absent += 1;
                            if !predicted_free {
                                out.fail(&h, format!("predicate says K({a},{b}) contains it, search found none"));
                            }
                        }
                        MinorSearch::Indeterminate { steps } => {
                            out.fail(&h, format!("search in K({a},{b}) ran out of budget after {steps} steps"));
                        }
                    }
                }
            }
        }
    }
    out.details = json!({ "minors": minors, "found": found, "absent": absent });
    Ok(out)
}

fn minor_free(g: &Graph, h: &Graph) -> Result<bool> {
    match find_minor_model(g, h)? {
        MinorSearch::Found(_) => Ok(false),
        MinorSearch::Absent => Ok(true),
        MinorSearch::Indeterminate { steps } => Err(Error::Internal(format!(
            "minor search undecided after {steps} steps"
        ))),
    }
}

/// Most cliques over `K_t`-minor-free labeled graphs on `n` vertices, with a witness.
fn brute_force_wood(t: usize, n: usize) -> Result<(u64, Graph, u64)> {
    let kt = Graph::complete(t);
    let mut best = 0u64;
    let mut witness = Graph::empty(n);
    let mut k = 0;
    for g in labeled_graphs(n)? {
        k += 1;
        let (c, _) = count_cliques_with::<u64>(&g)?;
        if c > best && minor_free(&g, &kt)? {
            best = c;
            witness = g;
        }
    }
    Ok((best, witness, k))
}

fn wood_small(p: &SuiteParams) -> Result<Outcome> {
    let cases: Vec<(usize, usize)> = match (p.t, p.n) {
        (Some(t), Some(n)) => vec![(t, n)],
        (None, None) => vec![(4, 4), (4, 5), (4, 6), (5, 5), (5, 6)],
        _ => return Err(Error::input("wood-small takes both t and n, or neither")),
    };
    let mut out = Outcome::new(json!({ "cases": cases }));
    let mut rows = Vec::new();
    for (t, n) in cases {
        let formula = wood_bound(t, n)?;
        let (max, witness, k) = brute_force_wood(t, n)?;
        out.instances += k;
        if BigUint::from(max) != formula {
            out.fail(&witness, format!("t = {t}, n = {n}: brute-force max {max}, formula {formula}"));
        }
        rows.push(json!({ "t": t, "n": n, "max": max, "formula": formula.to_string(), "witness": to_edge_list(&witness) }));
    }
    out.details = json!({ "cases": rows });
    Ok(out)
}

fn small_n(p: &SuiteParams) -> Result<Outcome> {
    let (t, n) = (p.t.unwrap_or(6), p.n.unwrap_or(7));
    let mut out = Outcome::new(json!({ "t": t, "n": n }));
    Error::guard("vertex count for the small-n minor check", 12, n)?;
    out.instances = 1;
    match small_n_bound(t, n)? {
        SmallNBound::Clique { count, .. } => {
            let g = Graph::complete(n);
            if count_cliques(&g) != count {
                out.fail(&g, "clique count mismatch");
            }
            out.details = json!({ "case": "clique", "count": count.to_string() });
        }
        SmallNBound::Matching {
            shape,
            count,
            upper_count,
            ..
        } => {
            let g = shape.to_graph();
            let free = minor_free(&g, &Graph::complete(t))?;
            let census = count_cliques(&g);
            if !free {
                out.fail(&g, format!("K({},{}) contains a K{t} minor", shape.a, shape.b));
            }
            if census != count {
                out.fail(&g, format!("census {census}, formula {count}"));
            }
            if &count * 4u8 != &upper_count * 3u8 {
                out.fail(&g, "construction is not 3/4 of the upper bound");
            }
            out.details = json!({
                "case": "matching",
                "shape": shape,
                "count": count.to_string(),
                "upper_count": upper_count.to_string(),
                "minor_free": free,
            });
        }
    }
    Ok(out)
}

fn rational_json(r: &Rational) -> Value {
    json!({ "num": r.numer(), "den": r.denom() })
}

fn envelope_example(p: &SuiteParams) -> Result<Outcome> {
    let t = p.t.unwrap_or(2);
    if t == 0 {
        return Err(Error::input("t must be positive"));
    }
    let (t1, t2) = (4 * t, 5 * t);
    let family = [
        ForbiddenMinorSpec::from_params(t1, 0)?,
        ForbiddenMinorSpec::from_params(t2, t2 / 2)?,
    ];
    let mut out = Outcome::new(json!({ "t": t, "family": [[t1, 0], [t2, t2 / 2]] }));
    out.instances = 1;
    let env = LowerEnvelope::<Rational>::build(&family)?;
    let opt = family_ip_optimum(&family)?;
    let ShapeParams { a, b } = opt.shape;
    let g = opt.shape.to_graph();
    let mut feasible = true;
    let mut maximal = true;
    for s in &family {
        feasible &= shape_minor_free(s.t, s.x, a, b)?;
    }
    maximal &= !family.iter().all(|s| shape_minor_free(s.t, s.x, a, b + 1).unwrap_or(false));
    if !feasible || !maximal {
        out.fail(&g, "integer optimum violates or does not saturate the caps");
    }
    if !opt.within_factor(6) {
        out.fail(&g, "integer optimum not within factor 6 of the relaxation");
    }
    let lp = &opt.lp.point;
    let lp_pattern = *lp.a.numer() == 2 * t as i64 && *lp.a.denom() == 1 && lp.b == Rational::from_integer(t as i64);
    let ip_pattern = opt.shape == ShapeParams::new(2 * t - 1, t + 1);
    if t == 2 && !(lp_pattern && ip_pattern && opt.clique_count == BigUint::from(216u32)) {
        out.fail(&g, "t = 2 optimum differs from LP (4, 2), IP (3, 3), count 216");
    }
    out.details = json!({
        "extreme_points": env.extreme_points.iter().map(|p| json!({ "a": rational_json(&p.a), "b": rational_json(&p.b) })).collect::<Vec<_>>(),
        "lp_point": { "a": rational_json(&lp.a), "b": rational_json(&lp.b) },
        "ip_shape": opt.shape,
        "ip_count": opt.clique_count.to_string(),
        "ratio": opt.gap_ratio(),
        "lp_at_2t_t": lp_pattern,
        "ip_at_2t_minus_1_t_plus_1": ip_pattern,
    });
    Ok(out)
}

fn ip_lp_gap(p: &SuiteParams) -> Result<Outcome> {
    let max_t = p.max_t.unwrap_or(60);
    let mut out = Outcome::new(json!({ "min_t": 3, "max_t": max_t }));
    let mut worst = 0f64;
    for t in 3..=max_t {
        for x in 0..=t / 2 {
            out.instances += 1;
            let spec = ForbiddenMinorSpec::from_params(t, x)?;
            let note = |m: &str| format!("t = {t}, x = {x}: {m}");
            match single_minor_optimum(&spec) {
                Ok(opt) => {
                    let ShapeParams { a, b } = opt.shape;
                    if !shape_minor_free(t, x, a, b)? || shape_minor_free(t, x, a, b + 1)? {
                        out.fail(&opt.shape.to_graph(), note("optimum does not saturate its cap"));
                    }
                    if !opt.within_factor(3) {
                        out.fail(&opt.shape.to_graph(), note("not within factor 3"));
                    }
                    worst = worst.max(opt.gap_ratio());
                }
                Err(e) => out.fail(&Graph::empty(0), note(&e.to_string())),
            }
        }
    }
    out.details = json!({ "worst_ratio": worst });
    Ok(out)
}

fn social_structure(p: &SuiteParams) -> Result<Outcome> {
    let max_n = p.max_n.unwrap_or(6);
    let mut out = Outcome::new(json!({ "max_n": max_n }));
    let (mut social, mut with_bad) = (0u64, 0u64);
    for n in 0..=max_n {
        for g in labeled_graphs(n)? {
            out.instances += 1;
            let r = verify_structure(&g)?;
            if !r.is_social {
                continue;
            }
            social += 1;
            with_bad += u64::from(!r.bad_vertices.is_empty());
            if !r.structure_violations.is_empty() {
                out.fail(&g, format!("social graph with structure violations {:?}", r.structure_violations));
            }
            if r.bad_count_within_bound != Some(true) || r.excluded_within_bound != Some(true) {
                out.fail(&g, "social graph exceeds the bad-vertex bounds");
            }
        }
    }
    out.details = json!({ "social_graphs": social, "social_with_bad_vertices": with_bad });
    Ok(out)
}

fn independent_fraction(p: &SuiteParams) -> Result<Outcome> {
    let max_n = p.max_n.unwrap_or(6);
    let mut out = Outcome::new(json!({ "max_n": max_n }));
    let mut largest_good = 0;
    for n in 0..=max_n {
        for g in labeled_graphs(n)? {
            out.instances += 1;
            if let Some(set) = independent_fraction_counterexample(&g)? {
                out.fail(&g, format!("independent set {set:?} has every clique fraction above 1/{}", set.len() + 1));
            }
            let good = max_good_independent_set(&g)?;
            if good.len() > 2 {
                out.fail(&g, format!("independent set of good vertices {good:?}"));
            }
            largest_good = largest_good.max(good.len());
        }
    }
    out.details = json!({ "largest_good_independent_set": largest_good });
    Ok(out)
}

/// Most cliques in a disjoint union of `family`-feasible shapes on exactly `n`
/// vertices, by exhaustive search over multisets of shapes.
pub fn best_shape_union(family: &[(usize, usize)], n: usize) -> Result<BigUint> {
    let mut shapes = Vec::new();
    for a in 0..=n / 2 {
        for b in 0..=n - 2 * a {
            if a + b > 0 {
                let mut ok = true;
                for &(t, x) in family {
                    ok &= shape_minor_free(t, x, a, b)?;
                }
                if ok {
                    shapes.push(ShapeParams::new(a, b));
                }
            }
        }
    }
    fn go(shapes: &[ShapeParams], from: usize, left: usize, acc: BigUint, best: &mut Option<BigUint>) {
        if left == 0 {
            if best.as_ref().map_or(true, |b| acc > *b) {
                *best = Some(acc);
            }
            return;
        }
        for (i, s) in shapes.iter().enumerate().skip(from) {
            if s.vertex_count() <= left {
                go(shapes, i, left - s.vertex_count(), &acc + pow32(s.a, s.b) - 1u8, best);
            }
        }
    }
    let mut best = None;
    go(&shapes, 0, n, BigUint::from(1u8), &mut best);
    best.ok_or_else(|| Error::input(format!("no union of feasible shapes has {n} vertices")))
}

fn union_dp(p: &SuiteParams) -> Result<Outcome> {
    let t = p.t.unwrap_or(4);
    let max_n = p.max_n.unwrap_or(10);
    let mut out = Outcome::new(json!({ "family": format!("K{t}"), "max_n": max_n }));
    let spec = ForbiddenMinorSpec::complete(t)?;
    let kt = Graph::complete(t);
    let mut rows = Vec::new();
    for n in 0..=max_n {
        out.instances += 1;
        let c = extremal_union_construct(std::slice::from_ref(&spec), n)?;
        let oracle = best_shape_union(&[(t, 0)], n)?;
        let g = c.to_graph();
        if c.count != oracle {
            out.fail(&g, format!("n = {n}: dynamic program {} but exhaustive {oracle}", c.count));
        }
        if count_cliques(&g) != c.count {
            out.fail(&g, format!("n = {n}: census disagrees with the reported count"));
        }
        for (piece, _) in c.multiplicities() {
            if !minor_free(&piece.to_graph(), &kt)? {
                out.fail(&piece.to_graph(), format!("piece K({},{}) contains K{t}", piece.a, piece.b));
            }
        }
        rows.push(json!({ "n": n, "count": c.count.to_string(), "pieces": c.pieces }));
    }
    out.details = json!({ "cases": rows });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &SuiteParams::default()).is_err());
    }

    #[test]
    fn quick_suites_pass() {
        let small = SuiteParams {
            max_n: Some(4),
            ..Default::default()
        };
        for name in ["census-oracle", "social-structure", "independent-fraction", "k-s-bound"] {
            let r = run_suite(name, &small).unwrap();
            assert!(r.passed, "{name}: {:?}", r.counterexample);
            assert_eq!(r.schema_version, SCHEMA_VERSION);
        }
        let r = run_suite("envelope-example", &SuiteParams::default()).unwrap();
        assert!(r.passed);
        assert_eq!(r.details["ip_count"], "216");
    }

    #[test]
    fn exhaustive_union_oracle() {
        assert_eq!(best_shape_union(&[(4, 0)], 0).unwrap(), BigUint::from(1u8));
        assert_eq!(best_shape_union(&[(4, 0)], 4).unwrap(), BigUint::from(12u8));
        assert!(best_shape_union(&[(1, 0)], 2).is_err());
    }
}
