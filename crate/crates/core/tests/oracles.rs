//! Example values recomputed by brute force, independently of the closed forms.

mod common;

use num_bigint::BigUint;

use cliqueminor::clique::{clique_census, count_cliques};
use cliqueminor::extremal::{
    extremal_exponent, extremal_union_construct, shape_minor_free, single_minor_optimum, small_n_bound, wood_bound,
    ForbiddenMinorSpec,
};
use cliqueminor::harness::{labeled_graphs, parse_graph6, to_graph6};
use cliqueminor::minor::{find_minor_model, MinorSearch};
use cliqueminor::social::{bad_vertices, best_contraction_minor, is_social};
use cliqueminor::{BigRational, ExactEnvelope, Graph, Rational, ShapeParams};

use common::subset_clique_count;

fn contains_minor(g: &Graph, h: &Graph) -> bool {
    match find_minor_model(g, h).unwrap() {
        MinorSearch::Found(m) => {
            m.validate(g, h).unwrap();
            true
        }
        MinorSearch::Absent => false,
        MinorSearch::Indeterminate { .. } => panic!("search undecided"),
    }
}

fn value(a: usize, b: usize) -> BigUint {
    BigUint::from(3u8).pow(a as u32) << b
}

#[test]
fn k6_optimum_by_lattice_scan_and_minor_search() {
    let mut best = (BigUint::default(), (0, 0));
    for a in 0..6 {
        for b in 0..12 {
            if 3 * a + 2 * b < 12 && value(a, b) > best.0 {
                best = (value(a, b), (a, b));
            }
        }
    }
    assert_eq!(best, (BigUint::from(54u8), (3, 1)));
    // The same maximum over shapes, deciding K6-minor-freeness by search.
    let k6 = Graph::complete(6);
    let mut searched = BigUint::default();
    for a in 0..=5 {
        for b in 0..=11 - 2 * a {
            let g = ShapeParams::new(a, b).to_graph();
            if !contains_minor(&g, &k6) {
                searched = searched.max(BigUint::from(subset_clique_count(&g)));
            }
        }
    }
    assert_eq!(searched, BigUint::from(54u8));
    let opt = single_minor_optimum(&ForbiddenMinorSpec::complete(6).unwrap()).unwrap();
    assert_eq!(opt.shape, ShapeParams::new(3, 1));
}

#[test]
fn two_member_family_by_lattice_scan() {
    let mut best = (BigUint::default(), (0, 0));
    for a in 0..20 {
        for b in 0..20 {
            let h1 = 3 * a + 2 * b < 16;
            let h2 = if a >= 5 { 3 * a + 2 * b < 15 } else { 2 * a + b < 10 };
            if h1 && h2 && value(a, b) > best.0 {
                best = (value(a, b), (a, b));
            }
        }
    }
    assert_eq!(best, (BigUint::from(216u8), (3, 3)));
    // The corners of the relaxation, evaluated one by one.
    let corners = [(0.0, 8.0), (4.0, 2.0), (5.0, 0.0)];
    let top = corners
        .iter()
        .copied()
        .fold((f64::MIN, (0.0, 0.0)), |acc, (a, b)| {
            let v = a * 3f64.log2() + b;
            if v > acc.0 { (v, (a, b)) } else { acc }
        });
    assert_eq!(top.1, (4.0, 2.0));
    let fam = [ForbiddenMinorSpec::from_params(8, 0).unwrap(), ForbiddenMinorSpec::from_params(10, 5).unwrap()];
    let e = extremal_exponent(&fam).unwrap();
    assert!((e.exponent.to_f64() - top.0).abs() < 1e-12);
}

#[test]
fn clique_family_envelope_and_exponent() {
    for t in 1..20usize {
        let env = ExactEnvelope::from_constraints(&[(t, 0)]).unwrap();
        let pts: Vec<_> = env.extreme_points.iter().map(|p| (p.a, p.b)).collect();
        assert_eq!(
            pts,
            vec![
                (Rational::from_integer(0), Rational::from_integer(t as i64)),
                (Rational::new(2 * t as i64, 3), Rational::from_integer(0)),
            ]
        );
        let e = extremal_exponent(&[ForbiddenMinorSpec::complete(t).unwrap()]).unwrap();
        assert_eq!(e.exponent.log3_coefficient, Rational::new(2 * t as i64, 3));
    }
}

#[test]
fn small_missing_matching_exponent() {
    // (2t/3 - x/3) log2 3 beats t exactly when 3^(2t - x) > 2^(3t).
    for t in 2..40usize {
        for x in 0..=t / 2 {
            let e = extremal_exponent(&[ForbiddenMinorSpec::from_params(t, x).unwrap()]).unwrap();
            let lhs = BigUint::from(3u8).pow((2 * t - x) as u32);
            let rhs = BigUint::from(1u8) << (3 * t);
            if lhs > rhs {
                assert_eq!(e.exponent.log3_coefficient, Rational::new((2 * t - x) as i64, 3));
                assert_eq!(e.exponent.constant, Rational::from_integer(0));
            } else {
                assert_eq!(e.exponent.constant, Rational::from_integer(t as i64));
            }
        }
    }
}

#[test]
fn predicate_examples_by_minor_search() {
    let c4 = Graph::cycle(4);
    assert!(!contains_minor(&c4, &Graph::complete(4)));
    assert!(shape_minor_free(4, 0, 2, 0).unwrap());
    let octahedron = ShapeParams::new(3, 0).to_graph();
    assert!(contains_minor(&octahedron, &Graph::cycle(5)));
    assert!(!shape_minor_free(5, 2, 3, 0).unwrap());
}

#[test]
fn k_of_four_by_scan() {
    let mut best = 0;
    for n in 0..=4 {
        for g in labeled_graphs(n).unwrap() {
            let c = clique_census(&g);
            if n + c.omega <= 4 {
                best = best.max(subset_clique_count(&g));
            }
        }
    }
    assert_eq!(best, 4);
    assert_eq!(count_cliques(&Graph::cycle(4)), BigUint::from(9u8));
}

#[test]
fn wood_values_by_scan() {
    let k3 = Graph::complete(3);
    let best = labeled_graphs(3)
        .unwrap()
        .filter(|g| !contains_minor(g, &k3))
        .map(|g| subset_clique_count(&g))
        .max();
    assert_eq!(best, Some(6));
    assert_eq!(wood_bound(3, 3).unwrap(), BigUint::from(6u8));
    assert_eq!(subset_clique_count(&ShapeParams::new(1, 3).to_graph()), 24);
}

#[test]
fn small_n_boundary_by_scan() {
    for t in 2..=6 {
        let kt = Graph::complete(t);
        let best = labeled_graphs(t)
            .unwrap()
            .filter(|g| !contains_minor(g, &kt))
            .map(|g| subset_clique_count(&g))
            .max()
            .unwrap();
        assert_eq!(BigUint::from(best), small_n_bound(t, t).unwrap().count().clone(), "t = {t}");
    }
}

#[test]
fn social_regressions() {
    assert!(is_social(&Graph::cycle(4)).unwrap().is_social);
    assert!(is_social(&ShapeParams::new(1, 3).to_graph()).unwrap().is_social);
    let star = Graph::star(3);
    let c = clique_census(&star);
    assert_eq!(c.total, BigUint::from(8u8));
    assert_eq!(c.fractions[1], BigRational::new(2.into(), 8.into()));
    assert_eq!(bad_vertices(&star), vec![1, 2, 3]);
}

#[test]
fn contraction_raises_count_on_a_six_vertex_graph() {
    // First 6-vertex graph in labeled order with an adjacent dominating pair whose contraction gains cliques.
    let hit = labeled_graphs(6).unwrap().find(|g| {
        let base = count_cliques(g);
        g.edges().any(|(u, v)| {
            let dominating = (0..6).all(|w| w == u || w == v || g.has_edge(u, w) || g.has_edge(v, w));
            dominating && count_cliques(&g.contract_edge(u, v).unwrap()) > base
        })
    });
    let g = hit.expect("such a graph exists");
    let best = best_contraction_minor(&g).unwrap();
    assert!(best.count > count_cliques(&g));
    assert!(!is_social(&g).unwrap().is_social);
}

#[test]
fn clique_family_copy_counts() {
    for t in 3..=9usize {
        let a = (2 * t).div_ceil(3) - 1;
        assert!(shape_minor_free(t, 0, a, 0).unwrap());
        let size = 2 * a;
        let c = extremal_union_construct(&[ForbiddenMinorSpec::complete(t).unwrap()], size).unwrap();
        assert!(c.count >= BigUint::from(3u8).pow(a as u32));
        assert_eq!(count_cliques(&ShapeParams::new(a, 0).to_graph()), BigUint::from(3u8).pow(a as u32));
    }
}

#[test]
fn graph6_round_trips_every_five_vertex_graph() {
    for n in 0..=5 {
        for g in labeled_graphs(n).unwrap() {
            assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }
}
