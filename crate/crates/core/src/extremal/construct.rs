use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{Graph, ShapeParams};

use super::predicate::family_b_cap;
use super::{check_family, ForbiddenMinorSpec};

/// A disjoint union of complement-of-matching shapes on exactly `n` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnionConstruction {
    pub n: usize,
    /// Pieces in nonincreasing order of size.
    pub pieces: Vec<ShapeParams>,
    /// Cliques in the union, empty clique included.
    pub count: BigUint,
}

impl UnionConstruction {
    pub fn to_graph(&self) -> Graph {
        let parts: Vec<Graph> = self.pieces.iter().map(|s| s.to_graph()).collect();
        Graph::disjoint_union(&parts)
    }

    /// Distinct pieces with their multiplicities, in piece order.
    pub fn multiplicities(&self) -> Vec<(ShapeParams, usize)> {
        let mut out: Vec<(ShapeParams, usize)> = Vec::new();
        for &p in &self.pieces {
            match out.last_mut() {
                Some((q, k)) if *q == p => *k += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

/// Most cliques achievable by a disjoint union of family-feasible shapes on `n` vertices.
///
/// Each piece `K(a, b)` contributes `3^a 2^b - 1` nonempty cliques. Connected
/// minors cannot straddle components, so the union stays minor-free.
pub fn extremal_union_construct(family: &[ForbiddenMinorSpec], n: usize) -> Result<UnionConstruction> {
    check_family(family)?;
    if n == 0 {
        return Ok(UnionConstruction {
            n,
            pieces: Vec::new(),
            count: BigUint::from(1u8),
        });
    }
    if family_b_cap(family, 0).map_or(true, |b| b == 0) {
        return Err(Error::input("the family forbids K1, so no graph on n >= 1 vertices qualifies"));
    }

    // Best piece of each size; ties keep the smaller a.
    let mut piece: Vec<Option<(ShapeParams, BigUint)>> = vec![None; n + 1];
    for a in 0..=n / 2 {
        let Some(cap) = family_b_cap(family, a) else { break };
        for b in 0..=cap.min(n - 2 * a) {
            let size = 2 * a + b;
            if size == 0 {
                continue;
            }
            let value = BigUint::from(3u8).pow(a as u32) * BigUint::from(2u8).pow(b as u32) - 1u8;
            if piece[size].as_ref().map_or(true, |(_, v)| value > *v) {
                piece[size] = Some((ShapeParams::new(a, b), value));
            }
        }
    }

    let mut best: Vec<BigUint> = vec![BigUint::default(); n + 1];
    let mut choice = vec![0usize; n + 1];
    for m in 1..=n {
        let mut found = false;
        for s in 1..=m {
            if let Some((_, v)) = &piece[s] {
                let cand = &best[m - s] + v;
                if !found || cand > best[m] {
                    best[m] = cand;
                    choice[m] = s;
                    found = true;
                }
            }
        }
    }

    let mut pieces = Vec::new();
    let mut m = n;
    while m > 0 {
        let s = choice[m];
        pieces.push(piece[s].as_ref().expect("chosen size has a piece").0);
        m -= s;
    }
    pieces.sort_by(|p, q| q.vertex_count().cmp(&p.vertex_count()).then(q.cmp(p)));
    Ok(UnionConstruction {
        n,
        pieces,
        count: &best[n] + 1u8,
    })
}
