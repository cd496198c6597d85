//! The optimization layer over complement-of-matching shapes.
//!
//! A connected forbidden minor `H` enters only through `(t, x)`: its vertex
//! count and the size of a maximum matching in its complement. The shape
//! `K(a, b)` is `H`-minor-free iff `3a + 2b < 2t - x` when `a >= x`, and iff
//! `2a + b < t` when `a < x`. Everything here is built on that predicate.

mod bounds;
mod construct;
mod envelope;
mod optimum;
mod predicate;

pub use bounds::{k_s_bound, small_n_bound, wood_bound, KsBound, SmallNBound};
pub use construct::{extremal_union_construct, UnionConstruction};
pub use envelope::{EnvelopePoint, LowerEnvelope};
pub use optimum::{
    compare_shape_values, extremal_exponent, family_ip_optimum, single_minor_optimum, Exponent,
    ExtremalExponent, LpOptimum, ShapeOptimum,
};
pub use predicate::{b_cap, family_b_cap, floor_form_minor_free, shape_minor_free};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::missing_matching_size;

/// A forbidden minor reduced to its invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenMinorSpec {
    /// The minor itself, when known. Optimizer-only workflows may omit it.
    pub graph: Option<Graph>,
    /// Vertex count.
    pub t: usize,
    /// Maximum matching size in the complement.
    pub x: usize,
    pub connected: bool,
}

impl ForbiddenMinorSpec {
    pub fn from_graph(h: &Graph) -> Result<Self> {
        if h.vertex_count() == 0 {
            return Err(Error::input("forbidden minor must have at least one vertex"));
        }
        Ok(ForbiddenMinorSpec {
            t: h.vertex_count(),
            x: missing_matching_size(h),
            connected: h.is_connected(),
            graph: Some(h.clone()),
        })
    }

    /// A connected minor known only by `(t, x)`.
    pub fn from_params(t: usize, x: usize) -> Result<Self> {
        check_params(t, x)?;
        Ok(ForbiddenMinorSpec {
            graph: None,
            t,
            x,
            connected: true,
        })
    }

    pub fn complete(t: usize) -> Result<Self> {
        Self::from_graph(&Graph::complete(t))
    }

    pub fn params(&self) -> (usize, usize) {
        (self.t, self.x)
    }
}

pub(crate) fn check_params(t: usize, x: usize) -> Result<()> {
    if t == 0 {
        return Err(Error::input("t must be at least 1"));
    }
    if x > t / 2 {
        return Err(Error::input(format!("x = {x} exceeds floor(t/2) = {}", t / 2)));
    }
    Ok(())
}

/// Family operations need a nonempty family of connected minors.
pub(crate) fn check_family(family: &[ForbiddenMinorSpec]) -> Result<()> {
    if family.is_empty() {
        return Err(Error::input("forbidden-minor family is empty"));
    }
    for spec in family {
        check_params(spec.t, spec.x)?;
        if !spec.connected {
            return Err(Error::input(format!(
                "forbidden minor with t = {} is disconnected; only connected minors are supported",
                spec.t
            )));
        }
    }
    Ok(())
}
