//! Exact clique counting for graphs with forbidden minors.
//!
//! The crate covers the computational side of bounding the number of cliques
//! in `H`-minor-free graphs:
//!
//! - [`clique`]: clique censuses by the peeling process, with exact per-vertex fractions;
//! - [`matching`]: maximum matchings in general graphs, used for the missing-matching size `x(H)`;
//! - [`minor`]: minor search with witness models and exact / dense Hadwiger numbers;
//! - [`extremal`]: the minor-freeness predicate for complement-of-matching shapes, the
//!   integer and linear programs over shapes, lower envelopes, and closed-form bounds;
//! - [`social`]: social-graph checks, bad vertices and structure verification;
//! - [`harness`]: graph I/O, labeled-graph enumeration and the verification suites.
//!
//! Counting kernels are generic over a [`CliqueCount`] accumulator and envelope
//! geometry over an [`EnvelopeScalar`]; the aliases below fix the concrete types
//! the rest of the crate uses.

pub mod clique;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod harness;
pub mod matching;
pub mod minor;
pub mod scalar;
pub mod social;

pub use clique::{clique_census, count_cliques, count_cliques_naive, CliqueCensus};
pub use error::{Error, Result};
pub use extremal::{ForbiddenMinorSpec, LowerEnvelope, ShapeOptimum};
pub use graph::{Graph, ShapeParams};
pub use matching::{maximum_matching, missing_matching_size, Matching};
pub use minor::{find_minor_model, hadwiger_dense, hadwiger_exact, MinorModel, MinorSearch};
pub use scalar::{CliqueCount, EnvelopeScalar, ExactRational};

/// Exact rational used for envelope coordinates.
pub type Rational = num_rational::Ratio<i64>;

/// Arbitrary-precision rational used for clique fractions.
pub type BigRational = num_rational::BigRational;

/// Arbitrary-precision clique count.
pub type Count = num_bigint::BigUint;

/// Lower envelope with exact coordinates; every decision in the crate uses this one.
pub type ExactEnvelope = LowerEnvelope<Rational>;

/// Floating-point envelope, for display and independent cross-checks.
pub type FloatEnvelope = LowerEnvelope<f64>;
