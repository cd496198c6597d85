//! Graph I/O, small-graph enumeration, and the verification suites.
//!
//! Each suite runs a claim exhaustively over a parameter range and reports a
//! [`VerificationResult`]; a failing result carries a reproducible
//! counterexample in edge-list form.

mod enumerate;
mod io;
mod suites;

pub use enumerate::{
    are_isomorphic, connected_graphs_up_to_isomorphism, graph_from_mask, labeled_graphs, vertex_pairs,
    LABELED_GUARD,
};
pub use io::{parse_edge_list, parse_graph, parse_graph6, serialize_graph, to_edge_list, to_graph6, GraphFormat};
pub use suites::{
    best_shape_union, run_suite, Counterexample, SuiteParams, VerificationResult, SCHEMA_VERSION, SUITES,
};
