//! Matchings of a simple graph as vertices of the matching polytope.
//!
//! Two matchings are adjacent on the polytope's skeleton exactly when their
//! symmetric difference is a single path or cycle. This crate enumerates the
//! matchings of a graph, builds that skeleton, and computes vertex degrees
//! three ways:
//!
//! * by scanning every pair of matchings ([`build_skeleton_pairwise`]),
//! * by counting alternating "good" paths and cycles ([`degree_of_matching`]),
//! * by a closed form valid for matchings whose edges share no adjacent edge
//!   ([`degree_closed_form`]).
//!
//! [`verify_all`] cross-checks all three and the structural facts that follow
//! from them (minimum degree, regularity, minimum-degree matchings).
//!
//! ```
//! use matchpoly::{build_skeleton, examples};
//!
//! let k3 = examples::complete(3);
//! let s = build_skeleton(&k3, 100).unwrap();
//! assert_eq!((s.vertex_count(), s.edge_count()), (4, 6));
//! ```
//!
//! With the default `parallel` feature, per-matching work runs on rayon; see
//! [`Execution`].

pub mod edgeset;
mod error;
pub mod examples;
mod exec;
pub mod export;
pub mod generate;
pub mod good;
pub mod graph;
pub mod io;
pub mod matching;
pub mod skeleton;
pub mod verify;

pub use edgeset::EdgeSet;
pub use error::{Error, ParseError, Result};
pub use exec::Execution;
pub use export::{export_dot, Report};
pub use good::{
    classify_alternating_path, degree_of_matching, enumerate_good_cycles, enumerate_good_paths,
    neighbors_of_matching, AlternatingStructure, DegreeBreakdown, StructureKind,
};
pub use graph::{EdgeId, Graph, StarsTrianglesDecomposition, VertexId};
pub use io::{emit_graph6, parse_edge_list, parse_graph, parse_graph6, InputFormat};
pub use matching::{
    classify_adjacency, count_matchings, enumerate_matchings, has_common_neighbors,
    is_adjacent_by_connectivity, make_matching, parse_matching, saturated_vertices,
    symmetric_difference, AdjacencyWitness, Matching, WitnessKind,
};
pub use skeleton::{
    build_skeleton, build_skeleton_pairwise, build_skeleton_pairwise_with, build_skeleton_with,
    check_matching_cap, degree_closed_form, is_min_degree_matching, predict_regular,
    ClosedFormBreakdown, SkeletonGraph, SkeletonStats, DEFAULT_MAX_VERTICES,
};
pub use verify::{verify_all, verify_with, Check, VerificationReport, VerifyOptions};
