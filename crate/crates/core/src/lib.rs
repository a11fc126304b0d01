//! Slide reconfiguration graphs of minimum independent dominating sets.
//!
//! The crate computes i-graphs and α-graphs of small graphs, builds complement
//! seeds whose i-graph is a prescribed theta graph, realizes diamond-free line
//! graphs through their roots, and runs bounded exhaustive seed searches.

pub mod error;
pub mod formats;
pub mod graph;
pub mod independence;
pub mod iso;
pub mod planar;
pub mod reconfig;
pub mod search;
pub mod seeds;

pub use error::{CapExceeded, GraphError, ParseError, PlanarError, ReconfigError};
pub use graph::{
    complement, contains_induced, is_claw_free, is_diamond_free, line_graph, make_named_graph,
    theta, theta_params, Graph, NamedGraph, ThetaSpec, VertexSet,
};
pub use independence::{independence_report, maximal_independent_sets, IndependenceReport};
pub use iso::{canonical_form, is_isomorphic};
pub use planar::{planar_dual, RotationSystem};
pub use reconfig::{alpha_graph, build_slide_graph, i_graph, SlideGraph};
pub use search::{
    confirm_non_realizable, find_seed, scan, verify_table, SearchOptions, SearchReport,
};
pub use seeds::{build_theta_seed_complement, verify_theta_seed, ConstructionTrace, SeedResult};
