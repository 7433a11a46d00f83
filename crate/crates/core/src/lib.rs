//! Exact maximum-weight partial list H-coloring on P5-free graphs.
//!
//! Given a P5-free graph `G` with rational vertex weights, a pattern graph
//! `H` and a list of allowed colors per vertex, [`solve_full`] finds a
//! maximum-weight set of vertices together with a list-respecting
//! homomorphism from the induced subgraph into `H`.
//!
//! ```
//! use p5hom::{solve_full, Graph, Instance, PatternGraph, Weight};
//!
//! let inst = Instance::new(Graph::cycle(5), PatternGraph::complete(2).unwrap());
//! assert_eq!(solve_full(&inst).unwrap().weight, Weight::from_integer(4.into()));
//! ```

pub mod blob;
pub mod connected;
pub mod control;
pub mod error;
pub mod family;
pub mod format;
pub mod generators;
pub mod graph;
pub mod mwis;
pub mod oracle;
pub mod pattern;

/// Exact, non-negative vertex weight.
pub type Weight = num_rational::BigRational;

pub use blob::{build_blob_graph, solve_full, solve_full_with, touches, BlobGraph, PipelineOutcome};
pub use connected::{
    apply_tilde_cleanup, partition_around, solve_base_singleton_lists, solve_connected_case, solve_connected_case_with,
    DominatorPartition, ListState, TildeGuess,
};
pub use control::{Budget, Outcome, SolveOptions, BUDGET_ENV};
pub use error::{Error, Result};
pub use family::{
    build_family, build_family_with, core_region, prune_common_neighbors, prune_non_module_components, Family,
    Provenance,
};
pub use format::{format_weight, parse_instance, parse_solution, parse_weight, write_instance, write_solution};
pub use generators::{generate, trial_spec, Density, GenSpec, GraphFamily, PatternSpec};
pub use graph::{Graph, Vertex, VertexSet};
pub use mwis::{mwis_within, solve_mwis, WeightedGraph};
pub use oracle::{oracle_solve, oracle_solve_capped, subset_enumeration_solve};
pub use pattern::{
    check_coloring, exists_list_hom, list_hom_within, verify_solution, Color, ColorSet, Instance, PatternGraph,
    Solution, Violation, MAX_COLORS,
};
