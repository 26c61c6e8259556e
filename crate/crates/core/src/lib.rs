//! Edge metric dimension of chain and cyclic silicate networks.
//!
//! The crate generates silicate networks, verifies vertex and edge resolving
//! sets, decomposes networks into tetrahedra and twin tetrahedra, builds the
//! explicit edge resolving sets given by a per-tetrahedron labeling, and
//! certifies minimum sizes with an exact search.

pub mod construct;
pub mod error;
pub mod graph;
pub mod report;
pub mod resolve;
pub mod silicate;
pub mod solver;
pub mod structure;

pub use construct::{
    construct_ers, construct_ers_by, labeling_chain, labeling_cyclic, labeling_for, predicted_dimension, Labeling,
};
pub use error::{Error, Result};
pub use graph::{edge_vertex_distance, Distance, DistanceMatrix, Edge, Graph};
pub use resolve::{
    edge_code, edge_code_table, edge_resolving_with, is_edge_resolving, is_vertex_resolving, vertex_code,
    vertex_code_table, vertex_resolving_with, Code, Collision, LandmarkSet, VerificationResult,
};
pub use silicate::{chain_silicate, cyclic_silicate, silicate_of_skeleton, Family, LabeledSilicate, SilicateSpec};
pub use solver::{
    exact_edge_metric_dimension, exact_metric_dimension, is_minimal, Certificate, Pool, SolveOptions, SolveStats,
    Status, Target,
};
pub use structure::{
    check_necessary, check_sufficient, find_tetrahedra, find_twins, lemma_lower_bound, ConditionReport, Decomposition,
    Tetrahedron, TetrahedronKind, TwinTetrahedron,
};
