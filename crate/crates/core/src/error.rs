use thiserror::Error;

use crate::graph::Edge;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex id out of range in pair ({u}, {v}); graph has {vertex_count} vertices")]
    VertexOutOfRange { u: usize, v: usize, vertex_count: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected: vertex {0} is unreachable")]
    Disconnected(usize),
    #[error("invalid landmark set: {0}")]
    InvalidLandmarks(String),
    #[error("invalid silicate parameters: {0}")]
    InvalidSilicate(String),
    #[error("no edge-disjoint tetrahedron cover: edge {0} is not covered")]
    NoTetrahedronCover(Edge),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("construction failed at tetrahedron {index}: needs {wanted} cubic vertices, has {available}")]
    Construction {
        index: usize,
        wanted: usize,
        available: usize,
    },
    #[error("invalid solver options: {0}")]
    InvalidOptions(String),
    #[error("set is not resolving")]
    NotResolving,
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
