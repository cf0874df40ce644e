use thiserror::Error;

use crate::types::{Edge, Face, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("expected {expected_edges} edges and {expected_faces} faces, found {edges} edges and {faces} faces")]
    EulerViolation {
        edges: usize,
        faces: usize,
        expected_edges: usize,
        expected_faces: usize,
    },
    #[error("edge {edge} lies on {count} faces, expected exactly 2")]
    NonManifold { edge: Edge, count: usize },
    #[error("edge set is not planar")]
    NotPlanar,
    #[error("face {0} listed more than once")]
    DuplicateFace(Face),
    #[error("face {0:?} does not have three distinct corners")]
    InvalidFace([VertexId; 3]),
    #[error("edge endpoints must be distinct, got {0} twice")]
    Loop(VertexId),
    #[error("edge {0} is not present")]
    EdgeNotPresent(Edge),
    #[error("face {0} is not present")]
    FaceNotPresent(Face),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("need at least {min} vertices, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    DegreeNot3 { vertex: VertexId, degree: usize },
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
    #[error("no dual path from {from} to {to}")]
    NoPath { from: Face, to: Face },
    #[error("vertex counts differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("search exhausted after visiting {visited} triangulations")]
    SearchExhausted { visited: usize },
    #[error("more than {budget} triangulations")]
    BudgetExceeded { budget: usize },
    #[error("n = {n} outside supported range {min}..={max}")]
    NOutOfRange { n: usize, min: usize, max: usize },
    #[error("no triangulation contains every forced edge")]
    NoFeasible,
    #[error("weight for edge {edge} must be finite and nonnegative")]
    InvalidWeight { edge: Edge },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: edge {edge} listed twice")]
    DuplicateEdge { line: usize, edge: Edge },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    IndexOutOfRange {
        line: usize,
        vertex: VertexId,
        n: usize,
    },
    #[error("move {index} failed: {source}")]
    MoveFailed { index: usize, source: Box<Error> },
    #[error("malformed document: {0}")]
    Format(String),
}
