use thiserror::Error;

use crate::multigraph::{EdgeId, VertexId};

/// Errors shared across the crate.
///
/// Recognition failure is not an error (see
/// [`subdouble::RecognizeFailure`](crate::subdouble::RecognizeFailure)); this
/// enum covers violated preconditions and malformed inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    NotKRegular {
        vertex: VertexId,
        degree: usize,
        expected: usize,
    },

    #[error("graph is not simple: edge {edge} is a loop or a parallel duplicate")]
    NotSimple { edge: EdgeId },

    #[error("graph has no edges, so it has no Euler tour")]
    EulerNoEdges,

    #[error("vertex {vertex} has odd degree {degree}, so the graph has no Euler tour")]
    EulerOddDegree { vertex: VertexId, degree: usize },

    #[error("graph is disconnected, so it has no Euler tour")]
    EulerDisconnected,

    #[error("invalid Euler tour: {0}")]
    InvalidTour(String),

    #[error("invalid Hamiltonian cycle: {0}")]
    InvalidCycle(String),

    #[error("bit vector has length {got}, expected one bit per source vertex ({expected})")]
    BijectionLength { expected: usize, got: usize },

    #[error("cycle is not a lift of this tour: {0}")]
    NotALift(String),

    #[error("source graph has a loop (edge {edge}); tour projection needs a loop-free source")]
    SourceHasLoop { edge: EdgeId },

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("invalid subdivided-double labeling: {0}")]
    InvalidLabels(String),

    #[error("invalid family spec: {0}")]
    InvalidFamily(String),
}
