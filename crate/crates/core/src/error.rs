use thiserror::Error;

use crate::quiver::Vertex;

/// Errors surfaced by the library. Computation-domain failures (oversize
/// inputs, out-of-scope requests) are distinguished from malformed data so the
/// CLI can map them to different exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(Vertex),
    #[error("duplicate arrow {0} -> {1}")]
    DuplicateArrow(Vertex, Vertex),
    #[error("arrow endpoint {0} is not a vertex")]
    MissingEndpoint(Vertex),
    #[error("vertex {0} is not in the quiver")]
    UnknownVertex(Vertex),
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("dimension vector has a negative entry at {0}")]
    NegativeDimension(Vertex),
    #[error("dimension vector is zero")]
    ZeroDimensionVector,
    #[error("window is not a disjoint union of Dynkin diagrams")]
    NonDynkinWindow,
    #[error("the delta vector is only defined for the infinite families")]
    DeltaUndefined,
    #[error("operation requires a type-A quiver")]
    NotTypeA,
    #[error("oracle scope: {0}")]
    OracleScope(String),
    #[error("representation fails its relation check: {0}")]
    RelationCheckFailed(String),
    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),
    #[error("vertex {0} has a loop; reflection functors need a loop-free vertex")]
    LoopVertex(Vertex),
    #[error("Young diagram too large: size {0} exceeds the supported bound {1}")]
    DiagramTooLarge(usize, usize),
    #[error("invalid Young diagram: {0}")]
    InvalidDiagram(String),
    #[error("partition/diagram mismatch: {0}")]
    PartitionMismatch(String),
    #[error("invalid module data: {0}")]
    InvalidModule(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
