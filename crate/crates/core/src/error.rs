use thiserror::Error;

/// Errors produced by graph construction and the analyses built on top of it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: malformed line: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: loop detected at vertex {vertex}")]
    LoopDetected { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {{{u},{v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge index {index} out of range (m = {m})")]
    EdgeOutOfRange { index: usize, m: usize },
    #[error("a cycle length bound is required for graphs with more than {max_vertices} vertices")]
    CycleBoundRequired { max_vertices: usize },
    #[error("not a cycle of the graph: {0}")]
    NotACycle(String),
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
    #[error("walk yields the zero binomial")]
    DegenerateWalk,
    #[error("{what}: {size} exceeds the configured cap of {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },
    #[error("integer overflow during exact elimination")]
    Overflow,
    #[error("degree bound {bound} is too small: generators of degree {needed} exist")]
    BoundTooSmall { bound: usize, needed: usize },
    #[error("invalid degree vector: {0}")]
    InvalidDegree(String),
    #[error("invalid dimension set: {0}")]
    InvalidDimensionSet(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
