use thiserror::Error;

use crate::graph6::Graph6Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error(transparent)]
    Graph6(#[from] Graph6Error),

    #[error("vertex set is empty")]
    EmptySet,

    #[error("vertex set {0:?} does not induce a connected subgraph")]
    DisconnectedSet(Vec<usize>),

    #[error("vertex set {0:?} is not a clique")]
    NotAClique(Vec<usize>),

    #[error("{u}{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },

    #[error("graph has an independent set of size 3: {0:?}")]
    AlphaAtLeastThree([usize; 3]),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid packing: {0}")]
    InvalidPacking(String),

    /// A step the underlying proof guarantees did not go through. Carries a
    /// dump of the state at the point of failure.
    #[error("invariant violation: {0}")]
    Invariant(String),

    #[error("brute-force oracle infeasible: {n} vertices exceeds cap {cap} for a target with {k} branch sets")]
    OracleCap { n: usize, k: usize, cap: usize },

    #[error("search deadline exceeded")]
    Timeout,

    #[error("provenance chain inconsistent: {0}")]
    Provenance(String),

    #[error("enumeration cap exceeded: n = {n}, cap = {cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("unknown graph name `{0}`")]
    UnknownNamed(String),

    #[error("invalid parameters for `{name}`: {reason}")]
    InvalidParams { name: String, reason: String },
}
