use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("graph has {vertices} vertices, symmetry enumeration is capped at {cap}")]
    SymmetryCapExceeded { vertices: usize, cap: usize },

    #[error("graph has {0} vertices, at most 64 are supported")]
    TooManyVertices(usize),

    #[error("corpus generation is capped at {cap} vertices, {requested} requested")]
    CorpusTooLarge { requested: usize, cap: usize },

    #[error("vertex class {{{0}}} mixes adjacent and non-adjacent pairs")]
    MixedClass(String),

    #[error("center of hyperedge topped by {{{top}}} is not a clique: {{{center}}}")]
    CenterNotClique { top: String, center: String },

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("hyperedge {hyperedge} has kind {kind}, expected {expected}")]
    WrongHyperedgeKind {
        hyperedge: usize,
        kind: String,
        expected: &'static str,
    },

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph is empty")]
    EmptyGraph,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
