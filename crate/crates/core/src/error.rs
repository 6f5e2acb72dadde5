use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("construction requires minimum degree at least 2, got {0}")]
    MinDegreeTooSmall(usize),
    #[error("unknown problem tag `{0}`")]
    UnknownProblemTag(String),
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("bouquet cycle length {0} is not an odd integer >= 3")]
    EvenCycleLength(usize),
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("cannot add {requested} extra edges to a tree on {n} vertices (at most {available})")]
    TooManyEdges {
        n: usize,
        requested: usize,
        available: usize,
    },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("vertex {root} cannot serve as root here: {reason}")]
    InvalidRoot { root: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
