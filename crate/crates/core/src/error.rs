use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: loop edge on vertex {label:?}")]
    Loop { line: usize, label: String },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: String, v: String },
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("header declares {declared} {what}, found {found}")]
    HeaderMismatch {
        what: &'static str,
        declared: usize,
        found: usize,
    },
    #[error("graph6: {0}")]
    Graph6(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("edges {first} and {second} share a vertex")]
    NotAMatching { first: String, second: String },
    #[error("edge index {index} out of range for a graph with {edges} edges")]
    EdgeOutOfRange { index: usize, edges: usize },
    #[error("vertex index {index} out of range for a graph with {vertices} vertices")]
    VertexOutOfRange { index: usize, vertices: usize },
    #[error("invalid matching specification: {0}")]
    MatchingSpec(String),
    #[error("matchings belong to different graphs")]
    GraphMismatch,
    #[error("adjacency is only defined for distinct matchings")]
    SameMatching,
    #[error("edge sequence is not a path: {0}")]
    NotAPath(String),
    #[error("matching has edges with a common neighbour ({first} and {second})")]
    CommonNeighbors { first: String, second: String },
    #[error("graph has {count} matchings, more than the limit of {limit}")]
    TooManyMatchings { count: u128, limit: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
