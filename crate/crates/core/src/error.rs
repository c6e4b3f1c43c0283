use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge #{index}: endpoint {vertex} out of range for {n} vertices")]
    VertexOutOfRange { index: usize, vertex: usize, n: usize },

    #[error("edge #{index}: self-loop on vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },

    #[error("vertex {vertex} does not exist (graph has {n} vertices)")]
    NoSuchVertex { vertex: usize, n: usize },

    #[error("cannot identify adjacent vertices {a} and {b} (would create a loop)")]
    AdjacentInGroup { a: usize, b: usize },

    #[error("vertex {vertex} appears in more than one identification group")]
    OverlappingGroups { vertex: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has no edges")]
    Edgeless,

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is neither P5-free nor (P4+K1)-free")]
    NotInClass,

    #[error("search budget exhausted")]
    Exhausted,

    #[error("internal failure: {0}")]
    Internal(String),

    #[error("parse error (line {line}): {message}")]
    Parse { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
