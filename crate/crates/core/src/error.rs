use thiserror::Error;

/// Errors raised by the decomposition utilities, the counting engines and the oracles.
///
/// Vertex ids carried by the variants are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("bag index {index} is out of range ({bag_count} bags)")]
    BagOutOfRange { index: usize, bag_count: usize },

    #[error("bag tree is not a tree: {0}")]
    NotATree(String),

    #[error("vertex {0} is not contained in any bag")]
    VertexUncovered(usize),

    #[error("edge {{{0}, {1}}} is not contained in any bag")]
    EdgeUncovered(usize, usize),

    #[error("bags containing vertex {0} do not induce a connected subtree")]
    ConnectivityViolated(usize),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("decomposition width {width} exceeds the configured limit {limit}")]
    WidthLimitExceeded { width: usize, limit: usize },

    #[error("vertex {vertex} has out-degree {out_degree} > {vertex_count}")]
    OutDegreeExceedsN {
        vertex: usize,
        out_degree: usize,
        vertex_count: usize,
    },

    #[error("invalid gadget endpoints: {0}")]
    InvalidEndpoints(String),

    #[error("input size {size} exceeds the oracle limit {limit}")]
    DimensionTooLarge { size: usize, limit: usize },

    #[error("graph has {edges} edges, more than the limit {limit}")]
    EdgeLimitExceeded { edges: usize, limit: usize },

    #[error("self-loop at vertex {0} is not supported for undirected Euler tours")]
    SelfLoopUnsupported(usize),

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
}

impl Error {
    /// The variant name, used verbatim in CLI error output.
    pub fn name(&self) -> &'static str {
        match self {
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::BagOutOfRange { .. } => "BagOutOfRange",
            Error::NotATree(_) => "NotATree",
            Error::VertexUncovered(_) => "VertexUncovered",
            Error::EdgeUncovered(..) => "EdgeUncovered",
            Error::ConnectivityViolated(_) => "ConnectivityViolated",
            Error::InvalidDecomposition(_) => "InvalidDecomposition",
            Error::WidthLimitExceeded { .. } => "WidthLimitExceeded",
            Error::OutDegreeExceedsN { .. } => "OutDegreeExceedsN",
            Error::InvalidEndpoints(_) => "InvalidEndpoints",
            Error::DimensionTooLarge { .. } => "DimensionTooLarge",
            Error::EdgeLimitExceeded { .. } => "EdgeLimitExceeded",
            Error::SelfLoopUnsupported(_) => "SelfLoopUnsupported",
            Error::NotMonic => "NotMonic",
            Error::NotSquare { .. } => "NotSquare",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
