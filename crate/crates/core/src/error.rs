use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyVertexSet,

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("graph has no edges")]
    NoEdges,

    #[error("vertex subset is empty")]
    EmptySubset,

    #[error("{0} is not an edge of the graph")]
    NotAnEdge(crate::graph::EdgeId),

    #[error("vertex sequence {0:?} is not an induced path")]
    NotInducedPath(Vec<usize>),

    #[error("path must have at least {required} vertices, got {actual}")]
    PathTooShort { required: usize, actual: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("operation needs at least {required} vertices, graph has {actual}")]
    TooFewVertices { required: usize, actual: usize },

    #[error("{what} is limited to {bound}, input has {actual}")]
    BoundExceeded {
        what: &'static str,
        bound: usize,
        actual: usize,
    },

    #[error("not a permutation of the vertex set: {0}")]
    InvalidOrdering(String),

    #[error("graph is not chordal")]
    NotChordal,

    #[error("supergraph does not contain edge {0}")]
    NotSupergraph(crate::graph::EdgeId),

    #[error("weights: {0}")]
    InvalidWeights(String),

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("complement of the graph is not bipartite")]
    NotCobipartite,

    #[error("graph has no bisimplicial elimination ordering; use the brute-force solver")]
    NoBisimplicialOrdering,

    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),

    #[error("invalid flow network: {0}")]
    InvalidNetwork(String),

    #[error("literal refers to variable {var}, instance has {count}")]
    LiteralOutOfRange { var: usize, count: usize },

    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),

    #[error("fixture {name}: annotation check failed: {detail}")]
    FixtureMismatch { name: String, detail: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    /// True for errors raised because an input exceeds a configured size bound.
    pub fn is_bound_exceeded(&self) -> bool {
        matches!(self, Error::BoundExceeded { .. })
    }
}
