use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("edge ({0}, {1}) joins two vertices on the same side")]
    SameSideEdge(String, String),
    #[error("vertex index {index} out of range (side has {count} vertices)")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("vertex label `{0}` declared more than once")]
    DuplicateVertex(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("graph is not bipartite: odd cycle through `{0}`")]
    NotBipartite(String),
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("matching does not belong to this graph")]
    ForeignMatching,
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("invalid alternating path: {0}")]
    InvalidPath(String),
    #[error("edge order is not a permutation of the graph's edges")]
    NotAPermutation,
    #[error("augmenting-path search must start at an unsaturated vertex, {0} is saturated")]
    SaturatedStart(VertexId),
    #[error("vertex set is not a vertex cover")]
    NotACover,
    #[error("vertex set is not a minimum vertex cover")]
    NotMinimumCover,
    #[error("no matching of the lower split saturates the cover side")]
    SaturationImpossible,
    #[error("reverse procedure produced a matching whose cover differs from the input cover")]
    RoundTripFailed,
    #[error("path is not augmenting for the matching")]
    NotAugmenting,
    #[error("more than {limit} augmenting paths")]
    PathExplosion { limit: usize },
    #[error("malformed path structure: {0}")]
    MalformedStructure(String),
    #[error("matching is not maximal")]
    NotMaximal,
    #[error("graph has no vertices on one side")]
    EmptyGraph,
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Parse and I/O failures, as opposed to violated domain preconditions.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::Json(_)
                | Error::Io(_)
                | Error::UnknownLabel(_)
                | Error::DuplicateVertex(_)
                | Error::SameSideEdge(..)
                | Error::IndexOutOfRange { .. }
                | Error::NotBipartite(_)
                | Error::SelfLoop(_)
        )
    }
}
