use alloc::string::String;

use crate::graph::VertexId;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),

    #[error("vertex {0} of the requested subset is not a vertex of the graph")]
    NotASubset(VertexId),

    #[error("edge {0} is empty")]
    EmptyEdge(String),

    #[error("duplicate edge id {0}")]
    DuplicateEdge(String),

    #[error("not a simple graph: {0}")]
    NotSimple(String),

    #[error("cannot compose: target of the first morphism is not the source of the second")]
    CompositionMismatch,

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("{what} has size {size}, above the brute-force bound {bound}")]
    TooLarge {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("enumeration budget exhausted after {found} embeddings")]
    BudgetExceeded { found: usize },

    #[error("{0}")]
    Domain(String),
}
