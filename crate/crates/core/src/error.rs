use thiserror::Error;

use crate::engine::{Jump, JumpFault};
use crate::graph::graph6::Graph6Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("invalid parameters for `{family}`: {reason}")]
    InvalidParams { family: String, reason: String },

    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{what} is limited to {cap} vertices, graph has {n}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("enumeration supports 1..=7 vertices, got {0}")]
    EnumerationRange(usize),

    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),

    #[error("the game is only defined on connected graphs")]
    Disconnected,

    #[error("illegal jump {jump}: {fault}")]
    IllegalJump { jump: Jump, fault: JumpFault },

    #[error("replay failed at jump #{index} ({jump}): {fault}")]
    Replay {
        index: usize,
        jump: Jump,
        fault: JumpFault,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal strategy failure: {0}")]
    Strategy(String),

    #[error("certificate: {0}")]
    Certificate(String),
}
