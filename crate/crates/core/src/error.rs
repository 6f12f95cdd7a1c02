use std::time::Duration;

use thiserror::Error;

use crate::antiresolve::AdimReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph is disconnected")]
    DisconnectedGraph,

    #[error("graph is not a tree")]
    NotATree,

    #[error("graph is not geodetic: vertices {0} and {1} are joined by several shortest paths")]
    NotGeodetic(usize, usize),

    #[error("graph is not a block graph")]
    NotBlockGraph,

    #[error("vertex set must be nonempty")]
    EmptySet,

    #[error("vertex set must leave at least one vertex outside")]
    FullSet,

    #[error("graph of order {order} exceeds the limit of {limit}")]
    TooLarge { order: usize, limit: usize },

    #[error("order {order} exceeds the built-in enumeration cap of {cap}; stream larger orders as graph6 (e.g. from nauty geng) instead")]
    OrderTooLarge { order: usize, cap: usize },

    #[error("factor of order {0} is too small")]
    FactorTooSmall(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{0} is not an edge")]
    NotAnEdge(String),

    #[error("graph6: bad header")]
    BadHeader,

    #[error("graph6: truncated adjacency bits")]
    TruncatedBits,

    #[error("graph6: trailing garbage after adjacency bits")]
    TrailingGarbage,

    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("budget of {limit:?} exceeded")]
    BudgetExceeded {
        limit: Duration,
        partial: Box<AdimReport>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
