use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph on {0} vertices exceeds the 64-vertex capacity")]
    Capacity(usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex set does not induce a cycle of length at least 5")]
    NotACycle,
    #[error("vertex {0} lies on the cycle")]
    VertexOnCycle(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("direct perfection test limited to {limit} vertices, got {n}")]
    DirectTooLarge { n: usize, limit: usize },
    #[error("enumeration bound violated: {0}")]
    EnumerationBounds(String),
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("theorem {0} requires a pattern Y")]
    MissingY(String),
    /// A proved statement failed on a concrete graph (graph6 attached).
    #[error("theorem violated on {graph6}: {reason}")]
    TheoremViolation { graph6: String, reason: String },
}
