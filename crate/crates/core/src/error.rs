use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one node")]
    EmptyGraph,
    #[error("graph has {nodes} nodes, more than the supported {max}")]
    TooManyNodes { nodes: usize, max: usize },
    #[error("invalid edge ({from}, {to}): {reason}")]
    InvalidEdge {
        from: usize,
        to: usize,
        reason: &'static str,
    },
    #[error("graph is not connected: node {to} is unreachable from node {from}")]
    NotConnected { from: usize, to: usize },
    #[error("cannot combine a directed graph with an undirected one")]
    MixedDirectedness,
    #[error("bad family parameters: {0}")]
    BadParams(String),
    #[error("node {0} is out of range")]
    NodeOutOfRange(usize),
    #[error("dimension mismatch: expected {expected} entries, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("goal distribution must be positive, but node {node} demands 0 pebbles")]
    NonPositiveGoal { node: usize },
    #[error("node {node} holds {have} pebbles, a move needs at least 2")]
    InsufficientPebbles { node: usize, have: u64 },
    #[error("({from}, {to}) is not an edge")]
    NotAnEdge { from: usize, to: usize },
    #[error("no pebble of value {value} on node {node}")]
    ValueNotPresent { node: usize, value: u64 },
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
    #[error("search budget of {max_states} states exceeded")]
    BudgetExceeded { max_states: u64 },
    #[error("proof step violated: {0}")]
    ProofViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
}
