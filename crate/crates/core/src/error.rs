use thiserror::Error;

use crate::graph::NodeId;

/// What went wrong on a single line of a topology file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("missing `nodes <n>` header")]
    MissingHeader,
    #[error("duplicate `nodes` header")]
    DuplicateHeader,
    #[error("node id {node} out of range for {n} nodes")]
    NodeOutOfRange { node: NodeId, n: usize },
    #[error("duplicate link {0}-{1}")]
    DuplicateLink(NodeId, NodeId),
    #[error("self-loop on node {0}")]
    SelfLoop(NodeId),
    #[error("bandwidth must be at least 1")]
    ZeroBandwidth,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid node id {0}")]
    InvalidNode(NodeId),
    #[error("nodes {0} and {1} are not linked")]
    NotLinked(NodeId, NodeId),
    #[error("self-loop on node {0}")]
    SelfLoop(NodeId),
    #[error("duplicate link {0}-{1}")]
    DuplicateLink(NodeId, NodeId),
    #[error("bandwidth must be at least 1")]
    ZeroBandwidth,
    #[error("path has a single node; its bottleneck is undefined")]
    SingleNodePath,
    #[error("path is empty")]
    EmptyPath,
    #[error("path visits node {0} twice")]
    RepeatedNode(NodeId),
    #[error("paths are not internally node-disjoint: {0}")]
    NotDisjoint(String),
    #[error("cannot build a connected simple graph with {n} nodes and {m} links")]
    InfeasibleGraph { n: usize, m: usize },
    #[error("maximum bandwidth must be at least 1")]
    InvalidMaxBandwidth,
    #[error("bandwidth limit must be at least 1")]
    InvalidLimit,
    #[error("source and destination are the same node ({0})")]
    SameEndpoints(NodeId),
    #[error("virtual node ({0},{0}) was never labeled permanent")]
    NotReached(NodeId),
    #[error("path enumeration exceeded the cap of {cap} paths")]
    CapExceeded { cap: usize },
    #[error("graph with {0} nodes is too large for the exhaustive oracle")]
    OracleTooLarge(usize),
    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
