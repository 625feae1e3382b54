use thiserror::Error;

use crate::graph::MAX_N;

/// Errors raised by graph construction, parsing and the verification harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} is outside 1..={MAX_N}")]
    VertexCount(usize),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),
    #[error("map is not an embedding of the guest into the host")]
    NotAnEmbedding,
    #[error("operation requires at least one edge")]
    Edgeless,
    #[error("parameter {name} = {value} is out of range {range}")]
    OutOfRange {
        name: &'static str,
        value: usize,
        range: String,
    },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("unknown graph tag: {0}")]
    UnknownTag(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn out_of_range<T>(
    name: &'static str,
    value: usize,
    range: impl Into<String>,
) -> Result<T> {
    Err(Error::OutOfRange {
        name,
        value,
        range: range.into(),
    })
}
