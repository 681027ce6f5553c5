use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("{0} is not an edge of the graph")]
    NotAnEdge(String),
    #[error("loops are not allowed here: {0}")]
    LoopNotAllowed(String),
    #[error("graph has no non-loop edge")]
    Edgeless,
    #[error("cut side must be a nonempty proper subset of the vertices")]
    TrivialSide,
    #[error("vertex sets overlap")]
    Overlap,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error("restricted edge-connectivity is infinite")]
    InfiniteLambdaPrime,
    #[error("order {order} exceeds budget {budget}")]
    OverBudget { order: usize, budget: usize },
    #[error("time cap exceeded")]
    TimedOut,
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("invalid corpus spec `{0}`")]
    CorpusSpec(String),
    #[error("io error on {path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
