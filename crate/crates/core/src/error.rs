use thiserror::Error;

/// Errors produced by graph construction, Kemeny computations and the
/// centrality pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: weight must be positive, got {weight}")]
    NonPositiveWeight { line: usize, weight: f64 },

    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: u64, v: u64 },

    #[error("invalid adjacency matrix: {0}")]
    InvalidAdjacency(String),

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("edge ({0}, {1}) is not present")]
    MissingEdge(usize, usize),

    #[error("edge ({0}, {0}) is a loop")]
    LoopEdge(usize),

    #[error("edge ({0}, {1}) is not a cut-edge")]
    NotCutEdge(usize, usize),

    #[error("invalid parameter `{name}`: {detail}")]
    InvalidParameter { name: &'static str, detail: String },

    #[error("input of size {n} exceeds the enumeration limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("graph has non-unit edge weights or loops")]
    NotSimpleUnweighted,

    #[error("graph is not a tree")]
    NotATree,

    #[error("singular linear system: {0}")]
    Singular(String),

    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    #[error("hitting times depend on the start vertex (spread {0:e})")]
    OracleMismatch(f64),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, detail: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        detail: detail.into(),
    }
}
