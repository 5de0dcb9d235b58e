use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ordered graph must have at least one vertex")]
    EmptyGraph,
    #[error("order {order} exceeds the supported maximum of {max} vertices")]
    OrderTooLarge { order: usize, max: usize },
    #[error("edge {u}-{v} is not a pair 1 <= u < v <= {order}")]
    BadEdge { u: usize, v: usize, order: usize },
    #[error("edge {u}-{v} listed twice")]
    DuplicateEdge { u: usize, v: usize },
    #[error("interval colouring lengths sum to {sum}, expected {order}")]
    ColouringLength { sum: usize, order: usize },
    #[error("complete multipartite graph needs {needed}: {detail}")]
    BadParts { needed: &'static str, detail: String },
    #[error("operation requires interval chromatic number at least {required}, got {actual}")]
    ChromaticTooSmall { required: usize, actual: usize },
    #[error("pattern order {pattern} does not divide host order {host}")]
    Indivisible { pattern: usize, host: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("search budget exhausted before a conclusive answer: {0}")]
    Inconclusive(String),
    #[error("contradiction: {0}")]
    Contradiction(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
