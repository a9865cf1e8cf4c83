use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid spider descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("coordinate {0} out of range")]
    CoordinateOutOfRange(String),
    #[error("vertex {id} out of range for {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("set size t must be at least 1")]
    ZeroSize,
    #[error("count overflowed u64 (t = {t}, vertex {vertex})")]
    Overflow { t: usize, vertex: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InjectionError {
    #[error("precondition violated: {0}")]
    Contract(String),
    #[error("full-ladder case reached for legs {i} and {j} of equal length {len}")]
    ImpossibleCase { i: usize, j: usize, len: usize },
    #[error("internal assertion failed: {0}")]
    Assertion(String),
    #[error("legs {0:?} are not in spider order")]
    NotSpiderOrdered(Vec<usize>),
    #[error(transparent)]
    Count(#[from] CountError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EkrError {
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("t = {t} outside 1..={alpha}")]
    SizeOutOfRange { t: usize, alpha: usize },
    #[error(transparent)]
    Count(#[from] CountError),
}
