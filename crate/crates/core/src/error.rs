use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by the library.
///
/// [`Error::Internal`] is special: it is never a valid answer and signals a
/// broken invariant in this crate (the CLI maps it to exit code 2, all other
/// variants to exit code 1).
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("no-incoming-edge: node {0}")]
    NoIncomingEdge(usize),
    #[error("reserved-label: node {0}")]
    ReservedLabel(usize),
    #[error("node {0} out of range")]
    NodeOutOfRange(usize),
    #[error("sentinel label already present on node {0}")]
    SentinelPresent(usize),
    #[error("graph is empty: nothing to index")]
    EmptyGraph,
    #[error("graph mismatch: {0}")]
    GraphMismatch(String),
    #[error("sorted position out of range: {0}")]
    PositionOutOfRange(usize),
    #[error("index document error: {0}")]
    Document(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
