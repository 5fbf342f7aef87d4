use thiserror::Error;

/// Errors raised by the library.
///
/// `Capacity` and `Budget` are kept apart from `Domain` so that callers never
/// confuse a resource limit with a mathematical answer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph6: {0}")]
    Format(String),
    #[error("graph6: {0}")]
    Length(String),
    #[error("{0}")]
    Domain(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("search budget exceeded: {0}")]
    Budget(String),
    #[error("condition 1 violated at edge ({u}, {v}): no disjoint pair of sets")]
    NoDisjointPair { u: usize, v: usize },
    #[error("invalid certificate: {0}")]
    Certificate(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
