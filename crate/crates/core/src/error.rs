use thiserror::Error;

/// Errors raised by the topology, automorphism and analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An index (dimension, vertex, label value) fell outside its valid range.
    #[error("out of range: {0}")]
    Range(String),
    /// Arguments violate an operation's contract (mismatched dimensions,
    /// illegal pairings, non-edges, ...).
    #[error("contract violation: {0}")]
    Contract(String),
    /// The operation's precondition on its parameters does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// Materialization would exceed a configured size cap.
    #[error("resource limit: {what} {requested} exceeds cap {cap}")]
    Resource {
        what: &'static str,
        requested: u64,
        cap: u64,
    },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
