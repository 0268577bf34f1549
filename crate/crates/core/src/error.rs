use thiserror::Error;

use crate::linalg::LinalgError;

/// Errors raised by polytope construction, predicates and searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    /// The input does not span the ambient space.
    #[error("not full-dimensional: {0}")]
    Dimensionality(String),
    /// Malformed input such as duplicate or non-extreme points in strict mode.
    #[error("invalid input: {0}")]
    Validation(String),
    /// An operation was called outside its domain (precondition failure).
    #[error("{0}")]
    Domain(String),
    /// A lemma's conclusion failed on input that satisfies its hypotheses.
    #[error("contradiction: {0}")]
    Contradiction(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// The request is valid but outside what the search supports.
    #[error("capability: {0}")]
    Capability(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
