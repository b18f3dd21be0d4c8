use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A word did not parse, or its symbols do not fit the alphabet.
    #[error("invalid word {input:?}: {reason}")]
    InvalidWord { input: String, reason: String },

    /// A word has the wrong length or alphabet for the instance it was used with.
    #[error("word {word:?} does not fit {spec}: {reason}")]
    WordSpecMismatch {
        word: String,
        spec: String,
        reason: String,
    },

    /// Family parameters outside the supported range (d >= 2, l >= 2).
    #[error("invalid family parameters: {0}")]
    InvalidSpec(String),

    /// A digraph builder was handed malformed input.
    #[error("invalid digraph: {0}")]
    InvalidDigraph(String),

    /// An operation that needs strong connectivity found an unreachable pair.
    #[error("digraph is not strongly connected: no path from {from} to {to}")]
    NotStronglyConnected { from: String, to: String },

    /// No path was found within the search bound.
    #[error("no path from {from} to {to} within {limit} steps")]
    Unreachable {
        from: String,
        to: String,
        limit: usize,
    },

    /// An exhaustive search would exceed its guard.
    #[error("search space too large: {0}")]
    GuardExceeded(String),

    /// The requested operation has no meaning for this family.
    #[error("unsupported operation: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
