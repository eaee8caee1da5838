use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("unsupported field order {0}: expected a prime below 256 or one of 4, 8, 9, 16")]
    UnsupportedFieldOrder(u32),

    #[error("K({k},{n}) is outside the supported range n >= 3k")]
    KneserDiameter { k: usize, n: usize },

    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("bound contradiction against `{anchor}`: {detail}")]
    BoundContradiction { anchor: String, detail: String },

    #[error(
        "artifact was computed for graph {expected}, but the supplied graph hashes to {found}"
    )]
    HashMismatch { expected: String, found: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
