use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two maps (or diagram layers) do not agree on a shared boundary.
    #[error("boundary mismatch: {0}")]
    Boundary(String),

    /// A diagram layer whose input labels differ from the previous output.
    #[error("boundary mismatch at layer {layer}: expected {expected:?}, found {found:?}")]
    LayerBoundary {
        layer: usize,
        expected: Vec<i64>,
        found: Vec<i64>,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("invalid input: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn syntax(position: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            position,
            message: message.into(),
        }
    }
}
