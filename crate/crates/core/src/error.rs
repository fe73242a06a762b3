use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {u} {v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {vertex} repeated")]
    DuplicateVertex { vertex: usize },
}

/// Parse failure, naming the offending line (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}{}", if .content.is_empty() { String::new() } else { format!(" ('{}')", .content) })]
pub struct ParseError {
    pub line: usize,
    pub content: String,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, content: &str, message: String) -> Self {
        ParseError {
            line,
            content: content.trim().to_string(),
            message,
        }
    }
}

/// Violated precondition of a library routine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreconditionError {
    #[error("{0}")]
    Violated(String),
}

impl PreconditionError {
    pub(crate) fn new(msg: impl Into<String>) -> Self {
        PreconditionError::Violated(msg.into())
    }
}
