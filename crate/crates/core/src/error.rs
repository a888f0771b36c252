use thiserror::Error;

/// Why a graph failed tree validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeDefect {
    Empty,
    Disconnected,
    /// One cycle found in the graph, as a vertex sequence.
    Cycle(Vec<usize>),
}

impl std::fmt::Display for TreeDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TreeDefect::Empty => write!(f, "graph has no vertices"),
            TreeDefect::Disconnected => write!(f, "graph is disconnected"),
            TreeDefect::Cycle(c) => {
                let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                write!(f, "graph contains the cycle {}", parts.join("-"))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("not a tree: {0}")]
    NotATree(TreeDefect),

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("odd cycle of length {0}: odd orientation is only defined for even cycles")]
    OddCycle(usize),

    #[error("graph has {vertices} vertices, over the limit of {limit} for {operation}")]
    SizeLimit {
        operation: &'static str,
        vertices: usize,
        limit: usize,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{0} is not a perfect square")]
    NotPerfectSquare(String),

    #[error("orientation is not Pfaffian: determinant {0} is not a perfect square")]
    NotPfaffian(String),

    #[error("{0} is neither a square nor twice a square")]
    NotSquarish(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("numerical consistency check failed: {0}")]
    NumericalConsistency(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
