use thiserror::Error;

/// Errors raised by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),

    #[error("edge ({0}, {1}) is not incident to the root {2}")]
    NotIncidentToRoot(usize, usize, usize),

    #[error("input graph is not a tree")]
    NotATree,

    #[error("input graph is not connected")]
    Disconnected,

    #[error("resource guard exceeded: {what} (limit {limit})")]
    Guard { what: String, limit: String },

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("symmetric function degree {degree} exceeds the supported bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },

    #[error("polynomial is not symmetric in the requested variables: {0}")]
    NotSymmetric(String),

    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),

    #[error("expected integer coefficients, found {0}")]
    NonInteger(String),

    #[error("polynomial degree {degree} exceeds reversal bound {bound}")]
    ReversalBound { degree: usize, bound: usize },

    #[error("integrality check failed: {0}")]
    Integrality(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown {kind}: {name}")]
    Unknown { kind: &'static str, name: String },

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn guard(what: impl Into<String>, limit: impl ToString) -> Self {
        Error::Guard {
            what: what.into(),
            limit: limit.to_string(),
        }
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
