use thiserror::Error;

/// Errors raised by graph operations, solvers and parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} is a terminal and may not be cut or shorted")]
    TerminalImmutable(usize),

    #[error("vertex {0} has already been removed")]
    NotAlive(usize),

    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graph order {0} exceeds the supported maximum of 128")]
    OrderTooLarge(usize),

    #[error("vertex {0} is a terminal; terminals can neither threaten nor be threatened")]
    TerminalInSet(usize),

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("{what} has size {size}, above the exhaustive-search cap of {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("malformed graph6 record {record}: {reason}")]
    MalformedGraph6 { record: usize, reason: String },

    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

impl Error {
    /// True for errors caused by unreadable input, as opposed to valid input
    /// that fails an analysis precondition.
    pub fn is_malformed_input(&self) -> bool {
        matches!(
            self,
            Error::MalformedGraph6 { .. }
                | Error::Parse { .. }
                | Error::SelfLoop(_)
                | Error::OrderTooLarge(_)
                | Error::VertexOutOfRange { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
