use std::fmt;

use thiserror::Error;

/// The exhaustive routines each carry their own size cap; a breach names
/// which one so callers can raise the right knob.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cap {
    /// Vertex count of any [`Graph`](crate::Graph).
    GraphOrder,
    /// Unweighted subset-table searches (PD, MNPD, 2-division).
    Exhaustive,
    /// Per-weight-function searches.
    Weighted,
    /// Enumeration of every weight function with values in `1..=W`.
    BoundedWeight,
    /// Exact chromatic number.
    Chromatic,
    /// Direct odd hole / antihole search.
    Perfection,
    /// Brute-force subset searches in the structure module.
    StructureSearch,
    /// Internal corpus generation.
    Enumeration,
    /// graph6 short form.
    Graph6,
}

impl fmt::Display for Cap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Cap::GraphOrder => "graph order",
            Cap::Exhaustive => "exhaustive (unweighted) cap",
            Cap::Weighted => "weighted search cap",
            Cap::BoundedWeight => "bounded-weight enumeration cap",
            Cap::Chromatic => "chromatic search cap",
            Cap::Perfection => "perfection search cap",
            Cap::StructureSearch => "structure search cap",
            Cap::Enumeration => "internal enumeration cap",
            Cap::Graph6 => "graph6 short-form cap",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex count {0} outside 1..=64")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{0} requires a nonempty vertex set")]
    EmptySet(&'static str),
    #[error("{0} requires disjoint vertex sets")]
    Overlap(&'static str),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("{cap} exceeded: limit {limit}, got {got}")]
    CapExceeded { cap: Cap, limit: usize, got: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn precondition(message: impl Into<String>) -> Self {
        Error::Precondition(message.into())
    }

    pub(crate) fn check_cap(cap: Cap, limit: usize, got: usize) -> Result<()> {
        if got > limit {
            Err(Error::CapExceeded { cap, limit, got })
        } else {
            Ok(())
        }
    }

    /// True for errors caused by a size cap rather than bad input.
    pub fn is_capability(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
