//! Exact search toolkit for perfect divisibility of small graphs.
//!
//! A graph is perfectly divisible when every induced subgraph splits into a
//! perfect part and a part of strictly smaller clique number. This crate
//! decides that property (and its weighted and 2-division variants) by
//! subset dynamic programming over graphs of up to 16 vertices, certifies
//! minimal counterexamples, and runs structural checks over exhaustive
//! corpora of small graphs.
//!
//! Vertex sets are single machine words ([`VertexSet`]); every graph has at
//! most 64 vertices.

pub mod divisibility;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod limits;
pub mod perfection;
mod set;
pub mod structure;
pub mod verify;

pub type Vertex = usize;

pub use divisibility::{Certificate, Claim, Division, DivisionKind, Scheme};
pub use error::{Cap, Error, Result};
pub use graph::{Graph, InducedSubgraph, NeighborhoodKind, SetRelation};
pub use invariants::{SubsetTable, WeightFunction};
pub use io::{CorpusFilter, CorpusStream, Format, PatternName};
pub use limits::Limits;
pub use perfection::{CycleKind, PerfectionVerdict};
pub use set::VertexSet;
