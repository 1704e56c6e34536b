//! Graph formats, the named-graph catalogue, constructions and corpora.

pub mod canon;
pub mod enumerate;
pub mod format;
pub mod patterns;

pub use canon::{canonical_code, canonical_form, is_isomorphic, CanonCode, CanonicalForm};
pub use enumerate::{
    enumerate_corpus, enumerate_graphs, enumerate_up_to, is_triangle_free, CorpusFilter,
    CorpusSource, CorpusStream,
};
pub use format::{
    emit_graph, graph_id, parse_edgelist, parse_graph, parse_graph6, parse_graph6_file,
    to_edgelist, to_graph6, Format,
};
pub use patterns::{mycielski, pattern, PatternName};
