//! Corpora of small graphs: generated exhaustively up to isomorphism, or
//! read from graph6 files.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::canon::{canonical_code, CanonCode};
use super::format::Graph6Lines;
use crate::error::{Cap, Error, Result};
use crate::{Graph, VertexSet};

/// Largest order generated without a filter.
pub const ENUMERATION_CAP: usize = 8;
/// Largest order generated for triangle-free corpora, which stay small
/// enough to build by vertex extension.
pub const TRIANGLE_FREE_ENUMERATION_CAP: usize = 10;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, rename_all = "camelCase")]
pub struct CorpusFilter {
    pub connected: bool,
    pub triangle_free: bool,
    /// Drop graphs with more vertices (file corpora).
    pub max_n: Option<usize>,
}

impl CorpusFilter {
    pub fn accepts(&self, g: &Graph) -> bool {
        self.max_n.is_none_or(|m| g.n() <= m)
            && (!self.connected || g.is_connected())
            && (!self.triangle_free || is_triangle_free(g))
    }

    fn describe(&self) -> String {
        let mut parts = Vec::new();
        if self.connected {
            parts.push("connected".to_string());
        }
        if self.triangle_free {
            parts.push("triangle-free".to_string());
        }
        if let Some(m) = self.max_n {
            parts.push(format!("n<={m}"));
        }
        if parts.is_empty() {
            "all".into()
        } else {
            parts.join(", ")
        }
    }
}

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| (g.neighbors(u) & g.neighbors(v)).is_empty())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSource {
    Generated { n: usize },
    File(PathBuf),
    Listed(String),
}

/// A single-consumer stream of corpus members. File members that fail to
/// parse come through as errors at their position.
pub struct CorpusStream {
    source: CorpusSource,
    filter: CorpusFilter,
    items: std::vec::IntoIter<Result<Graph>>,
}

impl CorpusStream {
    pub fn source(&self) -> &CorpusSource {
        &self.source
    }

    pub fn filter(&self) -> CorpusFilter {
        self.filter
    }

    pub fn description(&self) -> String {
        let src = match &self.source {
            CorpusSource::Generated { n } => format!("all graphs on {n} vertices"),
            CorpusSource::File(p) => format!("graph6 file {}", p.display()),
            CorpusSource::Listed(label) => label.clone(),
        };
        format!("{src} [{}]", self.filter.describe())
    }

    pub fn from_graphs(label: impl Into<String>, graphs: Vec<Graph>, filter: CorpusFilter) -> Self {
        let items: Vec<Result<Graph>> = graphs
            .into_iter()
            .filter(|g| filter.accepts(g))
            .map(Ok)
            .collect();
        CorpusStream {
            source: CorpusSource::Listed(label.into()),
            filter,
            items: items.into_iter(),
        }
    }

    pub fn from_graph6_file(path: &Path, filter: CorpusFilter) -> Result<Self> {
        let text = std::fs::read(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Ok(Self::from_graph6_bytes(CorpusSource::File(path.to_path_buf()), &text, filter))
    }

    pub fn from_graph6_bytes(source: CorpusSource, text: &[u8], filter: CorpusFilter) -> Self {
        let items: Vec<Result<Graph>> = Graph6Lines::new(text)
            .filter(|r| r.as_ref().map_or(true, |g| filter.accepts(g)))
            .collect();
        CorpusStream {
            source,
            filter,
            items: items.into_iter(),
        }
    }

    /// Drains the stream, failing on the first malformed member.
    pub fn collect_graphs(self) -> Result<Vec<Graph>> {
        self.collect()
    }
}

impl Iterator for CorpusStream {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        self.items.next()
    }
}

/// Every graph on `n` vertices passing `filter`, one per isomorphism class,
/// canonically labelled and ordered by canonical code.
pub fn enumerate_corpus(n: usize, filter: CorpusFilter) -> Result<CorpusStream> {
    let graphs = enumerate_graphs(n, filter)?;
    Ok(CorpusStream {
        source: CorpusSource::Generated { n },
        filter,
        items: graphs.into_iter().map(Ok).collect::<Vec<_>>().into_iter(),
    })
}

pub fn enumerate_graphs(n: usize, filter: CorpusFilter) -> Result<Vec<Graph>> {
    let cap = if filter.triangle_free {
        TRIANGLE_FREE_ENUMERATION_CAP
    } else {
        ENUMERATION_CAP
    };
    Error::check_cap(Cap::Enumeration, cap, n)?;
    if n == 0 {
        return Err(Error::VertexCount(0));
    }
    // Triangle-freeness is hereditary, so it prunes every level.
    let mut level: Vec<Graph> = vec![Graph::empty(1)?];
    for _ in 1..n {
        level = extend(&level, filter.triangle_free);
    }
    Ok(level.into_iter().filter(|g| filter.accepts(g)).collect())
}

/// Every graph on `1..=max_n` vertices, concatenated by order.
pub fn enumerate_up_to(max_n: usize, filter: CorpusFilter) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_graphs(n, filter)?);
    }
    Ok(out)
}

fn extend(level: &[Graph], triangle_free: bool) -> Vec<Graph> {
    let found: Vec<(CanonCode, Graph)> = level
        .par_iter()
        .flat_map_iter(|g| {
            let n = g.n();
            g.vertices()
                .subsets()
                .filter(move |&s| !triangle_free || g.is_independent(s))
                .map(move |s| {
                    let h = add_vertex(g, s);
                    let code = canonical_code(&h);
                    let canon = code.to_graph();
                    debug_assert_eq!(canon.n(), n + 1);
                    (code, canon)
                })
        })
        .collect();
    let unique: BTreeMap<CanonCode, Graph> = found.into_iter().collect();
    unique.into_values().collect()
}

fn add_vertex(g: &Graph, neighbors: VertexSet) -> Graph {
    let n = g.n();
    let mut rows = g.rows().to_vec();
    for v in neighbors {
        rows[v] |= 1 << n;
    }
    rows.push(neighbors.bits());
    Graph::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::patterns::{cycle, path};

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_graphs(n, CorpusFilter::default()).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn triangle_free_connected_five_contains_c5_and_p5() {
        let filter = CorpusFilter {
            connected: true,
            triangle_free: true,
            max_n: None,
        };
        let graphs = enumerate_graphs(5, filter).unwrap();
        let codes: Vec<CanonCode> = graphs.iter().map(canonical_code).collect();
        assert!(codes.contains(&canonical_code(&cycle(5).unwrap())));
        assert!(codes.contains(&canonical_code(&path(5).unwrap())));
        assert!(graphs.iter().all(|g| g.is_connected() && is_triangle_free(g)));
    }

    #[test]
    fn caps() {
        assert!(matches!(
            enumerate_graphs(9, CorpusFilter::default()),
            Err(Error::CapExceeded { cap: Cap::Enumeration, .. })
        ));
        let tf = CorpusFilter {
            triangle_free: true,
            ..Default::default()
        };
        assert!(enumerate_graphs(11, tf).is_err());
    }

    #[test]
    fn output_is_sorted_by_code() {
        let graphs = enumerate_graphs(5, CorpusFilter::default()).unwrap();
        let codes: Vec<CanonCode> = graphs.iter().map(canonical_code).collect();
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn file_stream_applies_filter_and_keeps_errors() {
        let text = b"A_\nA?\nB!\n";
        let stream = CorpusStream::from_graph6_bytes(
            CorpusSource::Listed("t".into()),
            text,
            CorpusFilter {
                connected: true,
                ..Default::default()
            },
        );
        let items: Vec<_> = stream.collect();
        assert_eq!(items.len(), 2);
        assert!(items[0].is_ok());
        assert!(matches!(items[1], Err(Error::Parse { offset: 7, .. })));
    }
}
