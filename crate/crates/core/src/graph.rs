//! Immutable simple graphs on at most 64 vertices, one adjacency word per
//! vertex, and the neighbourhood algebra the rest of the crate is written in.

use std::fmt;

use crate::error::{Error, Result};
use crate::{Vertex, VertexSet};

pub const MAX_VERTICES: usize = 64;

#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    name: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate and reversed pairs
    /// collapse into one edge.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj, name: None })
    }

    pub fn empty(n: usize) -> Result<Graph> {
        Graph::new(n, &[])
    }

    /// Builds from adjacency rows; rows must already be symmetric and
    /// loop-free within `0..n`.
    pub(crate) fn from_rows(rows: Vec<u64>) -> Graph {
        let n = rows.len();
        debug_assert!((1..=MAX_VERTICES).contains(&n));
        debug_assert!(rows.iter().enumerate().all(|(v, &r)| {
            r >> v & 1 == 0
                && r & !VertexSet::full(n).bits() == 0
                && VertexSet::from_bits(r).iter().all(|u| rows[u] >> v & 1 == 1)
        }));
        Graph {
            n,
            adj: rows,
            name: None,
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Open neighbourhood of a single vertex.
    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        (0..self.n)
            .flat_map(|u| {
                self.neighbors(u)
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).bits();
        let rows = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1 << v))
            .collect();
        Graph::from_rows(rows)
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.max() {
            Some(v) if v >= self.n => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            }),
            _ => Ok(()),
        }
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// The subgraph induced by `s`, relabelled densely in ascending order of
    /// the original labels.
    pub fn induced(&self, s: VertexSet) -> Result<InducedSubgraph> {
        if s.is_empty() {
            return Err(Error::EmptySet("induced"));
        }
        self.check_set(s)?;
        let map: Vec<Vertex> = s.iter().collect();
        let rows = map
            .iter()
            .map(|&v| {
                map.iter()
                    .enumerate()
                    .filter(|&(_, &u)| self.adjacent(v, u))
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Ok(InducedSubgraph {
            graph: Graph::from_rows(rows),
            map,
        })
    }

    /// `G - s`; `None` when nothing is left.
    pub fn delete(&self, s: VertexSet) -> Option<InducedSubgraph> {
        self.induced(self.vertices() - s).ok()
    }

    /// N(X), N[X] or M(X) of a nonempty set.
    pub fn neighborhood(&self, x: VertexSet, kind: NeighborhoodKind) -> Result<VertexSet> {
        if x.is_empty() {
            return Err(Error::EmptySet("neighborhood"));
        }
        self.check_set(x)?;
        let open = self.open_neighborhood(x);
        Ok(match kind {
            NeighborhoodKind::Open => open,
            NeighborhoodKind::Closed => open | x,
            NeighborhoodKind::Non => self.vertices() - open - x,
        })
    }

    /// Union of neighbourhoods minus `x` itself; empty for an empty `x`.
    pub fn open_neighborhood(&self, x: VertexSet) -> VertexSet {
        let mut acc = VertexSet::EMPTY;
        for v in x {
            acc |= self.neighbors(v);
        }
        acc - x
    }

    pub fn set_relation(&self, x: VertexSet, y: VertexSet) -> Result<SetRelation> {
        if x.is_empty() || y.is_empty() {
            return Err(Error::EmptySet("set_relation"));
        }
        if !x.is_disjoint(y) {
            return Err(Error::Overlap("set_relation"));
        }
        self.check_set(x | y)?;
        let mut complete = true;
        let mut anticomplete = true;
        for v in x {
            let hit = self.neighbors(v) & y;
            complete &= hit == y;
            anticomplete &= hit.is_empty();
        }
        Ok(match (complete, anticomplete) {
            (true, _) => SetRelation::Complete,
            (_, true) => SetRelation::Anticomplete,
            _ => SetRelation::Mixed,
        })
    }

    pub fn is_clique(&self, x: VertexSet) -> bool {
        x.iter().all(|v| (x - self.neighbors(v)).without(v).is_empty())
    }

    pub fn is_independent(&self, x: VertexSet) -> bool {
        x.iter().all(|v| (self.neighbors(v) & x).is_empty())
    }

    /// Connected components of `G[s]`, sorted by minimum vertex.
    pub fn components_of(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut rest = s;
        let mut out = Vec::new();
        while let Some(start) = rest.min() {
            let comp = self.reach(start, s);
            rest -= comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_of(self.vertices())
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: Vertex, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.neighbors(v);
            }
            frontier = next & (within - seen);
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.min() {
            None => true,
            Some(v) => self.reach(v, s) == s,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.vertices())
    }

    /// Same graph with vertex `v` renamed `perm[v]`.
    pub fn permute(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for (u, v) in self.edges() {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        Graph::from_rows(rows)
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("Graph");
        if let Some(name) = &self.name {
            d.field("name", name);
        }
        d.field("n", &self.n).field("edges", &self.edges()).finish()
    }
}

/// An induced subgraph together with the map from its dense labels back
/// to the host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub map: Vec<Vertex>,
}

impl InducedSubgraph {
    pub fn to_host(&self, v: Vertex) -> Vertex {
        self.map[v]
    }

    pub fn set_to_host(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.map[v]).collect()
    }

    /// Maps a host set into local labels, dropping vertices outside the
    /// subgraph.
    pub fn set_from_host(&self, s: VertexSet) -> VertexSet {
        self.map
            .iter()
            .enumerate()
            .filter(|&(_, &h)| s.contains(h))
            .map(|(i, _)| i)
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NeighborhoodKind {
    /// N(X)
    Open,
    /// N[X]
    Closed,
    /// M(X), the vertices outside X with no neighbour in X.
    Non,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetRelation {
    Complete,
    Anticomplete,
    Mixed,
}
