//! Perfect-graph recognition by forbidden odd holes and odd antiholes,
//! with minimum witnesses, plus the per-subset perfection table.

use serde::{Deserialize, Serialize};

use crate::error::{Cap, Error, Result};
use crate::invariants::SubsetTable;
use crate::{Graph, Limits, Vertex, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CycleKind {
    OddHole,
    OddAntihole,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub set: VertexSet,
    pub kind: CycleKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectionVerdict {
    pub perfect: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Whether `G[s]` is an odd hole, an odd antihole, or neither. A 5-set
/// inducing C5 is both; it is reported as a hole.
pub fn classify_cycle_set(g: &Graph, s: VertexSet) -> Result<Option<CycleKind>> {
    if s.len() < 5 {
        return Err(Error::precondition(format!(
            "cycle classification needs at least 5 vertices, got {}",
            s.len()
        )));
    }
    g.check_set(s)?;
    Ok(classify_unchecked(g, s))
}

fn classify_unchecked(g: &Graph, s: VertexSet) -> Option<CycleKind> {
    let k = s.len();
    if k.is_multiple_of(2) {
        return None;
    }
    if is_chordless_cycle(|v| g.neighbors(v) & s, s, 2) {
        return Some(CycleKind::OddHole);
    }
    if is_chordless_cycle(|v| (s - g.neighbors(v)).without(v), s, 2) {
        return Some(CycleKind::OddAntihole);
    }
    None
}

fn is_chordless_cycle(nbrs: impl Fn(Vertex) -> VertexSet, s: VertexSet, deg: usize) -> bool {
    if s.iter().any(|v| nbrs(v).len() != deg) {
        return false;
    }
    // 2-regular and connected means one cycle.
    let start = s.min().expect("nonempty");
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next |= nbrs(v);
        }
        frontier = next - seen;
        seen |= frontier;
    }
    seen == s
}

/// Decides whether `G[s]` is perfect. On failure the witness is a smallest
/// odd hole or antihole, lexicographically least among those.
pub fn is_perfect(g: &Graph, s: Option<VertexSet>) -> Result<PerfectionVerdict> {
    is_perfect_with(g, s, &Limits::default())
}

pub fn is_perfect_with(g: &Graph, s: Option<VertexSet>, limits: &Limits) -> Result<PerfectionVerdict> {
    let s = s.unwrap_or_else(|| g.vertices());
    g.check_set(s)?;
    Error::check_cap(Cap::Perfection, limits.perfection, s.len())?;
    Ok(match minimum_witness(g, s) {
        Some(w) => PerfectionVerdict {
            perfect: false,
            witness: Some(w),
        },
        None => PerfectionVerdict {
            perfect: true,
            witness: None,
        },
    })
}

/// Smallest odd hole / antihole inside `s`.
pub fn minimum_witness(g: &Graph, s: VertexSet) -> Option<Witness> {
    let graph_nbrs = |v: Vertex| g.neighbors(v) & s;
    let comp_nbrs = |v: Vertex| (s - g.neighbors(v)).without(v);
    let mut len = 5;
    while len <= s.len() {
        let hole = least_hole(&graph_nbrs, s, len);
        // A 5-vertex antihole is a 5-hole, already covered.
        let anti = if len > 5 { least_hole(&comp_nbrs, s, len) } else { None };
        let pick = match (hole, anti) {
            (Some(h), Some(a)) => {
                if a.lex_cmp(h).is_lt() {
                    Some((a, CycleKind::OddAntihole))
                } else {
                    Some((h, CycleKind::OddHole))
                }
            }
            (Some(h), None) => Some((h, CycleKind::OddHole)),
            (None, Some(a)) => Some((a, CycleKind::OddAntihole)),
            (None, None) => None,
        };
        if let Some((set, kind)) = pick {
            return Some(Witness { set, kind });
        }
        len += 2;
    }
    None
}

/// Least odd antihole inside `s` with at least `min_len` vertices, trying
/// lengths in increasing order.
pub fn find_odd_antihole(g: &Graph, s: VertexSet, min_len: usize) -> Option<VertexSet> {
    let comp_nbrs = |v: Vertex| (s - g.neighbors(v)).without(v);
    let mut len = min_len.max(5) | 1;
    while len <= s.len() {
        if let Some(found) = least_hole(&comp_nbrs, s, len) {
            return Some(found);
        }
        len += 2;
    }
    None
}

/// Lexicographically least vertex set of a chordless cycle of length `len`
/// in the graph given by `nbrs` restricted to `s`.
fn least_hole(nbrs: &impl Fn(Vertex) -> VertexSet, s: VertexSet, len: usize) -> Option<VertexSet> {
    for start in s {
        let allowed = VertexSet::from_bits(s.bits() & !(u64::MAX >> (63 - start)));
        let mut best: Option<VertexSet> = None;
        let mut path = vec![start];
        extend_path(nbrs, allowed, len, &mut path, VertexSet::singleton(start), &mut best);
        if best.is_some() {
            // Every set containing `start` as its minimum precedes sets with
            // a larger minimum.
            return best;
        }
    }
    None
}

fn extend_path(
    nbrs: &impl Fn(Vertex) -> VertexSet,
    allowed: VertexSet,
    len: usize,
    path: &mut Vec<Vertex>,
    on_path: VertexSet,
    best: &mut Option<VertexSet>,
) {
    let last = *path.last().unwrap();
    let start = path[0];
    let interior = on_path.without(last);
    let closing = path.len() == len - 1;
    for v in nbrs(last) & (allowed - on_path) {
        let touch = nbrs(v) & interior;
        if closing {
            // Count each cycle once: second vertex below the last.
            if touch == VertexSet::singleton(start) && path[1] < v {
                let set = on_path.with(v);
                if best.is_none_or(|b| set.lex_cmp(b).is_lt()) {
                    *best = Some(set);
                }
            }
        } else if touch.is_empty() {
            path.push(v);
            extend_path(nbrs, allowed, len, path, on_path.with(v), best);
            path.pop();
        }
    }
}

/// `table[S]` is whether `G[S]` is perfect, built from the fact that a
/// minimal imperfect set is itself an odd hole or antihole.
pub fn subset_perfection_table(g: &Graph, limits: &Limits) -> Result<SubsetTable<bool>> {
    let n = g.n();
    Error::check_cap(Cap::Exhaustive, limits.exhaustive, n)?;
    let mut values = vec![true; 1 << n];
    for bits in 0..values.len() {
        let s = VertexSet::from_bits(bits as u64);
        if s.len() < 5 {
            continue;
        }
        let heredity = s.iter().all(|v| values[bits & !(1 << v)]);
        values[bits] = heredity && classify_unchecked(g, s).is_none();
    }
    Ok(SubsetTable::from_values(n, values))
}

/// Re-checks that a witness really is what it claims.
pub fn witness_is_valid(g: &Graph, w: &Witness) -> bool {
    w.set.len() >= 5
        && match classify_unchecked(g, w.set) {
            Some(kind) => {
                kind == w.kind || (w.set.len() == 5 && w.kind == CycleKind::OddAntihole)
            }
            None => false,
        }
}
