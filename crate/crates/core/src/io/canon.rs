//! Exact canonical labelling for small graphs.
//!
//! Colour refinement plus individualisation: every leaf of the search tree
//! is a labelling, and the canonical code is the least upper-triangle bit
//! string over all leaves. Branches on vertices that are twins of an
//! earlier candidate in the same cell are skipped, since the swap is an
//! automorphism fixing the current partition.

use crate::{Graph, Vertex};

/// Upper triangle in graph6 order, packed MSB-first. Ordered by order then
/// bit string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonCode {
    n: usize,
    words: Vec<u64>,
}

impl CanonCode {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Code of `g` under the labelling `label[v]`.
    pub fn under(g: &Graph, label: &[Vertex]) -> CanonCode {
        let n = g.n();
        let mut at = vec![0; n];
        for (v, &l) in label.iter().enumerate() {
            at[l] = v;
        }
        let bits = n * n.saturating_sub(1) / 2;
        let mut words = vec![0u64; bits.div_ceil(64).max(1)];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if g.adjacent(at[i], at[j]) {
                    words[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        CanonCode { n, words }
    }

    /// Rebuilds the canonically labelled graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.n;
        let mut rows = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.words[k / 64] >> (63 - k % 64) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_rows(rows)
    }
}

#[derive(Debug, Clone)]
pub struct CanonicalForm {
    pub code: CanonCode,
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<Vertex>,
}

impl CanonicalForm {
    pub fn graph(&self) -> Graph {
        self.code.to_graph()
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    let mut colors = vec![0u32; n];
    refine(g, &mut colors);
    let mut best: Option<CanonicalForm> = None;
    search(g, &colors, &mut best);
    best.expect("search always reaches a leaf")
}

pub fn canonical_code(g: &Graph) -> CanonCode {
    canonical_form(g).code
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b)
}

fn search(g: &Graph, colors: &[u32], best: &mut Option<CanonicalForm>) {
    let n = g.n();
    let mut counts = vec![0usize; n];
    for &c in colors {
        counts[c as usize] += 1;
    }
    let Some(target) = counts.iter().position(|&k| k > 1) else {
        let labeling: Vec<Vertex> = colors.iter().map(|&c| c as Vertex).collect();
        let code = CanonCode::under(g, &labeling);
        if best.as_ref().is_none_or(|b| code < b.code) {
            *best = Some(CanonicalForm { code, labeling });
        }
        return;
    };
    let cell: Vec<Vertex> = (0..n).filter(|&v| colors[v] as usize == target).collect();
    for (idx, &v) in cell.iter().enumerate() {
        let redundant = cell[..idx].iter().any(|&u| twins(g, u, v));
        if redundant {
            continue;
        }
        let mut next: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(w, &c)| if c as usize > target || (c as usize == target && w != v) { c + 1 } else { c })
            .collect();
        next[v] = target as u32;
        refine(g, &mut next);
        search(g, &next, best);
    }
}

fn twins(g: &Graph, u: Vertex, v: Vertex) -> bool {
    g.neighbors(u).without(v) == g.neighbors(v).without(u)
}

/// Iterated colour refinement. Colours stay dense and their order only
/// depends on isomorphism-invariant data, so the result is equivariant.
fn refine(g: &Graph, colors: &mut [u32]) {
    let n = g.n();
    let mut classes = count_classes(colors);
    loop {
        let mut sigs: Vec<(Vec<u32>, Vertex)> = (0..n)
            .map(|v| {
                let mut sig = vec![0u32; classes + 1];
                sig[0] = colors[v];
                for u in g.neighbors(v) {
                    sig[1 + colors[u] as usize] += 1;
                }
                (sig, v)
            })
            .collect();
        sigs.sort();
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                rank += 1;
            }
            colors[sigs[i].1] = rank;
        }
        let now = rank as usize + 1;
        if now == classes {
            return;
        }
        classes = now;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m as usize + 1)
}
