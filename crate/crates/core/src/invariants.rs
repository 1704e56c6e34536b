//! Exact clique, independence and chromatic numbers, criticality, and the
//! per-subset tables the division searches read from.

use serde::{Deserialize, Serialize};

use crate::error::{Cap, Error, Result};
use crate::{Graph, Limits, Vertex, VertexSet};

/// Positive integer vertex weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct WeightFunction(Vec<u32>);

impl WeightFunction {
    pub fn new(weights: Vec<u32>) -> Result<Self> {
        if let Some(v) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidArgument(format!(
                "weight of vertex {v} must be positive"
            )));
        }
        Ok(WeightFunction(weights))
    }

    /// Checks the weights cover exactly the vertices of `g`.
    pub fn for_graph(weights: Vec<u32>, g: &Graph) -> Result<Self> {
        if weights.len() != g.n() {
            return Err(Error::InvalidArgument(format!(
                "{} weights for a graph on {} vertices",
                weights.len(),
                g.n()
            )));
        }
        Self::new(weights)
    }

    pub fn ones(n: usize) -> Self {
        WeightFunction(vec![1; n])
    }

    /// Weight 2 on `x`, 1 elsewhere.
    pub fn doubled_at(n: usize, x: Vertex) -> Self {
        let mut w = vec![1; n];
        w[x] = 2;
        WeightFunction(w)
    }

    /// The family of single-vertex doublings, `x` ascending.
    pub fn h2_family(n: usize) -> impl Iterator<Item = WeightFunction> {
        (0..n).map(move |x| Self::doubled_at(n, x))
    }

    /// Every weight function with values in `1..=bound`, in lexicographic
    /// order of the weight vector.
    pub fn bounded_family(n: usize, bound: u32) -> BoundedFamily {
        BoundedFamily {
            next: (bound >= 1).then(|| vec![1; n]),
            bound,
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: Vertex) -> u32 {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self, s: VertexSet) -> u64 {
        s.iter().map(|v| self.0[v] as u64).sum()
    }

    pub fn is_all_ones(&self) -> bool {
        self.0.iter().all(|&w| w == 1)
    }
}

impl TryFrom<Vec<u32>> for WeightFunction {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        WeightFunction::new(v)
    }
}

impl From<WeightFunction> for Vec<u32> {
    fn from(w: WeightFunction) -> Vec<u32> {
        w.0
    }
}

pub struct BoundedFamily {
    next: Option<Vec<u32>>,
    bound: u32,
}

impl Iterator for BoundedFamily {
    type Item = WeightFunction;

    fn next(&mut self) -> Option<WeightFunction> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut i = succ.len();
        self.next = loop {
            if i == 0 {
                break None;
            }
            i -= 1;
            if succ[i] < self.bound {
                succ[i] += 1;
                break Some(succ);
            }
            succ[i] = 1;
        };
        Some(WeightFunction(cur))
    }
}

/// A value per subset of `0..n`, indexed by the subset's bit pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetTable<T> {
    n: usize,
    values: Vec<T>,
}

impl<T: Copy> SubsetTable<T> {
    pub(crate) fn from_values(n: usize, values: Vec<T>) -> Self {
        debug_assert_eq!(values.len(), 1 << n);
        SubsetTable { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, s: VertexSet) -> T {
        self.values[s.bits() as usize]
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }
}

fn weight_of(h: Option<&WeightFunction>, v: Vertex) -> u64 {
    h.map_or(1, |h| h.get(v) as u64)
}

/// Maximum total weight of a clique inside `s` (default: all vertices,
/// unit weights). The empty set has clique number 0.
pub fn clique_number(g: &Graph, h: Option<&WeightFunction>, s: Option<VertexSet>) -> u64 {
    let s = s.unwrap_or_else(|| g.vertices());
    let mut best = 0;
    max_clique(g, h, s, 0, &mut best);
    best
}

fn max_clique(g: &Graph, h: Option<&WeightFunction>, cand: VertexSet, cur: u64, best: &mut u64) {
    let Some(v) = cand.min() else {
        *best = (*best).max(cur);
        return;
    };
    let bound: u64 = cur + cand.iter().map(|u| weight_of(h, u)).sum::<u64>();
    if bound <= *best {
        return;
    }
    max_clique(g, h, cand & g.neighbors(v), cur + weight_of(h, v), best);
    max_clique(g, h, cand.without(v), cur, best);
}

/// A maximum-cardinality clique inside `s`, least in lexicographic order
/// among those found first by the branch-and-bound.
pub fn maximum_clique(g: &Graph, s: VertexSet) -> VertexSet {
    fn rec(g: &Graph, cand: VertexSet, cur: VertexSet, best: &mut VertexSet) {
        let Some(v) = cand.min() else {
            if cur.len() > best.len() {
                *best = cur;
            }
            return;
        };
        if cur.len() + cand.len() <= best.len() {
            return;
        }
        rec(g, cand & g.neighbors(v), cur.with(v), best);
        rec(g, cand.without(v), cur, best);
    }
    let mut best = VertexSet::EMPTY;
    rec(g, s, VertexSet::EMPTY, &mut best);
    best
}

/// α(G[s]).
pub fn independence_number(g: &Graph, s: Option<VertexSet>) -> u64 {
    let s = s.unwrap_or_else(|| g.vertices());
    let mut best = 0;
    max_independent(g, s, 0, &mut best);
    best
}

fn max_independent(g: &Graph, cand: VertexSet, cur: u64, best: &mut u64) {
    let Some(v) = cand.min() else {
        *best = (*best).max(cur);
        return;
    };
    if cur + cand.len() as u64 <= *best {
        return;
    }
    max_independent(g, cand - g.neighbors(v).with(v), cur + 1, best);
    max_independent(g, cand.without(v), cur, best);
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_of(g, g.vertices(), &Limits::default())
}

/// χ(G[s]) by exact search: greedy upper bound, clique lower bound, then
/// k-colourability tests upward. Vertices are coloured in descending degree
/// order; a vertex may open at most one new colour.
pub fn chromatic_number_of(g: &Graph, s: VertexSet, limits: &Limits) -> Result<usize> {
    Error::check_cap(Cap::Chromatic, limits.chromatic, s.len())?;
    g.check_set(s)?;
    if s.is_empty() {
        return Ok(0);
    }
    let mut order: Vec<Vertex> = s.iter().collect();
    order.sort_by_key(|&v| std::cmp::Reverse((g.neighbors(v) & s).len()));
    let upper = greedy_colors(g, &order);
    let lower = clique_number(g, None, Some(s)) as usize;
    for k in lower..upper {
        let mut classes = vec![VertexSet::EMPTY; k];
        if color_rec(g, &order, 0, &mut classes, 0) {
            return Ok(k);
        }
    }
    Ok(upper)
}

fn greedy_colors(g: &Graph, order: &[Vertex]) -> usize {
    let mut classes: Vec<VertexSet> = Vec::new();
    for &v in order {
        match classes.iter().position(|c| (*c & g.neighbors(v)).is_empty()) {
            Some(i) => classes[i].insert(v),
            None => classes.push(VertexSet::singleton(v)),
        }
    }
    classes.len()
}

fn color_rec(g: &Graph, order: &[Vertex], idx: usize, classes: &mut [VertexSet], used: usize) -> bool {
    let Some(&v) = order.get(idx) else {
        return true;
    };
    let open = (used + 1).min(classes.len());
    for c in 0..open {
        if (classes[c] & g.neighbors(v)).is_empty() {
            classes[c].insert(v);
            if color_rec(g, order, idx + 1, classes, used.max(c + 1)) {
                return true;
            }
            classes[c].remove(v);
        }
    }
    false
}

/// Vertex-criticality: χ(G) = k and deleting any single vertex drops the
/// chromatic number below k.
pub fn is_k_critical(g: &Graph, k: usize) -> Result<bool> {
    is_k_critical_with(g, k, &Limits::default())
}

pub fn is_k_critical_with(g: &Graph, k: usize, limits: &Limits) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidArgument("criticality needs k >= 1".into()));
    }
    if chromatic_number_of(g, g.vertices(), limits)? != k {
        return Ok(false);
    }
    for v in 0..g.n() {
        if chromatic_number_of(g, g.vertices().without(v), limits)? >= k {
            return Ok(false);
        }
    }
    Ok(true)
}

/// ω_h of every subset in one pass:
/// `ω(S) = max(ω(S - v), h(v) + ω(S ∩ N(v)))` with `v` the least vertex.
pub fn subset_clique_table(
    g: &Graph,
    h: Option<&WeightFunction>,
    limits: &Limits,
) -> Result<SubsetTable<u64>> {
    let n = g.n();
    Error::check_cap(Cap::Exhaustive, limits.exhaustive, n)?;
    if let Some(h) = h {
        if h.len() != n {
            return Err(Error::InvalidArgument(format!(
                "{} weights for a graph on {n} vertices",
                h.len()
            )));
        }
    }
    let mut values = vec![0u64; 1 << n];
    for bits in 1..values.len() {
        let v = bits.trailing_zeros() as Vertex;
        let without = bits & (bits - 1);
        let inside = bits & g.rows()[v] as usize;
        values[bits] = values[without].max(weight_of(h, v) + values[inside]);
    }
    Ok(SubsetTable::from_values(n, values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::patterns::{complete, cycle, path, pattern, PatternName};

    #[test]
    fn clique_number_examples() {
        assert_eq!(clique_number(&cycle(5).unwrap(), None, None), 2);
        let g = pattern(PatternName::Groetzsch).unwrap();
        assert_eq!(clique_number(&g, None, None), 2);
        let k2 = complete(2).unwrap();
        let h = WeightFunction::new(vec![2, 3]).unwrap();
        assert_eq!(clique_number(&k2, Some(&h), None), 5);
        assert_eq!(clique_number(&k2, None, Some(VertexSet::EMPTY)), 0);
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&cycle(5).unwrap(), None), 2);
        assert_eq!(independence_number(&complete(4).unwrap(), None), 1);
        assert_eq!(independence_number(&pattern(PatternName::Claw).unwrap(), None), 3);
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&cycle(5).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_number(&pattern(PatternName::Groetzsch).unwrap()).unwrap(), 4);
        assert_eq!(chromatic_number(&complete(4).unwrap()).unwrap(), 4);
        let big = Graph::empty(33).unwrap();
        assert!(matches!(
            chromatic_number(&big),
            Err(Error::CapExceeded { cap: Cap::Chromatic, .. })
        ));
    }

    #[test]
    fn criticality_examples() {
        assert!(is_k_critical(&cycle(5).unwrap(), 3).unwrap());
        assert!(is_k_critical(&pattern(PatternName::Groetzsch).unwrap(), 4).unwrap());
        assert!(!is_k_critical(&path(4).unwrap(), 2).unwrap());
        assert!(is_k_critical(&Graph::empty(1).unwrap(), 1).unwrap());
        assert!(is_k_critical(&cycle(5).unwrap(), 0).is_err());
    }

    #[test]
    fn clique_table_examples() {
        let k2 = complete(2).unwrap();
        let t = subset_clique_table(&k2, None, &Limits::default()).unwrap();
        assert_eq!(t.values(), &[0, 1, 1, 2]);
        let c5 = cycle(5).unwrap();
        let t = subset_clique_table(&c5, None, &Limits::default()).unwrap();
        assert_eq!(t.get(c5.vertices()), 2);
        let big = Graph::empty(17).unwrap();
        assert!(subset_clique_table(&big, None, &Limits::default()).is_err());
    }

    #[test]
    fn weight_families() {
        let all: Vec<Vec<u32>> = WeightFunction::bounded_family(2, 3)
            .map(|w| w.as_slice().to_vec())
            .collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[0], vec![1, 1]);
        assert_eq!(all[1], vec![1, 2]);
        assert_eq!(all[8], vec![3, 3]);
        let h2: Vec<WeightFunction> = WeightFunction::h2_family(3).collect();
        assert_eq!(h2[1].as_slice(), &[1, 2, 1]);
        assert!(WeightFunction::new(vec![1, 0]).is_err());
        assert!(serde_json::from_str::<WeightFunction>("[1,0]").is_err());
    }
}
