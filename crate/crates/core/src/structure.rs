//! Homogeneous sets, clique cutsets, simplicial sets and peelings, basins,
//! substitution, weight expansion and induced-pattern search.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Cap, Error, Result};
use crate::graph::MAX_VERTICES;
use crate::invariants::clique_number;
use crate::io::patterns::pattern;
use crate::perfection::is_perfect_with;
use crate::{Graph, Limits, PatternName, Vertex, VertexSet, WeightFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HomogeneousMode {
    /// Every inclusion-minimal homogeneous set.
    AllMinimal,
    /// The first homogeneous set in size-then-lexicographic order.
    Any,
    /// Every homogeneous set that is an edge.
    TwoClique,
}

/// `1 < |X| < |V|` and each outside vertex sees all of `X` or none of it.
pub fn is_homogeneous(g: &Graph, x: VertexSet) -> bool {
    x.len() > 1
        && x.len() < g.n()
        && (g.vertices() - x).iter().all(|v| {
            let hit = g.neighbors(v) & x;
            hit.is_empty() || hit == x
        })
}

/// Brute force over subsets in increasing size; supersets of sets already
/// reported are skipped in `AllMinimal` mode.
pub fn homogeneous_sets(g: &Graph, mode: HomogeneousMode, limits: &Limits) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if mode == HomogeneousMode::TwoClique {
        let mut out = Vec::new();
        for (u, v) in g.edges() {
            let x = VertexSet::singleton(u).with(v);
            if is_homogeneous(g, x) {
                out.push(x);
            }
        }
        return Ok(out);
    }
    Error::check_cap(Cap::StructureSearch, limits.structure, n)?;
    let mut found: Vec<VertexSet> = Vec::new();
    for size in 2..n {
        for x in sets_of_size(g.vertices(), size) {
            if found.iter().any(|m| m.is_subset(x)) {
                continue;
            }
            if is_homogeneous(g, x) {
                if mode == HomogeneousMode::Any {
                    return Ok(vec![x]);
                }
                found.push(x);
            }
        }
    }
    Ok(found)
}

/// Subsets of `universe` with exactly `k` elements, in lexicographic order.
pub fn sets_of_size(universe: VertexSet, k: usize) -> Vec<VertexSet> {
    fn rec(elems: &[Vertex], k: usize, cur: VertexSet, out: &mut Vec<VertexSet>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for i in 0..elems.len() {
            if elems.len() - i < k {
                break;
            }
            rec(&elems[i + 1..], k - 1, cur.with(elems[i]), out);
        }
    }
    let elems: Vec<Vertex> = universe.iter().collect();
    let mut out = Vec::new();
    if k <= elems.len() {
        rec(&elems, k, VertexSet::EMPTY, &mut out);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CutsetMode {
    Any,
    Minimum,
    All,
}

/// Cliques whose removal disconnects `G`, in size-then-lexicographic
/// order. `Any` and `Minimum` both return the first one found, which is
/// a minimum clique cutset.
pub fn clique_cutsets(g: &Graph, mode: CutsetMode) -> Result<Vec<VertexSet>> {
    if !g.is_connected() {
        return Err(Error::precondition("clique cutsets are defined for connected graphs"));
    }
    let all = g.vertices();
    let mut out = Vec::new();
    let mut level: Vec<VertexSet> = all.iter().map(VertexSet::singleton).collect();
    while !level.is_empty() {
        for &x in &level {
            if g.components_of(all - x).len() >= 2 {
                if mode != CutsetMode::All {
                    return Ok(vec![x]);
                }
                out.push(x);
            }
        }
        // Extending by a larger vertex keeps each level in lexicographic order.
        level = level
            .iter()
            .flat_map(|&x| {
                let top = x.max().unwrap();
                let common = x.iter().fold(all, |acc, v| acc & g.neighbors(v));
                common
                    .iter()
                    .filter(move |&v| v > top)
                    .map(move |v| x.with(v))
            })
            .collect();
    }
    Ok(out)
}

/// `X` is a simplicial set of `Y` when every `x` in `X` has a clique as its
/// neighbourhood inside `X ∪ Y`.
pub fn is_simplicial_set_of(g: &Graph, x: VertexSet, y: VertexSet) -> Result<bool> {
    if x.is_empty() {
        return Err(Error::EmptySet("is_simplicial_set_of"));
    }
    if !x.is_disjoint(y) {
        return Err(Error::Overlap("is_simplicial_set_of"));
    }
    g.check_set(x | y)?;
    let within = x | y;
    Ok(x.iter().all(|v| g.is_clique(g.neighbors(v) & within)))
}

/// Vertices of `s` whose neighbourhood inside `s` is a clique.
pub fn simplicial_vertices(g: &Graph, s: VertexSet) -> VertexSet {
    s.iter()
        .filter(|&v| g.is_clique(g.neighbors(v) & s))
        .collect()
}

/// An ordered partition `(X_1, ..., X_k)` where each later part is a
/// simplicial set of the union of the earlier ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SimplicialDecomposition {
    pub parts: Vec<VertexSet>,
    /// Whether `G[X_1]` is perfect.
    pub perfect: bool,
}

impl SimplicialDecomposition {
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut prefix = VertexSet::EMPTY;
        for (i, &part) in self.parts.iter().enumerate() {
            if part.is_empty() || !part.is_disjoint(prefix) {
                return false;
            }
            if i > 0 && !is_simplicial_set_of(g, part, prefix).unwrap_or(false) {
                return false;
            }
            prefix |= part;
        }
        true
    }
}

/// Canonical peeling: strip all simplicial vertices of the current induced
/// graph per round. The unpeelable residue is `X_1`; when everything
/// peels away, the last layer becomes `X_1`.
pub fn simplicial_peeling(g: &Graph, x: VertexSet) -> Result<SimplicialDecomposition> {
    if x.is_empty() {
        return Err(Error::EmptySet("simplicial_peeling"));
    }
    g.check_set(x)?;
    let mut rest = x;
    let mut layers = Vec::new();
    loop {
        let layer = simplicial_vertices(g, rest);
        if layer.is_empty() {
            break;
        }
        layers.push(layer);
        rest -= layer;
        if rest.is_empty() {
            break;
        }
    }
    let mut parts = Vec::with_capacity(layers.len() + 1);
    if !rest.is_empty() {
        parts.push(rest);
    }
    parts.extend(layers.into_iter().rev());
    let perfect = is_perfect_with(g, Some(parts[0]), &Limits::default())?.perfect;
    Ok(SimplicialDecomposition { parts, perfect })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Basin {
    pub set: VertexSet,
    /// No proper nonempty subset is a basin.
    pub minimal: bool,
}

/// Every nonempty `X` with `|X| <= max_size` and `ω(N[X]) < ω(G)`, in
/// size-then-lexicographic order.
pub fn basins(g: &Graph, max_size: usize, limits: &Limits) -> Result<Vec<Basin>> {
    let n = g.n();
    if max_size > n {
        return Err(Error::InvalidArgument(format!(
            "basin size bound {max_size} exceeds n = {n}"
        )));
    }
    Error::check_cap(Cap::StructureSearch, limits.structure, n)?;
    let omega = clique_number(g, None, None);
    let mut found: HashSet<VertexSet> = HashSet::new();
    let mut out = Vec::new();
    for size in 1..=max_size {
        for x in sets_of_size(g.vertices(), size) {
            let closed = g.open_neighborhood(x) | x;
            if clique_number(g, None, Some(closed)) < omega {
                let minimal = size == 1 || x.iter().all(|v| !found.contains(&x.without(v)));
                found.insert(x);
                out.push(Basin { set: x, minimal });
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution {
    pub graph: Graph,
    /// Where the substituted graph's vertices ended up.
    pub image: VertexSet,
}

/// Replaces `v` by a copy of `h` joined to `N(v)`. Vertex 0 of `h` takes
/// label `v`; the rest of `h` is appended after `G`'s labels, so `G - v`
/// keeps its labelling.
pub fn substitute(g: &Graph, v: Vertex, h: &Graph) -> Result<Substitution> {
    g.check_vertex(v)?;
    if h.n() < 2 || g.n() < 2 {
        return Err(Error::InvalidArgument(
            "substitution needs both graphs on at least two vertices".into(),
        ));
    }
    let total = g.n() - 1 + h.n();
    Error::check_cap(Cap::GraphOrder, MAX_VERTICES, total)?;
    let place = |i: Vertex| if i == 0 { v } else { g.n() + i - 1 };
    let image: VertexSet = (0..h.n()).map(place).collect();
    let mut edges: Vec<(Vertex, Vertex)> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| a != v && b != v)
        .collect();
    edges.extend(h.edges().into_iter().map(|(a, b)| (place(a), place(b))));
    for x in g.neighbors(v) {
        for y in image {
            edges.push((x, y));
        }
    }
    Ok(Substitution {
        graph: Graph::new(total, &edges)?,
        image,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub graph: Graph,
    pub weights: WeightFunction,
    /// Original vertex each expanded vertex stands for.
    pub origin: Vec<Vertex>,
}

/// Replaces a vertex of weight `k` by a clique of `k` unit-weight vertices
/// (the vertex itself plus `k - 1` appended twins). With `x = None`, every
/// vertex of weight at least 2 is expanded in ascending order, leaving an
/// all-ones weight function.
pub fn weight_expand(g: &Graph, h: &WeightFunction, x: Option<Vertex>) -> Result<Expansion> {
    if h.len() != g.n() {
        return Err(Error::InvalidArgument(format!(
            "{} weights for a graph on {} vertices",
            h.len(),
            g.n()
        )));
    }
    let targets: Vec<Vertex> = match x {
        Some(x) => {
            g.check_vertex(x)?;
            vec![x]
        }
        None => (0..g.n()).filter(|&v| h.get(v) >= 2).collect(),
    };
    let extra: usize = targets.iter().map(|&v| h.get(v) as usize - 1).sum();
    Error::check_cap(Cap::GraphOrder, MAX_VERTICES, g.n() + extra)?;
    let mut rows = g.rows().to_vec();
    let mut weights = h.as_slice().to_vec();
    let mut origin: Vec<Vertex> = (0..g.n()).collect();
    for v in targets {
        let k = weights[v] as usize;
        for _ in 1..k {
            let new = rows.len();
            let twins = VertexSet::from_bits(rows[v]).with(v);
            for u in twins {
                rows[u] |= 1 << new;
            }
            rows.push(twins.bits());
            weights.push(1);
            origin.push(origin[v]);
        }
        weights[v] = 1;
    }
    Ok(Expansion {
        graph: Graph::from_rows(rows),
        weights: WeightFunction::new(weights)?,
        origin,
    })
}

/// An induced copy of `pat` in `g`, as the map pattern vertex -> graph
/// vertex; the lexicographically least such map.
pub fn find_induced(g: &Graph, pat: &Graph) -> Option<Vec<Vertex>> {
    fn rec(g: &Graph, pat: &Graph, map: &mut Vec<Vertex>, used: VertexSet) -> bool {
        let i = map.len();
        if i == pat.n() {
            return true;
        }
        for v in g.vertices() - used {
            if g.degree(v) < pat.degree(i) {
                continue;
            }
            let ok = map
                .iter()
                .enumerate()
                .all(|(j, &w)| pat.adjacent(i, j) == g.adjacent(v, w));
            if ok {
                map.push(v);
                if rec(g, pat, map, used.with(v)) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    if pat.n() > g.n() {
        return None;
    }
    let mut map = Vec::with_capacity(pat.n());
    rec(g, pat, &mut map, VertexSet::EMPTY).then_some(map)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreenessVerdict {
    pub free: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Vertex>>,
}

pub fn induced_free(g: &Graph, name: PatternName) -> Result<FreenessVerdict> {
    let pat = pattern(name)?;
    if pat.n() > 8 {
        return Err(Error::InvalidArgument(format!(
            "pattern {name} has {} vertices; at most 8 supported",
            pat.n()
        )));
    }
    let witness = find_induced(g, &pat);
    Ok(FreenessVerdict {
        free: witness.is_none(),
        witness,
    })
}

pub fn is_free_of(g: &Graph, name: PatternName) -> bool {
    induced_free(g, name).map(|v| v.free).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::patterns::{complete, cycle, path};

    fn set(v: &[Vertex]) -> VertexSet {
        v.iter().collect()
    }

    fn bowtie() -> Graph {
        Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn homogeneous_examples() {
        let lim = Limits::default();
        let p4 = path(4).unwrap();
        assert!(homogeneous_sets(&p4, HomogeneousMode::AllMinimal, &lim).unwrap().is_empty());
        let c5 = cycle(5).unwrap();
        assert!(homogeneous_sets(&c5, HomogeneousMode::Any, &lim).unwrap().is_empty());
        let sub = substitute(&p4, 0, &complete(2).unwrap()).unwrap();
        let found = homogeneous_sets(&sub.graph, HomogeneousMode::AllMinimal, &lim).unwrap();
        assert!(found.contains(&sub.image));
        let twos = homogeneous_sets(&sub.graph, HomogeneousMode::TwoClique, &lim).unwrap();
        assert_eq!(twos, vec![sub.image]);
        assert!(homogeneous_sets(&Graph::empty(21).unwrap(), HomogeneousMode::Any, &lim).is_err());
    }

    #[test]
    fn cutset_examples() {
        let b = bowtie();
        assert_eq!(clique_cutsets(&b, CutsetMode::Minimum).unwrap(), vec![set(&[2])]);
        assert!(clique_cutsets(&cycle(5).unwrap(), CutsetMode::All).unwrap().is_empty());
        let g = pattern(PatternName::Groetzsch).unwrap();
        assert!(clique_cutsets(&g, CutsetMode::All).unwrap().is_empty());
        assert!(clique_cutsets(&Graph::empty(2).unwrap(), CutsetMode::Any).is_err());
        // P4: both interior vertices and the middle edge are clique cutsets.
        let all = clique_cutsets(&path(4).unwrap(), CutsetMode::All).unwrap();
        assert_eq!(all, vec![set(&[1]), set(&[2]), set(&[1, 2])]);
    }

    #[test]
    fn simplicial_examples() {
        let p4 = path(4).unwrap();
        assert!(is_simplicial_set_of(&p4, set(&[0]), set(&[1, 2, 3])).unwrap());
        assert!(!is_simplicial_set_of(&p4, set(&[1]), set(&[0, 2, 3])).unwrap());
        let claw = pattern(PatternName::Claw).unwrap();
        assert!(!is_simplicial_set_of(&claw, set(&[0]), set(&[1, 2, 3])).unwrap());
        assert!(is_simplicial_set_of(&p4, VertexSet::EMPTY, set(&[1])).is_err());
        assert!(is_simplicial_set_of(&p4, set(&[1]), set(&[1])).is_err());
    }

    #[test]
    fn peeling_examples() {
        let p4 = path(4).unwrap();
        let d = simplicial_peeling(&p4, p4.vertices()).unwrap();
        assert_eq!(d.parts, vec![set(&[1, 2]), set(&[0, 3])]);
        assert!(d.perfect && d.is_valid(&p4));
        let c5 = cycle(5).unwrap();
        let d = simplicial_peeling(&c5, c5.vertices()).unwrap();
        assert_eq!(d.parts, vec![c5.vertices()]);
        assert!(!d.perfect);
        let k3 = complete(3).unwrap();
        let d = simplicial_peeling(&k3, k3.vertices()).unwrap();
        assert_eq!(d.parts, vec![k3.vertices()]);
        assert!(d.perfect);
    }

    #[test]
    fn basin_examples() {
        let lim = Limits::default();
        let k3k1 = Graph::new(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let b = basins(&k3k1, 4, &lim).unwrap();
        assert_eq!(b[0], Basin { set: set(&[3]), minimal: true });
        assert!(basins(&cycle(5).unwrap(), 5, &lim).unwrap().is_empty());
        let g = pattern(PatternName::Groetzsch).unwrap();
        assert!(basins(&g, 11, &lim).unwrap().is_empty());
    }

    #[test]
    fn substitution_examples() {
        let wheel = substitute(&complete(2).unwrap(), 1, &cycle(5).unwrap()).unwrap();
        assert_eq!(wheel.graph.n(), 6);
        assert_eq!(wheel.graph.edge_count(), 10);
        assert!(is_homogeneous(&wheel.graph, wheel.image));
        assert!(substitute(&complete(2).unwrap(), 0, &Graph::empty(1).unwrap()).is_err());
    }

    #[test]
    fn expansion_examples() {
        let e = weight_expand(&Graph::empty(1).unwrap(), &WeightFunction::new(vec![3]).unwrap(), None)
            .unwrap();
        assert_eq!(e.graph, complete(3).unwrap());
        assert!(e.weights.is_all_ones());
        let e = weight_expand(
            &complete(2).unwrap(),
            &WeightFunction::new(vec![2, 1]).unwrap(),
            Some(0),
        )
        .unwrap();
        assert_eq!(e.graph, complete(3).unwrap());
        assert_eq!(e.origin, vec![0, 1, 0]);
        let unit = weight_expand(&path(3).unwrap(), &WeightFunction::ones(3), Some(1)).unwrap();
        assert_eq!(unit.graph, path(3).unwrap());
    }

    #[test]
    fn freeness_examples() {
        let c5 = cycle(5).unwrap();
        assert!(induced_free(&c5, PatternName::Claw).unwrap().free);
        let claw = pattern(PatternName::Claw).unwrap();
        assert_eq!(
            induced_free(&claw, PatternName::Claw).unwrap().witness,
            Some(vec![0, 1, 2, 3])
        );
        let g = pattern(PatternName::Groetzsch).unwrap();
        assert!(induced_free(&g, PatternName::Triangle).unwrap().free);
        assert!(!induced_free(&g, PatternName::C5).unwrap().free);
    }
}
