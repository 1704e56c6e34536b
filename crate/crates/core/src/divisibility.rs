//! Division searches and divisibility certificates.
//!
//! Every search runs over subset tables: `ω_h(S)` for all `S` and whether
//! `G[S]` is perfect. A perfect division of `S` exists iff some nonempty
//! `B ⊆ S` has `ω_h(B) < ω_h(S)` with `G[S - B]` perfect; perfect sets
//! are divisible outright with `B = Ø`.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Cap, Error, Result};
use crate::graph::InducedSubgraph;
use crate::invariants::{clique_number, subset_clique_table};
use crate::io::graph_id;
use crate::perfection::{is_perfect_with, minimum_witness, subset_perfection_table, CycleKind};
use crate::structure::sets_of_size;
use crate::{Graph, Limits, Vertex, VertexSet, WeightFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DivisionKind {
    Perfect,
    HPerfect,
    Two,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Division {
    pub a: VertexSet,
    pub b: VertexSet,
    pub kind: DivisionKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<WeightFunction>,
}

impl Division {
    /// Re-checks the definition from scratch, without the subset tables.
    pub fn is_valid(&self, g: &Graph, target: VertexSet) -> bool {
        if !self.a.is_disjoint(self.b) || (self.a | self.b) != target || target.is_empty() {
            return false;
        }
        if g.check_set(target).is_err() {
            return false;
        }
        let h = self.weights.as_ref();
        let whole = clique_number(g, h, Some(target));
        match self.kind {
            DivisionKind::Perfect | DivisionKind::HPerfect => {
                let perfect = self.a.is_empty()
                    || is_perfect_with(g, Some(self.a), &Limits::default())
                        .map(|v| v.perfect)
                        .unwrap_or(false);
                perfect && clique_number(g, h, Some(self.b)) < whole
            }
            DivisionKind::Two => {
                clique_number(g, None, Some(self.a)) < whole
                    && clique_number(g, None, Some(self.b)) < whole
            }
        }
    }
}

/// What "divisible" means for [`is_divisible`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Scheme {
    Pd,
    Weighted(WeightFunction),
    H2,
    /// Every weight function with values in `1..=W`.
    PwdBounded(u32),
    TwoDiv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Minimality {
    Mnpd,
    Mn2d,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Claim {
    #[serde(rename = "PD")]
    Pd,
    #[serde(rename = "hPD")]
    HPd(WeightFunction),
    #[serde(rename = "H2PD")]
    H2Pd,
    #[serde(rename = "PWD_bounded")]
    PwdBounded(u32),
    #[serde(rename = "2DIV")]
    TwoDiv,
    #[serde(rename = "MNPD")]
    Mnpd,
    #[serde(rename = "MN2D")]
    Mn2d,
}

impl From<&Scheme> for Claim {
    fn from(s: &Scheme) -> Claim {
        match s {
            Scheme::Pd => Claim::Pd,
            Scheme::Weighted(h) => Claim::HPd(h.clone()),
            Scheme::H2 => Claim::H2Pd,
            Scheme::PwdBounded(w) => Claim::PwdBounded(*w),
            Scheme::TwoDiv => Claim::TwoDiv,
        }
    }
}

impl From<Minimality> for Claim {
    fn from(m: Minimality) -> Claim {
        match m {
            Minimality::Mnpd => Claim::Mnpd,
            Minimality::Mn2d => Claim::Mn2d,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Evidence {
    /// A subset with no valid division (lexicographically least for
    /// divisibility claims).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_subset: Option<VertexSet>,
    /// The weight function under which `failing_subset` fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_weights: Option<WeightFunction>,
    /// Minimality claims: whether the whole vertex set has a division.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub whole_divisible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub whole_division: Option<Division>,
    /// Minimality claims: whether every proper subset in scope has one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub proper_subsets_divisible: Option<bool>,
    pub search: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Stats {
    pub subsets_checked: u64,
    pub candidates_examined: u64,
    pub weight_functions: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    /// graph6 of the subject.
    pub subject: String,
    pub claim: Claim,
    pub verdict: bool,
    pub evidence: Evidence,
    pub assumptions: Vec<String>,
    pub stats: Stats,
}

impl Certificate {
    /// Drops the wall-clock field so certificates compare byte-for-byte.
    pub fn without_timing(mut self) -> Self {
        self.stats.wall_time_ms = None;
        self
    }
}

/// Per-graph tables for the searches.
struct Tables {
    perfect: Vec<bool>,
    omega: Vec<u64>,
}

impl Tables {
    fn new(g: &Graph, h: Option<&WeightFunction>, limits: &Limits) -> Result<Tables> {
        Ok(Tables {
            perfect: subset_perfection_table(g, limits)?.values().to_vec(),
            omega: subset_clique_table(g, h, limits)?.values().to_vec(),
        })
    }

    fn reweight(&mut self, g: &Graph, h: &WeightFunction, limits: &Limits) -> Result<()> {
        self.omega = subset_clique_table(g, Some(h), limits)?.values().to_vec();
        Ok(())
    }

    fn perfect_division_exists(&self, s: usize, examined: &mut u64) -> bool {
        if self.perfect[s] {
            return true;
        }
        let whole = self.omega[s];
        let mut b = (s - 1) & s;
        while b != 0 {
            *examined += 1;
            if self.omega[b] < whole && self.perfect[s ^ b] {
                return true;
            }
            b = (b - 1) & s;
        }
        false
    }

    /// Edgeless sets are exempt, so they count as having one.
    fn two_division_exists(&self, s: usize, examined: &mut u64) -> bool {
        let whole = self.omega[s];
        if whole <= 1 {
            return true;
        }
        // Fix the lowest vertex on the A side; the split is symmetric.
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut extra = rest;
        loop {
            *examined += 1;
            let a = low | extra;
            if self.omega[a] < whole && self.omega[s ^ a] < whole {
                return true;
            }
            if extra == 0 {
                return false;
            }
            extra = (extra - 1) & rest;
        }
    }

    fn exists(&self, kind: DivisionKind, s: usize, examined: &mut u64) -> bool {
        match kind {
            DivisionKind::Two => self.two_division_exists(s, examined),
            _ => self.perfect_division_exists(s, examined),
        }
    }

    /// Lexicographically least failing nonempty subset.
    fn least_failure(&self, n: usize, kind: DivisionKind, stats: &mut Stats) -> Option<VertexSet> {
        let mut least: Option<VertexSet> = None;
        for s in 1..1usize << n {
            stats.subsets_checked += 1;
            if !self.exists(kind, s, &mut stats.candidates_examined) {
                let set = VertexSet::from_bits(s as u64);
                if least.is_none_or(|l| set.lex_cmp(l).is_lt()) {
                    least = Some(set);
                }
            }
        }
        least
    }

    fn least_valid_side(
        &self,
        target: VertexSet,
        kind: DivisionKind,
        must_contain: Option<Vertex>,
    ) -> Option<VertexSet> {
        let t = target.bits() as usize;
        let whole = self.omega[t];
        let valid = |a: usize| match kind {
            DivisionKind::Two => self.omega[a] < whole && self.omega[t ^ a] < whole,
            _ => self.perfect[a] && self.omega[t ^ a] < whole,
        };
        target
            .subsets()
            .filter(|a| must_contain.is_none_or(|v| a.contains(v)))
            .filter(|a| valid(a.bits() as usize))
            .min_by(|x, y| x.lex_cmp(*y))
    }
}

fn check_weights(g: &Graph, h: &WeightFunction) -> Result<()> {
    if h.len() != g.n() {
        return Err(Error::InvalidArgument(format!(
            "{} weights for a graph on {} vertices",
            h.len(),
            g.n()
        )));
    }
    Ok(())
}

/// The division of `target` whose `A` side is lexicographically least, or
/// `None` when no candidate `A` works.
pub fn find_division(
    g: &Graph,
    target: VertexSet,
    kind: DivisionKind,
    h: Option<&WeightFunction>,
    limits: &Limits,
) -> Result<Option<Division>> {
    find_division_impl(g, target, kind, h, None, limits)
}

fn find_division_impl(
    g: &Graph,
    target: VertexSet,
    kind: DivisionKind,
    h: Option<&WeightFunction>,
    must_contain: Option<Vertex>,
    limits: &Limits,
) -> Result<Option<Division>> {
    if target.is_empty() {
        return Err(Error::EmptySet("find_division"));
    }
    g.check_set(target)?;
    Error::check_cap(Cap::Exhaustive, limits.exhaustive, g.n())?;
    if let Some(h) = h {
        if kind == DivisionKind::Two {
            return Err(Error::InvalidArgument("2-divisions are unweighted".into()));
        }
        check_weights(g, h)?;
    }
    let kind = match (kind, h) {
        (DivisionKind::Perfect, Some(h)) if !h.is_all_ones() => DivisionKind::HPerfect,
        (k, _) => k,
    };
    let tables = Tables::new(g, h, limits)?;
    Ok(tables
        .least_valid_side(target, kind, must_contain)
        .map(|a| Division {
            a,
            b: target - a,
            kind,
            weights: h.cloned(),
        }))
}

/// A perfect division of `V(G)` with `v` on the perfect side. Requires
/// that `G` has some perfect division.
pub fn division_through_vertex(g: &Graph, v: Vertex, limits: &Limits) -> Result<Option<Division>> {
    g.check_vertex(v)?;
    let all = g.vertices();
    if find_division(g, all, DivisionKind::Perfect, None, limits)?.is_none() {
        return Err(Error::precondition("the graph has no perfect division"));
    }
    if is_perfect_with(g, None, limits)?.perfect {
        return Ok(Some(Division {
            a: all,
            b: VertexSet::EMPTY,
            kind: DivisionKind::Perfect,
            weights: None,
        }));
    }
    find_division_impl(g, all, DivisionKind::Perfect, None, Some(v), limits)
}

fn elapsed_ms(start: Instant) -> Option<u64> {
    Some(start.elapsed().as_millis() as u64)
}

/// Checks every nonempty induced subgraph. A negative verdict names the
/// first failing weight function (in generation order) and, under it, the
/// lexicographically least failing subset.
pub fn is_divisible(g: &Graph, scheme: &Scheme, limits: &Limits) -> Result<Certificate> {
    let start = Instant::now();
    let n = g.n();
    let mut stats = Stats::default();
    let mut assumptions = vec!["the empty set and singletons are divisible".to_string()];
    let mut failure: Option<(VertexSet, Option<WeightFunction>)> = None;
    let search;
    match scheme {
        Scheme::Pd | Scheme::TwoDiv => {
            Error::check_cap(Cap::Exhaustive, limits.exhaustive, n)?;
            let kind = if *scheme == Scheme::TwoDiv {
                assumptions.push("subsets without an edge are exempt".into());
                DivisionKind::Two
            } else {
                DivisionKind::Perfect
            };
            let tables = Tables::new(g, None, limits)?;
            failure = tables.least_failure(n, kind, &mut stats).map(|s| (s, None));
            search = format!("all {} nonempty subsets", (1u64 << n) - 1);
        }
        Scheme::Weighted(h) => {
            check_weights(g, h)?;
            Error::check_cap(Cap::Weighted, limits.weighted, n)?;
            let tables = Tables::new(g, Some(h), limits)?;
            stats.weight_functions = 1;
            failure = tables
                .least_failure(n, DivisionKind::HPerfect, &mut stats)
                .map(|s| (s, Some(h.clone())));
            search = format!("all {} nonempty subsets under one weight function", (1u64 << n) - 1);
        }
        Scheme::H2 | Scheme::PwdBounded(_) => {
            let family: Box<dyn Iterator<Item = WeightFunction>> = match scheme {
                Scheme::H2 => {
                    Error::check_cap(Cap::Weighted, limits.weighted, n)?;
                    search = format!("{n} single-vertex doublings");
                    Box::new(WeightFunction::h2_family(n))
                }
                Scheme::PwdBounded(w) => {
                    if *w == 0 {
                        return Err(Error::InvalidArgument("weight bound must be at least 1".into()));
                    }
                    if *w >= 2 {
                        Error::check_cap(Cap::BoundedWeight, limits.bounded_weight, n)?;
                    } else {
                        Error::check_cap(Cap::Exhaustive, limits.exhaustive, n)?;
                    }
                    assumptions.push(format!(
                        "weights bounded by {w}; not a proof of divisibility under all weights"
                    ));
                    search = format!("all {}^{n} weight functions", w);
                    Box::new(WeightFunction::bounded_family(n, *w))
                }
                _ => unreachable!(),
            };
            let mut tables = Tables::new(g, None, limits)?;
            for h in family {
                stats.weight_functions += 1;
                tables.reweight(g, &h, limits)?;
                if let Some(s) = tables.least_failure(n, DivisionKind::HPerfect, &mut stats) {
                    failure = Some((s, Some(h)));
                    break;
                }
            }
        }
    }
    let verdict = failure.is_none();
    let (failing_subset, failing_weights) = match failure {
        Some((s, h)) => (Some(s), h),
        None => (None, None),
    };
    stats.wall_time_ms = elapsed_ms(start);
    Ok(Certificate {
        subject: graph_id(g),
        claim: Claim::from(scheme),
        verdict,
        evidence: Evidence {
            failing_subset,
            failing_weights,
            search,
            ..Default::default()
        },
        assumptions,
        stats,
    })
}

/// Whether `G` is minimally non-divisible: `V(G)` has no division but every
/// proper nonempty subset in scope does. Proper subsets are swept in
/// decreasing size; the first failure is reported.
pub fn certify_minimal(g: &Graph, which: Minimality, limits: &Limits) -> Result<Certificate> {
    let start = Instant::now();
    let n = g.n();
    Error::check_cap(Cap::Exhaustive, limits.exhaustive, n)?;
    let kind = match which {
        Minimality::Mnpd => DivisionKind::Perfect,
        Minimality::Mn2d => DivisionKind::Two,
    };
    let tables = Tables::new(g, None, limits)?;
    let mut stats = Stats::default();
    let mut evidence = Evidence {
        search: format!("exhaustive over all {} nonempty subsets", (1u64 << n) - 1),
        ..Default::default()
    };
    let mut assumptions = vec!["minimality is with respect to induced subgraphs".to_string()];
    if which == Minimality::Mn2d {
        assumptions.push("subsets without an edge are exempt".into());
    }
    let all = g.vertices();
    stats.subsets_checked += 1;
    // Edgeless graphs are exempt from 2-division, hence not MN2D.
    let whole_ok = tables.exists(kind, all.bits() as usize, &mut stats.candidates_examined);
    evidence.whole_divisible = Some(whole_ok);
    let verdict = if whole_ok {
        evidence.whole_division = tables.least_valid_side(all, kind, None).map(|a| Division {
            a,
            b: all - a,
            kind,
            weights: None,
        });
        false
    } else {
        let mut failing = None;
        'sweep: for size in (1..n).rev() {
            for s in sets_of_size(all, size) {
                stats.subsets_checked += 1;
                if !tables.exists(kind, s.bits() as usize, &mut stats.candidates_examined) {
                    failing = Some(s);
                    break 'sweep;
                }
            }
        }
        evidence.proper_subsets_divisible = Some(failing.is_none());
        evidence.failing_subset = failing;
        failing.is_none()
    };
    stats.wall_time_ms = elapsed_ms(start);
    Ok(Certificate {
        subject: graph_id(g),
        claim: which.into(),
        verdict,
        evidence,
        assumptions,
        stats,
    })
}

/// The two sides of a clique cutset, with `G_i = G[X ∪ V_i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutsetSplit {
    pub x: VertexSet,
    /// The component of `G - X` holding its least vertex.
    pub v1: VertexSet,
    pub v2: VertexSet,
    pub g1: InducedSubgraph,
    pub g2: InducedSubgraph,
}

impl CutsetSplit {
    pub fn side(&self, i: usize) -> VertexSet {
        if i == 1 {
            self.x | self.v1
        } else {
            self.x | self.v2
        }
    }
}

pub fn cutset_split(g: &Graph, x: VertexSet) -> Result<CutsetSplit> {
    g.check_set(x)?;
    if !g.is_clique(x) {
        return Err(Error::precondition(format!("{x} is not a clique")));
    }
    let rest = g.vertices() - x;
    let comps = g.components_of(rest);
    if comps.len() < 2 {
        return Err(Error::precondition(format!("G - {x} is connected")));
    }
    let v1 = comps
        .iter()
        .copied()
        .find(|c| c.contains(rest.min().unwrap()))
        .unwrap();
    let v2 = rest - v1;
    Ok(CutsetSplit {
        x,
        v1,
        v2,
        g1: g.induced(x | v1)?,
        g2: g.induced(x | v2)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RefineOutcome {
    /// `(A_1 ∪ A_2, B_1 ∪ B_2)`, a perfect division of `G`.
    Merged(Division),
    /// No move applies and `X` still has vertices split across the sides.
    Stuck {
        d1: Division,
        d2: Division,
        unresolved: VertexSet,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refinement {
    pub outcome: RefineOutcome,
    pub iterations: usize,
}

/// Moves cutset vertices between the two sides' divisions until they agree
/// on `X` or no move applies. Divisions are in host labels. Vertices of `X`
/// are tried in ascending order; a move into a `B` side is preferred.
pub fn refine_cutset_divisions(
    g: &Graph,
    split: &CutsetSplit,
    d1: &Division,
    d2: &Division,
) -> Result<Refinement> {
    let (s1, s2) = (split.side(1), split.side(2));
    for (d, s, i) in [(d1, s1, 1), (d2, s2, 2)] {
        if d.kind == DivisionKind::Two || !d.is_valid(g, s) {
            return Err(Error::InvalidArgument(format!(
                "division {i} is not a perfect division of G_{i}"
            )));
        }
    }
    let omega1 = clique_number(g, None, Some(s1));
    let omega2 = clique_number(g, None, Some(s2));
    let perfect = |s: VertexSet| minimum_witness(g, s).is_none();
    let (mut a1, mut b1, mut a2, mut b2) = (d1.a, d1.b, d2.a, d2.b);
    let x = split.x;
    let unresolved = |a1: VertexSet, b1: VertexSet, a2: VertexSet, b2: VertexSet| {
        x - ((a1 & a2) | (b1 & b2))
    };
    let mut iterations = 0;
    loop {
        let open = unresolved(a1, b1, a2, b2);
        if open.is_empty() {
            return Ok(Refinement {
                outcome: RefineOutcome::Merged(Division {
                    a: a1 | a2,
                    b: b1 | b2,
                    kind: DivisionKind::Perfect,
                    weights: None,
                }),
                iterations,
            });
        }
        let mut moved = false;
        for v in open {
            if a1.contains(v) {
                if clique_number(g, None, Some(b1.with(v))) < omega1 {
                    a1.remove(v);
                    b1.insert(v);
                } else if perfect(a2.with(v)) {
                    b2.remove(v);
                    a2.insert(v);
                } else {
                    continue;
                }
            } else if clique_number(g, None, Some(b2.with(v))) < omega2 {
                a2.remove(v);
                b2.insert(v);
            } else if perfect(a1.with(v)) {
                b1.remove(v);
                a1.insert(v);
            } else {
                continue;
            }
            moved = true;
            break;
        }
        if !moved {
            let mk = |a, b| Division {
                a,
                b,
                kind: DivisionKind::Perfect,
                weights: None,
            };
            return Ok(Refinement {
                outcome: RefineOutcome::Stuck {
                    d1: mk(a1, b1),
                    d2: mk(a2, b2),
                    unresolved: open,
                },
                iterations,
            });
        }
        iterations += 1;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct P4Witness {
    pub z: Vertex,
    /// An induced path starting at `z`.
    pub path: [Vertex; 4],
}

/// Given a clique `X ∋ x` with `G[A_2]` perfect and `G[A_2 ∪ {x}]` not,
/// finds `z ∈ (A_2 ∩ X) ∪ {x}` and an induced P4 starting at `z` whose
/// other vertices lie in `A_2 - X`.
pub fn find_p4_witness(g: &Graph, a2: VertexSet, x_set: VertexSet, x: Vertex) -> Result<P4Witness> {
    g.check_set(a2 | x_set)?;
    g.check_vertex(x)?;
    if !x_set.contains(x) || !g.is_clique(x_set) {
        return Err(Error::precondition("X must be a clique containing x"));
    }
    if minimum_witness(g, a2).is_some() {
        return Err(Error::precondition("G[A2] is not perfect"));
    }
    let Some(w) = minimum_witness(g, a2.with(x)) else {
        return Err(Error::precondition("G[A2 + x] is perfect"));
    };
    let c = w.set;
    match w.kind {
        CycleKind::OddHole => {
            let order = cycle_order(c, x, |v| g.neighbors(v) & c);
            let k = order.len();
            let forward = !x_set.contains(order[1]);
            let at = |i: usize| {
                if forward {
                    order[i]
                } else {
                    order[(k - i) % k]
                }
            };
            Ok(P4Witness {
                z: x,
                path: [x, at(1), at(2), at(3)],
            })
        }
        CycleKind::OddAntihole => {
            let order = cycle_order(c, x, |v| (c - g.neighbors(v)).without(v));
            let k = order.len();
            let u = |i: isize| order[i.rem_euclid(k as isize) as usize];
            for j in 0..k as isize {
                if !x_set.contains(u(j)) {
                    continue;
                }
                if !x_set.contains(u(j + 2)) {
                    return Ok(P4Witness {
                        z: u(j),
                        path: [u(j), u(j + 2), u(j - 1), u(j + 1)],
                    });
                }
                if !x_set.contains(u(j - 2)) {
                    return Ok(P4Witness {
                        z: u(j),
                        path: [u(j), u(j - 2), u(j + 1), u(j - 1)],
                    });
                }
            }
            Err(Error::precondition("no cutset vertex of the antihole qualifies"))
        }
    }
}

/// The cycle through `c` (2-regular under `nbrs`) starting at `start`,
/// heading first to the smaller neighbour.
fn cycle_order(c: VertexSet, start: Vertex, nbrs: impl Fn(Vertex) -> VertexSet) -> Vec<Vertex> {
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = nbrs(start).min().unwrap();
    while cur != start {
        order.push(cur);
        let next = nbrs(cur).without(prev).min().unwrap();
        prev = cur;
        cur = next;
    }
    debug_assert_eq!(order.len(), c.len());
    order
}

/// Whether `path` is an induced P4 in order.
pub fn is_induced_p4(g: &Graph, path: &[Vertex; 4]) -> bool {
    let set: VertexSet = path.iter().collect();
    set.len() == 4
        && (0..4).all(|i| {
            (i + 1..4).all(|j| g.adjacent(path[i], path[j]) == (j == i + 1))
        })
}
