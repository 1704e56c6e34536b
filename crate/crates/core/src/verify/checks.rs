//! Corpus-wide theorem checks. Members are evaluated in parallel and the
//! per-member outcomes are folded back in corpus order.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::divisibility::{certify_minimal, is_divisible, Minimality, Scheme};
use crate::error::{Error, Result};
use crate::invariants::{chromatic_number_of, clique_number, is_k_critical_with};
use crate::io::{graph_id, is_triangle_free};
use crate::perfection::find_odd_antihole;
use crate::structure::{clique_cutsets, homogeneous_sets, is_free_of, CutsetMode, HomogeneousMode};
use crate::{CorpusStream, Graph, Limits, NeighborhoodKind, PatternName};

use super::report::{TheoremId, TheoremReport};

pub(crate) const VERTEX_CRITICALITY: &str =
    "k-critical means chi(G) = k and chi(G - v) < k for every vertex v";

#[derive(Debug, Clone)]
pub(crate) enum Entry {
    Skipped(String),
    OutOfScope,
    Holds,
    Fails(String),
}

#[derive(Debug, Default)]
pub(crate) struct Outcome {
    pub entries: Vec<(TheoremId, Entry)>,
    pub counts: Vec<(TheoremId, &'static str)>,
}

impl Outcome {
    fn skip_all(ids: &[TheoremId], err: &Error) -> Outcome {
        Outcome {
            entries: ids.iter().map(|&t| (t, Entry::Skipped(err.to_string()))).collect(),
            counts: Vec::new(),
        }
    }

    fn push(&mut self, id: TheoremId, entry: Entry) {
        self.entries.push((id, entry));
    }

    fn count(&mut self, id: TheoremId, key: &'static str) {
        self.counts.push((id, key));
    }
}

/// Cap breaches skip a member (inner `Err`); any other error aborts.
pub(crate) fn capped<T>(r: Result<T>) -> Result<std::result::Result<T, Error>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(e) if e.is_capability() => Ok(Err(e)),
        Err(e) => Err(e),
    }
}

pub(crate) fn fold(
    ids: &[TheoremId],
    universe: &str,
    graphs: &[Graph],
    outcomes: Vec<Outcome>,
    assumptions: &BTreeMap<TheoremId, Vec<String>>,
) -> Vec<TheoremReport> {
    let mut reports: Vec<TheoremReport> =
        ids.iter().map(|&t| TheoremReport::new(t, universe)).collect();
    for (g, out) in graphs.iter().zip(outcomes) {
        let id = graph_id(g);
        for (t, entry) in out.entries {
            let r = reports.iter_mut().find(|r| r.theorem_id == t).unwrap();
            match entry {
                Entry::Skipped(why) => r.skipped.push(super::Violation {
                    graph6: id.clone(),
                    detail: why,
                }),
                Entry::OutOfScope => r.checked += 1,
                Entry::Holds => {
                    r.checked += 1;
                    r.in_scope += 1;
                }
                Entry::Fails(detail) => {
                    r.checked += 1;
                    r.in_scope += 1;
                    r.violation(&id, detail);
                }
            }
        }
        for (t, key) in out.counts {
            reports.iter_mut().find(|r| r.theorem_id == t).unwrap().bump(key, 1);
        }
    }
    for r in &mut reports {
        r.assumptions = assumptions.get(&r.theorem_id).cloned().unwrap_or_default();
        r.finish();
    }
    reports
}

pub(crate) fn run_members(
    graphs: &[Graph],
    f: impl Fn(&Graph) -> Result<Outcome> + Sync + Send,
) -> Result<Vec<Outcome>> {
    graphs.par_iter().map(f).collect()
}

fn stamp(reports: &mut [TheoremReport], start: Instant) {
    let ms = start.elapsed().as_millis() as u64;
    for r in reports {
        r.wall_time_ms = ms;
    }
}

const STRUCTURAL: [TheoremId; 4] = [
    TheoremId::HomogeneousSets,
    TheoremId::CliqueCutsets,
    TheoremId::TriangleFreeCutsets,
    TheoremId::ClawFreeAntiholes,
];

/// For each certified MNPD member: no homogeneous set when (P2+P4)- or
/// diamond-free; no clique cutset when 2P3-free, claw-free or
/// triangle-free; no odd antihole on 7+ vertices inside any `M(v)` when
/// claw-free.
pub fn check_structural_theorems(corpus: CorpusStream, limits: &Limits) -> Result<Vec<TheoremReport>> {
    let start = Instant::now();
    let universe = corpus.description();
    let graphs = corpus.collect_graphs()?;
    let outcomes = run_members(&graphs, |g| structural_member(g, limits))?;
    let assumptions = BTreeMap::from([
        (
            TheoremId::HomogeneousSets,
            vec!["in scope: MNPD members that are (P2+P4)-free or diamond-free".to_string()],
        ),
        (
            TheoremId::CliqueCutsets,
            vec!["in scope: MNPD members that are 2P3-free or claw-free".to_string()],
        ),
        (
            TheoremId::TriangleFreeCutsets,
            vec!["in scope: triangle-free MNPD members".to_string()],
        ),
        (
            TheoremId::ClawFreeAntiholes,
            vec!["in scope: claw-free MNPD members; antiholes on at least 7 vertices".to_string()],
        ),
    ]);
    let mut reports = fold(&STRUCTURAL, &universe, &graphs, outcomes, &assumptions);
    stamp(&mut reports, start);
    Ok(reports)
}

fn structural_member(g: &Graph, limits: &Limits) -> Result<Outcome> {
    let cert = match capped(certify_minimal(g, Minimality::Mnpd, limits))? {
        Ok(c) => c,
        Err(e) => return Ok(Outcome::skip_all(&STRUCTURAL, &e)),
    };
    let mut out = Outcome::default();
    if !cert.verdict {
        for t in STRUCTURAL {
            out.push(t, Entry::OutOfScope);
        }
        return Ok(out);
    }
    for t in STRUCTURAL {
        out.count(t, "mnpd");
    }

    let hom_scope = is_free_of(g, PatternName::P2UnionP4) || is_free_of(g, PatternName::Diamond);
    out.push(
        TheoremId::HomogeneousSets,
        if !hom_scope {
            Entry::OutOfScope
        } else {
            match homogeneous_sets(g, HomogeneousMode::Any, limits) {
                Ok(found) if found.is_empty() => Entry::Holds,
                Ok(found) => Entry::Fails(format!("homogeneous set {}", found[0])),
                Err(e) => Entry::Skipped(e.to_string()),
            }
        },
    );

    let cutset = || -> Entry {
        if !g.is_connected() {
            return Entry::Fails("disconnected MNPD graph".into());
        }
        match clique_cutsets(g, CutsetMode::Minimum) {
            Ok(found) if found.is_empty() => Entry::Holds,
            Ok(found) => Entry::Fails(format!("clique cutset {}", found[0])),
            Err(e) => Entry::Skipped(e.to_string()),
        }
    };
    let claw_free = is_free_of(g, PatternName::Claw);
    let cut_scope = claw_free || is_free_of(g, PatternName::TwoP3);
    out.push(
        TheoremId::CliqueCutsets,
        if cut_scope { cutset() } else { Entry::OutOfScope },
    );
    out.push(
        TheoremId::TriangleFreeCutsets,
        if is_triangle_free(g) {
            cutset()
        } else {
            Entry::OutOfScope
        },
    );

    out.push(
        TheoremId::ClawFreeAntiholes,
        if !claw_free {
            Entry::OutOfScope
        } else {
            let hit = g.vertices().iter().find_map(|v| {
                let m = g
                    .neighborhood(crate::VertexSet::singleton(v), NeighborhoodKind::Non)
                    .ok()?;
                find_odd_antihole(g, m, 7).map(|c| (v, c))
            });
            match hit {
                None => Entry::Holds,
                Some((v, c)) => Entry::Fails(format!("odd antihole {c} inside M({v})")),
            }
        },
    );
    Ok(out)
}

const CHROMATIC: [TheoremId; 2] = [TheoremId::ChromaticBounds, TheoremId::FourCritical];

/// Per member: 2-divisible implies `χ <= 2^(ω-1)`; PD implies
/// `χ <= (ω+1)ω/2`; `χ <= ω + 1` implies PD; and for triangle-free members,
/// MNPD iff 4-critical.
pub fn check_chromatic_and_critical(corpus: CorpusStream, limits: &Limits) -> Result<Vec<TheoremReport>> {
    let start = Instant::now();
    let universe = corpus.description();
    let graphs = corpus.collect_graphs()?;
    let outcomes = run_members(&graphs, |g| chromatic_member(g, limits))?;
    let assumptions = BTreeMap::from([
        (
            TheoremId::ChromaticBounds,
            vec!["every member is in scope; each implication is checked where its premise holds"
                .to_string()],
        ),
        (
            TheoremId::FourCritical,
            vec![
                "in scope: triangle-free members".to_string(),
                VERTEX_CRITICALITY.to_string(),
            ],
        ),
    ]);
    let mut reports = fold(&CHROMATIC, &universe, &graphs, outcomes, &assumptions);
    stamp(&mut reports, start);
    Ok(reports)
}

fn chromatic_member(g: &Graph, limits: &Limits) -> Result<Outcome> {
    let facts = (|| -> Result<(u64, usize, bool, bool)> {
        let omega = clique_number(g, None, None);
        let chi = chromatic_number_of(g, g.vertices(), limits)?;
        let pd = is_divisible(g, &Scheme::Pd, limits)?.verdict;
        let two = is_divisible(g, &Scheme::TwoDiv, limits)?.verdict;
        Ok((omega, chi, pd, two))
    })();
    let (omega, chi, pd, two) = match capped(facts)? {
        Ok(f) => f,
        Err(e) => return Ok(Outcome::skip_all(&CHROMATIC, &e)),
    };
    let mut out = Outcome::default();
    let chi64 = chi as u64;
    let mut broken = Vec::new();
    if two {
        out.count(TheoremId::ChromaticBounds, "twoDivisible");
        if chi64 > 1u64 << (omega - 1) {
            broken.push(format!("2-divisible with chi = {chi} > 2^(omega-1), omega = {omega}"));
        }
    }
    if pd {
        out.count(TheoremId::ChromaticBounds, "perfectlyDivisible");
        if chi64 > (omega + 1) * omega / 2 {
            broken.push(format!("PD with chi = {chi} > C(omega+1, 2), omega = {omega}"));
        }
    }
    if chi64 <= omega + 1 {
        out.count(TheoremId::ChromaticBounds, "chiAtMostOmegaPlusOne");
        if !pd {
            broken.push(format!("chi = {chi} <= omega + 1 = {} but not PD", omega + 1));
        }
    }
    out.push(
        TheoremId::ChromaticBounds,
        if broken.is_empty() {
            Entry::Holds
        } else {
            Entry::Fails(broken.join("; "))
        },
    );

    if omega > 2 {
        out.push(TheoremId::FourCritical, Entry::OutOfScope);
        return Ok(out);
    }
    let sides = (|| -> Result<(bool, bool)> {
        Ok((
            certify_minimal(g, Minimality::Mnpd, limits)?.verdict,
            is_k_critical_with(g, 4, limits)?,
        ))
    })();
    match capped(sides)? {
        Ok((mnpd, critical)) => {
            if mnpd {
                out.count(TheoremId::FourCritical, "mnpd");
            }
            if critical {
                out.count(TheoremId::FourCritical, "fourCritical");
            }
            out.push(
                TheoremId::FourCritical,
                if mnpd == critical {
                    Entry::Holds
                } else {
                    Entry::Fails(format!("MNPD = {mnpd} but 4-critical = {critical}"))
                },
            );
        }
        Err(e) => out.push(TheoremId::FourCritical, Entry::Skipped(e.to_string())),
    }
    Ok(out)
}

/// Within the corpus: if no MNPD member has a homogeneous set that is an
/// edge, then every PD member must also pass the single-doubling weighted
/// scheme. Failing PD members are reported only when the premise holds.
pub fn check_weight_equivalence(corpus: CorpusStream, limits: &Limits) -> Result<TheoremReport> {
    let start = Instant::now();
    let universe = corpus.description();
    let graphs = corpus.collect_graphs()?;
    let t = TheoremId::WeightEquivalence;
    let outcomes = run_members(&graphs, |g| {
        let mut out = Outcome::default();
        let facts = (|| -> Result<Entry> {
            if certify_minimal(g, Minimality::Mnpd, limits)?.verdict {
                out.count(t, "mnpd");
                if !homogeneous_sets(g, HomogeneousMode::TwoClique, limits)?.is_empty() {
                    out.count(t, "mnpdWithHomogeneousEdge");
                }
            }
            if !is_divisible(g, &Scheme::Pd, limits)?.verdict {
                return Ok(Entry::OutOfScope);
            }
            let h2 = is_divisible(g, &Scheme::H2, limits)?;
            Ok(if h2.verdict {
                Entry::Holds
            } else {
                Entry::Fails(format!(
                    "PD but not H2-PD: subset {} under weights {:?}",
                    h2.evidence.failing_subset.unwrap(),
                    h2.evidence.failing_weights.unwrap().as_slice()
                ))
            })
        })();
        match capped(facts)? {
            Ok(e) => out.push(t, e),
            Err(e) => out.push(t, Entry::Skipped(e.to_string())),
        }
        Ok(out)
    })?;
    let assumptions = BTreeMap::from([(
        t,
        vec![
            "in scope: PD members, checked against every single-vertex doubling".to_string(),
            "failures count as violations only if no MNPD member has a homogeneous edge".to_string(),
        ],
    )]);
    let mut report = fold(&[t], &universe, &graphs, outcomes, &assumptions).remove(0);
    if report.count("mnpdWithHomogeneousEdge") > 0 {
        report.bump("pdFailingH2", report.violations.len() as u64);
        report.violations.clear();
    }
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}
