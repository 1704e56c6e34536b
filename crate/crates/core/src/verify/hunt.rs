//! Searches for counterexamples to two open questions: a perfectly
//! divisible graph that is not perfectly weight divisible, and a perfectly
//! divisible graph with a vertex that no perfect division puts on the
//! perfect side.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::divisibility::{division_through_vertex, is_divisible, Certificate, Scheme};
use crate::error::{Error, Result};
use crate::io::graph_id;
use crate::{CorpusStream, Graph, Limits, Vertex};

use super::checks::{capped, fold, Entry, Outcome};
use super::report::{TheoremId, TheoremReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OpenProblem {
    #[serde(rename = "PD_vs_PWD")]
    PdVsPwd,
    #[serde(rename = "vertex_in_A")]
    VertexInA,
}

impl OpenProblem {
    pub fn theorem_id(self) -> TheoremId {
        match self {
            OpenProblem::PdVsPwd => TheoremId::PdVsPwd,
            OpenProblem::VertexInA => TheoremId::VertexInA,
        }
    }

    fn slug(self) -> &'static str {
        match self {
            OpenProblem::PdVsPwd => "pd_vs_pwd",
            OpenProblem::VertexInA => "vertex_in_a",
        }
    }
}

impl fmt::Display for OpenProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OpenProblem::PdVsPwd => "PD_vs_PWD",
            OpenProblem::VertexInA => "vertex_in_A",
        })
    }
}

impl FromStr for OpenProblem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "pd_vs_pwd" => Ok(OpenProblem::PdVsPwd),
            "vertex_in_a" => Ok(OpenProblem::VertexInA),
            _ => Err(Error::InvalidArgument(format!("unknown problem {s:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct HuntOptions {
    /// Largest weight for the bounded weighted leg.
    pub weight_bound: u32,
    /// Where hit artifacts go; nothing is written when `None`.
    pub output_dir: Option<PathBuf>,
    pub limits: Limits,
}

impl Default for HuntOptions {
    fn default() -> Self {
        HuntOptions {
            weight_bound: 3,
            output_dir: None,
            limits: Limits::default(),
        }
    }
}

/// Everything needed to re-check a hit from scratch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HitRecord {
    pub problem: OpenProblem,
    pub graph6: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<Vertex>,
    pub certificates: Vec<Certificate>,
}

pub fn hunt_open_problems(
    corpus: CorpusStream,
    problem: OpenProblem,
    opts: &HuntOptions,
) -> Result<TheoremReport> {
    let start = Instant::now();
    let universe = corpus.description();
    let graphs = corpus.collect_graphs()?;
    let results: Vec<(Outcome, Option<HitRecord>)> = graphs
        .par_iter()
        .map(|g| hunt_member(g, problem, opts))
        .collect::<Result<_>>()?;
    let (outcomes, hits): (Vec<Outcome>, Vec<Option<HitRecord>>) = results.into_iter().unzip();
    let t = problem.theorem_id();
    let mut assumptions = vec!["in scope: perfectly divisible members".to_string()];
    if problem == OpenProblem::PdVsPwd {
        assumptions.push(format!(
            "weighted leg: every single-vertex doubling and every weight function bounded by {}",
            opts.weight_bound
        ));
        assumptions.push("a bounded-weight pass is not a proof of weight divisibility".into());
    }
    let mut report = fold(&[t], &universe, &graphs, outcomes, &BTreeMap::from([(t, assumptions)]))
        .remove(0);
    let hits: Vec<HitRecord> = hits.into_iter().flatten().collect();
    if let Some(dir) = &opts.output_dir {
        for (i, hit) in hits.iter().enumerate() {
            report.artifacts.extend(persist_hit(dir, problem, i + 1, hit)?);
        }
    }
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn hunt_member(g: &Graph, problem: OpenProblem, opts: &HuntOptions) -> Result<(Outcome, Option<HitRecord>)> {
    let t = problem.theorem_id();
    let limits = &opts.limits;
    let mut out = Outcome::default();
    let skip = |e: Error| {
        let mut out = Outcome::default();
        out.entries.push((t, Entry::Skipped(e.to_string())));
        (out, None)
    };
    let pd = match capped(is_divisible(g, &Scheme::Pd, limits))? {
        Ok(c) => c.without_timing(),
        Err(e) => return Ok(skip(e)),
    };
    if !pd.verdict {
        out.entries.push((t, Entry::OutOfScope));
        return Ok((out, None));
    }
    let id = graph_id(g);
    match problem {
        OpenProblem::PdVsPwd => {
            let h2 = match capped(is_divisible(g, &Scheme::H2, limits))? {
                Ok(c) => c.without_timing(),
                Err(e) => return Ok(skip(e)),
            };
            let pwd = match capped(is_divisible(g, &Scheme::PwdBounded(opts.weight_bound), limits))? {
                Ok(c) => c.without_timing(),
                Err(e) => return Ok(skip(e)),
            };
            if h2.verdict && pwd.verdict {
                out.entries.push((t, Entry::Holds));
                return Ok((out, None));
            }
            let failed = if h2.verdict { &pwd } else { &h2 };
            let detail = format!(
                "PD but fails {:?}: subset {} under weights {:?}",
                failed.claim,
                failed.evidence.failing_subset.unwrap(),
                failed.evidence.failing_weights.as_ref().unwrap().as_slice()
            );
            out.entries.push((t, Entry::Fails(detail.clone())));
            let hit = HitRecord {
                problem,
                graph6: id,
                detail,
                vertex: None,
                certificates: vec![pd, h2, pwd],
            };
            Ok((out, Some(hit)))
        }
        OpenProblem::VertexInA => {
            for v in g.vertices() {
                let found = match capped(division_through_vertex(g, v, limits))? {
                    Ok(d) => d,
                    Err(e) => return Ok(skip(e)),
                };
                if found.is_none() {
                    let detail = format!("no perfect division puts vertex {v} in A");
                    out.entries.push((t, Entry::Fails(detail.clone())));
                    let hit = HitRecord {
                        problem,
                        graph6: id,
                        detail,
                        vertex: Some(v),
                        certificates: vec![pd],
                    };
                    return Ok((out, Some(hit)));
                }
            }
            out.entries.push((t, Entry::Holds));
            Ok((out, None))
        }
    }
}

/// Writes `hit-<problem>-<index>.g6` and `.json`; returns both paths.
pub fn persist_hit(dir: &Path, problem: OpenProblem, index: usize, hit: &HitRecord) -> Result<Vec<String>> {
    let io = |path: &Path, e: std::io::Error| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    };
    std::fs::create_dir_all(dir).map_err(|e| io(dir, e))?;
    let stem = format!("hit-{}-{index}", problem.slug());
    let g6 = dir.join(format!("{stem}.g6"));
    let json = dir.join(format!("{stem}.json"));
    std::fs::write(&g6, format!("{}\n", hit.graph6)).map_err(|e| io(&g6, e))?;
    let body = serde_json::to_string_pretty(hit).expect("hit records serialize");
    std::fs::write(&json, body + "\n").map_err(|e| io(&json, e))?;
    Ok(vec![g6.display().to_string(), json.display().to_string()])
}
