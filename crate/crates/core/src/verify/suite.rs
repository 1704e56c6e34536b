//! Suite configuration and the top-level runner.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::divisibility::{certify_minimal, Minimality};
use crate::error::{Error, Result};
use crate::io::{enumerate_up_to, parse_graph6, pattern};
use crate::{CorpusFilter, CorpusStream, Graph, Limits, PatternName};

use super::checks::{capped, check_chromatic_and_critical, check_structural_theorems, check_weight_equivalence, fold, run_members, Entry, Outcome};
use super::hunt::{hunt_open_problems, HuntOptions, OpenProblem};
use super::properties::{check_mn2d_properties, check_mnpd_properties};
use super::report::{TheoremId, TheoremReport};

/// The built-in configuration: every graph on at most 7 vertices plus the
/// Grötzsch graph, hunts restricted to at most 6 vertices.
pub const DEFAULT_CONFIG: &str = r#"name = "default"
huntMaxN = 6
weightBound = 3

[[corpora]]
generated = 7

[[corpora]]
patterns = ["groetzsch"]
"#;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, rename_all = "camelCase", deny_unknown_fields)]
pub struct SuiteConfig {
    pub name: String,
    pub corpora: Vec<CorpusSpec>,
    /// Checks to run; empty means all.
    pub theorems: Vec<TheoremId>,
    /// Hunters only look at members with at most this many vertices.
    pub hunt_max_n: usize,
    pub weight_bound: u32,
    /// Worker threads; `None` uses the pool default.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jobs: Option<usize>,
    /// With `false`, every wall-time field is zero so reports are
    /// byte-identical across runs.
    pub timings: bool,
    /// Directory for counterexample artifacts, relative to the config file.
    pub output_dir: PathBuf,
    pub limits: Limits,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            name: "custom".into(),
            corpora: Vec::new(),
            theorems: Vec::new(),
            hunt_max_n: 6,
            weight_bound: 3,
            jobs: None,
            timings: true,
            output_dir: PathBuf::from("hits"),
            limits: Limits::default(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, rename_all = "camelCase", deny_unknown_fields)]
pub struct CorpusSpec {
    /// Every graph on `1..=generated` vertices.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated: Option<usize>,
    /// A graph6 file, one graph per line.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub file: Option<PathBuf>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub patterns: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub graph6: Vec<String>,
    pub filter: CorpusFilter,
}

impl SuiteConfig {
    pub fn from_toml(text: &str) -> Result<SuiteConfig> {
        let cfg: SuiteConfig = toml::from_str(text).map_err(|e| {
            Error::parse(
                e.span().map_or(0, |s| s.start),
                format!("suite config: {}", e.message()),
            )
        })?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn builtin_default() -> SuiteConfig {
        SuiteConfig::from_toml(DEFAULT_CONFIG).expect("built-in config parses")
    }

    /// Reads a config file; the name `default` selects the built-in one.
    /// Returns the config and the directory relative paths resolve against.
    pub fn load(path: &Path) -> Result<(SuiteConfig, PathBuf)> {
        if path.as_os_str() == "default" {
            return Ok((SuiteConfig::builtin_default(), PathBuf::from(".")));
        }
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        let base = path
            .parent()
            .map(Path::to_path_buf)
            .filter(|p| !p.as_os_str().is_empty())
            .unwrap_or_else(|| PathBuf::from("."));
        Ok((SuiteConfig::from_toml(&text)?, base))
    }

    fn validate(&self) -> Result<()> {
        if self.corpora.is_empty() {
            return Err(Error::InvalidArgument("suite config lists no corpora".into()));
        }
        for (i, c) in self.corpora.iter().enumerate() {
            if c.generated.is_none() && c.file.is_none() && c.patterns.is_empty() && c.graph6.is_empty() {
                return Err(Error::InvalidArgument(format!("corpus {i} has no source")));
            }
        }
        if self.weight_bound == 0 || self.jobs == Some(0) {
            return Err(Error::InvalidArgument(
                "weightBound and jobs must be positive".into(),
            ));
        }
        Ok(())
    }

    pub fn selected(&self) -> Vec<TheoremId> {
        TheoremId::ALL
            .into_iter()
            .filter(|t| self.theorems.is_empty() || self.theorems.contains(t))
            .collect()
    }
}

/// Expands every corpus entry, in order, into one list of graphs.
pub fn load_corpus(cfg: &SuiteConfig, base: &Path) -> Result<(String, Vec<Graph>)> {
    let mut labels = Vec::new();
    let mut graphs = Vec::new();
    for spec in &cfg.corpora {
        let mut part = Vec::new();
        let mut label = Vec::new();
        if let Some(n) = spec.generated {
            part.extend(enumerate_up_to(n, spec.filter)?);
            label.push(format!("all graphs on at most {n} vertices"));
        }
        if let Some(file) = &spec.file {
            let path = base.join(file);
            let stream = CorpusStream::from_graph6_file(&path, spec.filter)?;
            for (i, item) in stream.enumerate() {
                part.push(item.map_err(|e| match e {
                    Error::Parse { offset, message } => Error::Parse {
                        offset,
                        message: format!("{} (member {}): {message}", path.display(), i + 1),
                    },
                    other => other,
                })?);
            }
            label.push(format!("graph6 file {}", file.display()));
        }
        for name in &spec.patterns {
            let g = pattern(name.parse::<PatternName>()?)?;
            if spec.filter.accepts(&g) {
                part.push(g);
            }
            label.push(name.clone());
        }
        for text in &spec.graph6 {
            let g = parse_graph6(text.as_bytes())?;
            if spec.filter.accepts(&g) {
                part.push(g);
            }
            label.push(text.clone());
        }
        labels.push(label.join(", "));
        graphs.extend(part);
    }
    Ok((labels.join(" + "), graphs))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteReport {
    pub suite_version: String,
    pub config: SuiteConfig,
    pub reports: Vec<TheoremReport>,
}

impl SuiteReport {
    /// 0 when every report passes or is vacuous, 1 on any violation or hit.
    pub fn exit_code(&self) -> i32 {
        if self.reports.iter().all(TheoremReport::passed) {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}

/// Runs the selected checks on the configured corpus. Errors (bad corpus,
/// unreadable files) map to exit status 2 in the command-line tool.
pub fn run_suite(cfg: &SuiteConfig, base: &Path) -> Result<SuiteReport> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cfg.jobs {
        builder = builder.num_threads(j);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidArgument(format!("worker pool: {e}")))?;
    pool.install(|| run_suite_inner(cfg, base))
}

fn run_suite_inner(cfg: &SuiteConfig, base: &Path) -> Result<SuiteReport> {
    let (universe, graphs) = load_corpus(cfg, base)?;
    let selected = cfg.selected();
    let limits = &cfg.limits;
    let stream = || CorpusStream::from_graphs(universe.clone(), graphs.clone(), CorpusFilter::default());
    let mut reports: Vec<TheoremReport> = Vec::new();
    let wants = |ids: &[TheoremId]| ids.iter().any(|t| selected.contains(t));

    for (t, which) in [
        (TheoremId::MnpdProperties, Minimality::Mnpd),
        (TheoremId::Mn2dProperties, Minimality::Mn2d),
    ] {
        if wants(&[t]) {
            reports.push(minimal_properties(&universe, &graphs, t, which, limits)?);
        }
    }
    if wants(&[
        TheoremId::HomogeneousSets,
        TheoremId::CliqueCutsets,
        TheoremId::TriangleFreeCutsets,
        TheoremId::ClawFreeAntiholes,
    ]) {
        reports.extend(check_structural_theorems(stream(), limits)?);
    }
    if wants(&[TheoremId::ChromaticBounds, TheoremId::FourCritical]) {
        reports.extend(check_chromatic_and_critical(stream(), limits)?);
    }
    if wants(&[TheoremId::WeightEquivalence]) {
        reports.push(check_weight_equivalence(stream(), limits)?);
    }
    let small: Vec<Graph> = graphs.iter().filter(|g| g.n() <= cfg.hunt_max_n).cloned().collect();
    let opts = HuntOptions {
        weight_bound: cfg.weight_bound,
        output_dir: Some(base.join(&cfg.output_dir)),
        limits: *limits,
    };
    for problem in [OpenProblem::PdVsPwd, OpenProblem::VertexInA] {
        if wants(&[problem.theorem_id()]) {
            let corpus = CorpusStream::from_graphs(
                format!("{universe} [n<={}]", cfg.hunt_max_n),
                small.clone(),
                CorpusFilter::default(),
            );
            reports.push(hunt_open_problems(corpus, problem, &opts)?);
        }
    }

    reports.retain(|r| selected.contains(&r.theorem_id));
    reports.sort_by_key(|r| TheoremId::ALL.iter().position(|t| *t == r.theorem_id));
    if !cfg.timings {
        for r in &mut reports {
            r.wall_time_ms = 0;
        }
    }
    Ok(SuiteReport {
        suite_version: env!("CARGO_PKG_VERSION").to_string(),
        config: cfg.clone(),
        reports,
    })
}

fn minimal_properties(
    universe: &str,
    graphs: &[Graph],
    t: TheoremId,
    which: Minimality,
    limits: &Limits,
) -> Result<TheoremReport> {
    let start = std::time::Instant::now();
    let outcomes = run_members(graphs, |g| {
        let mut out = Outcome::default();
        let cert = match capped(certify_minimal(g, which, limits))? {
            Ok(c) => c,
            Err(e) => {
                out.entries.push((t, Entry::Skipped(e.to_string())));
                return Ok(out);
            }
        };
        if !cert.verdict {
            out.entries.push((t, Entry::OutOfScope));
            return Ok(out);
        }
        let report = match which {
            Minimality::Mnpd => check_mnpd_properties(g, limits),
            Minimality::Mn2d => check_mn2d_properties(g, limits),
        };
        let entry = match capped(report)? {
            Ok(r) if r.passed() => Entry::Holds,
            Ok(r) => Entry::Fails(
                r.violations
                    .iter()
                    .map(|v| v.detail.as_str())
                    .collect::<Vec<_>>()
                    .join("; "),
            ),
            Err(e) => Entry::Skipped(e.to_string()),
        };
        out.entries.push((t, entry));
        Ok(out)
    })?;
    let scope = match which {
        Minimality::Mnpd => "in scope: certified MNPD members",
        Minimality::Mn2d => "in scope: certified MN2D members",
    };
    let mut r = fold(
        &[t],
        universe,
        graphs,
        outcomes,
        &BTreeMap::from([(t, vec![scope.to_string()])]),
    )
    .remove(0);
    r.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(r)
}
