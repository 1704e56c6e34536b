use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Args};
use pdiv_core::io::{parse_graph, pattern};
use pdiv_core::{Format, Graph, PatternName, VertexSet, WeightFunction};

#[derive(Debug, Args)]
#[group(skip)]
#[command(group(ArgGroup::new("source").required(true).args(["graph6", "file", "pattern"])))]
pub struct GraphInput {
    /// Graph in graph6.
    #[arg(long)]
    pub graph6: Option<String>,
    /// Graph file (graph6 or edge list).
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Named graph: c5, p4, k4, claw, diamond, groetzsch, c9, ...
    #[arg(long)]
    pub pattern: Option<String>,
    /// Size for the parametrised patterns `kn`, `cn`, `pn`.
    #[arg(long, requires = "pattern")]
    pub size: Option<usize>,
    /// File format; inferred from the extension when omitted.
    #[arg(long, requires = "file")]
    pub format: Option<Format>,
}

impl GraphInput {
    pub fn load(&self) -> Result<Graph> {
        if let Some(text) = &self.graph6 {
            return parse_graph(text.as_bytes(), Format::Graph6)
                .with_context(|| format!("parsing graph6 {text:?}"));
        }
        if let Some(path) = &self.file {
            let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
            let format = self.format.unwrap_or_else(|| infer_format(path));
            return parse_graph(&bytes, format).with_context(|| format!("parsing {}", path.display()));
        }
        if let Some(name) = &self.pattern {
            let parsed: PatternName = name.parse()?;
            let parsed = match self.size {
                Some(k) => parsed.with_size(k),
                None => parsed,
            };
            return Ok(pattern(parsed)?);
        }
        bail!("no graph given; use --graph6, --file or --pattern")
    }
}

pub fn load_pattern(name: &str) -> Result<Graph> {
    let parsed: PatternName = name.parse()?;
    Ok(pattern(parsed)?)
}

fn infer_format(path: &Path) -> Format {
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6") | Some("graph6") => Format::Graph6,
        Some("txt") | Some("edges") | Some("el") => Format::Edgelist,
        _ => Format::Graph6,
    }
}

/// Parses `0,1,5` (or `{0,1,5}`) into a set checked against `g`.
pub fn parse_subset(text: &str, g: &Graph) -> Result<VertexSet> {
    let trimmed = text.trim().trim_start_matches('{').trim_end_matches('}');
    let mut set = VertexSet::EMPTY;
    for part in trimmed.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part.parse().with_context(|| format!("bad vertex {part:?}"))?;
        g.check_vertex(v)?;
        set.insert(v);
    }
    if set.is_empty() {
        bail!("empty vertex set {text:?}");
    }
    Ok(set)
}

pub fn read_weights(path: &Path, g: &Graph) -> Result<WeightFunction> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let weights = text
        .split_whitespace()
        .map(|w| w.parse::<u32>().with_context(|| format!("bad weight {w:?}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightFunction::for_graph(weights, g)?)
}
