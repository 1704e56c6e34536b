use std::path::Path;

use anyhow::{bail, Context, Result};
use pdiv_core::divisibility::{certify_minimal, division_through_vertex, find_division, is_divisible, Minimality};
use pdiv_core::invariants::{chromatic_number_of, clique_number, independence_number};
use pdiv_core::io::{enumerate_up_to, is_triangle_free, mycielski, parse_graph6, to_graph6};
use pdiv_core::perfection::is_perfect_with;
use pdiv_core::structure::{
    basins, clique_cutsets, homogeneous_sets, induced_free, simplicial_peeling, simplicial_vertices, substitute,
    weight_expand, CutsetMode, HomogeneousMode,
};
use pdiv_core::verify::{hunt_open_problems, run_suite, HuntOptions, OpenProblem, SuiteConfig};
use pdiv_core::{Certificate, CorpusFilter, CorpusStream, DivisionKind, Graph, Limits, PatternName, Scheme};
use serde::Serialize;
use serde_json::{json, Value};

use crate::input::{load_pattern, parse_subset, read_weights};
use crate::{ClaimArg, Cli, Command, ConstructArg, FindArg, KindArg, OutputOpts, ProblemArg};

pub fn run(cli: &Cli) -> Result<u8> {
    let out = &cli.output;
    if let Some(jobs) = out.jobs {
        if jobs == 0 {
            bail!("--jobs must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring the worker pool")?;
    }
    let mut limits = Limits::default();
    if let Some(n) = out.max_n {
        limits.exhaustive = n as usize;
    }
    match &cli.command {
        Command::Info(input) => info(out, &input.load()?, &limits),
        Command::Perfect { graph, subset } => {
            let g = graph.load()?;
            let s = subset.as_deref().map(|t| parse_subset(t, &g)).transpose()?;
            let verdict = is_perfect_with(&g, s, &limits)?;
            let line = match verdict.witness {
                None => "perfect".to_string(),
                Some(w) => format!("not perfect: {:?} {}", w.kind, w.set),
            };
            emit(out, &line, &verdict)
        }
        Command::Divide {
            graph,
            kind,
            weights,
            through,
            subset,
        } => {
            let g = graph.load()?;
            divide(out, &g, *kind, weights.as_deref(), *through, subset.as_deref(), &limits)
        }
        Command::Certify {
            graph,
            claim,
            weight_bound,
            weights,
        } => {
            let g = graph.load()?;
            let cert = certify(&g, *claim, *weight_bound, weights.as_deref(), &limits)?;
            let cert = if out.timings { cert } else { cert.without_timing() };
            emit(out, &cert.verdict.to_string(), &cert)
        }
        Command::Structure {
            graph,
            find,
            mode,
            max_size,
            free_of,
            subset,
        } => {
            let g = graph.load()?;
            structure(out, &g, *find, mode.as_deref(), *max_size, free_of.as_deref(), subset.as_deref(), &limits)
        }
        Command::Construct {
            graph,
            op,
            vertex,
            with_graph6,
            with_pattern,
            weights,
        } => {
            let g = graph.load()?;
            let built = construct(&g, *op, *vertex, with_graph6.as_deref(), with_pattern.as_deref(), weights.as_deref())?;
            let g6 = to_graph6(&built)?;
            let body = json!({ "graph6": g6, "n": built.n(), "m": built.edge_count() });
            emit(out, &g6, &body)
        }
        Command::Verify { config, output } => verify(out, config, output.as_deref(), &limits),
        Command::Hunt {
            problem,
            up_to,
            corpus,
            weight_bound,
            out_dir,
        } => {
            let problem = match problem {
                ProblemArg::PdVsPwd => OpenProblem::PdVsPwd,
                ProblemArg::VertexInA => OpenProblem::VertexInA,
            };
            let stream = match corpus {
                Some(path) => CorpusStream::from_graph6_file(path, CorpusFilter::default())?,
                None => CorpusStream::from_graphs(
                    format!("all graphs with n <= {up_to}"),
                    enumerate_up_to(*up_to, CorpusFilter::default())?,
                    CorpusFilter::default(),
                ),
            };
            let opts = HuntOptions {
                weight_bound: *weight_bound,
                output_dir: Some(out_dir.clone()),
                limits,
            };
            let mut report = hunt_open_problems(stream, problem, &opts)?;
            if !out.timings {
                report.wall_time_ms = 0;
            }
            let line = format!(
                "{}: {} in scope, {} hits",
                problem,
                report.in_scope,
                report.violations.len()
            );
            emit(out, &line, &report)?;
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

/// Prints JSON, the human rendering, or just `line` under `--quiet`.
fn emit<T: Serialize>(out: &OutputOpts, line: &str, body: &T) -> Result<u8> {
    if out.quiet {
        println!("{line}");
    } else if out.human {
        println!("{line}");
        println!("{}", render_human(&serde_json::to_value(body)?, 1));
    } else {
        println!("{}", serde_json::to_string_pretty(body)?);
    }
    Ok(0)
}

fn render_human(v: &Value, depth: usize) -> String {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v {
                Value::Object(_) => format!("{pad}{k}:\n{}", render_human(v, depth + 1)),
                Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                    let rows: Vec<String> = items.iter().map(|i| render_human(i, depth + 1)).collect();
                    format!("{pad}{k}:\n{}", rows.join(&format!("\n{pad}  --\n")))
                }
                _ => format!("{pad}{k}: {}", scalar(v)),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        other => format!("{pad}{}", scalar(other)),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

fn info(out: &OutputOpts, g: &Graph, limits: &Limits) -> Result<u8> {
    let degrees = g.degree_sequence();
    let omega = clique_number(g, None, None);
    let chi = chromatic_number_of(g, g.vertices(), limits)?;
    let body = json!({
        "graph6": to_graph6(g)?,
        "n": g.n(),
        "m": g.edge_count(),
        "omega": omega,
        "alpha": independence_number(g, None),
        "chi": chi,
        "minDegree": degrees.iter().min(),
        "maxDegree": degrees.iter().max(),
        "degreeSequence": degrees,
        "connected": g.is_connected(),
        "triangleFree": is_triangle_free(g),
    });
    let line = format!("n={} m={} omega={omega} chi={chi}", g.n(), g.edge_count());
    emit(out, &line, &body)
}

fn divide(
    out: &OutputOpts,
    g: &Graph,
    kind: KindArg,
    weights: Option<&Path>,
    through: Option<usize>,
    subset: Option<&str>,
    limits: &Limits,
) -> Result<u8> {
    let division = match (through, kind) {
        (Some(v), KindArg::Perfect) => {
            if weights.is_some() || subset.is_some() {
                bail!("--through works on the whole unweighted graph only");
            }
            division_through_vertex(g, v, limits)?
        }
        (Some(_), KindArg::Two) => bail!("--through needs --kind perfect"),
        (None, _) => {
            let target = subset.map(|t| parse_subset(t, g)).transpose()?.unwrap_or(g.vertices());
            let h = weights.map(|p| read_weights(p, g)).transpose()?;
            let kind = match kind {
                KindArg::Perfect => DivisionKind::Perfect,
                KindArg::Two => DivisionKind::Two,
            };
            find_division(g, target, kind, h.as_ref(), limits)?
        }
    };
    match division {
        Some(d) => {
            let line = format!("A={} B={}", d.a, d.b);
            emit(out, &line, &d)
        }
        None => {
            println!("none");
            Ok(0)
        }
    }
}

fn certify(g: &Graph, claim: ClaimArg, bound: u32, weights: Option<&Path>, limits: &Limits) -> Result<Certificate> {
    let scheme = match claim {
        ClaimArg::Mnpd => return Ok(certify_minimal(g, Minimality::Mnpd, limits)?),
        ClaimArg::Mn2d => return Ok(certify_minimal(g, Minimality::Mn2d, limits)?),
        ClaimArg::Pd => Scheme::Pd,
        ClaimArg::H2pd => Scheme::H2,
        ClaimArg::Pwd => Scheme::PwdBounded(bound),
        ClaimArg::TwoDiv => Scheme::TwoDiv,
        ClaimArg::Hpd => {
            let path = weights.context("--claim hpd needs --weights")?;
            Scheme::Weighted(read_weights(path, g)?)
        }
    };
    if weights.is_some() && !matches!(claim, ClaimArg::Hpd) {
        bail!("--weights only applies to --claim hpd");
    }
    Ok(is_divisible(g, &scheme, limits)?)
}

#[allow(clippy::too_many_arguments)]
fn structure(
    out: &OutputOpts,
    g: &Graph,
    find: FindArg,
    mode: Option<&str>,
    max_size: Option<usize>,
    free_of: Option<&str>,
    subset: Option<&str>,
    limits: &Limits,
) -> Result<u8> {
    let mode = mode.map(|m| m.to_ascii_lowercase().replace('_', "-"));
    let mode = mode.as_deref();
    match find {
        FindArg::Homogeneous => {
            let m = match mode.unwrap_or("all") {
                "all" | "all-minimal" => HomogeneousMode::AllMinimal,
                "any" => HomogeneousMode::Any,
                "two-clique" => HomogeneousMode::TwoClique,
                other => bail!("unknown homogeneous mode {other:?}"),
            };
            let sets = homogeneous_sets(g, m, limits)?;
            emit(out, &format!("{} homogeneous sets", sets.len()), &json!({ "homogeneousSets": sets }))
        }
        FindArg::Cutsets => {
            let m = match mode.unwrap_or("all") {
                "all" => CutsetMode::All,
                "any" => CutsetMode::Any,
                "minimum" => CutsetMode::Minimum,
                other => bail!("unknown cutset mode {other:?}"),
            };
            let sets = clique_cutsets(g, m)?;
            emit(out, &format!("{} clique cutsets", sets.len()), &json!({ "cliqueCutsets": sets }))
        }
        FindArg::Peeling => {
            let text = subset.context("--find peeling needs --subset X")?;
            let x = parse_subset(text, g)?;
            let d = simplicial_peeling(g, x)?;
            emit(out, &format!("{} parts, perfect={}", d.parts.len(), d.perfect), &d)
        }
        FindArg::Basins => {
            let k = max_size.unwrap_or(g.n());
            let found = basins(g, k, limits)?;
            emit(out, &format!("{} basins", found.len()), &json!({ "basins": found }))
        }
        FindArg::Simplicial => {
            let s = simplicial_vertices(g, g.vertices());
            emit(out, &s.to_string(), &json!({ "simplicialVertices": s }))
        }
        FindArg::Free => {
            let name: PatternName = free_of.context("--find free needs --free-of PATTERN")?.parse()?;
            let v = induced_free(g, name)?;
            emit(out, &v.free.to_string(), &v)
        }
    }
}

fn construct(
    g: &Graph,
    op: ConstructArg,
    vertex: Option<usize>,
    with_graph6: Option<&str>,
    with_pattern: Option<&str>,
    weights: Option<&Path>,
) -> Result<Graph> {
    Ok(match op {
        ConstructArg::Mycielski => mycielski(g)?,
        ConstructArg::Complement => g.complement(),
        ConstructArg::Substitute => {
            let v = vertex.context("substitute needs --vertex")?;
            let h = match (with_graph6, with_pattern) {
                (Some(text), None) => parse_graph6(text.as_bytes())?,
                (None, Some(name)) => load_pattern(name)?,
                _ => bail!("substitute needs exactly one of --with-graph6, --with-pattern"),
            };
            substitute(g, v, &h)?.graph
        }
        ConstructArg::WeightExpand => {
            let path = weights.context("weight-expand needs --weights")?;
            let h = read_weights(path, g)?;
            weight_expand(g, &h, vertex)?.graph
        }
    })
}

fn verify(out: &OutputOpts, config: &Path, output: Option<&Path>, limits: &Limits) -> Result<u8> {
    let (mut cfg, base) = SuiteConfig::load(config)?;
    // The global pool is already sized by --jobs; a config value would shadow it.
    if out.jobs.is_some() {
        cfg.jobs = None;
    }
    if out.max_n.is_some() {
        cfg.limits.exhaustive = limits.exhaustive;
    }
    let report = run_suite(&cfg, &base)?;
    let code = report.exit_code() as u8;
    let failing: Vec<&str> = report
        .reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.theorem_id.as_str())
        .collect();
    let line = if failing.is_empty() {
        format!("pass: {} checks", report.reports.len())
    } else {
        format!("fail: {}", failing.join(", "))
    };
    match output {
        Some(path) => {
            std::fs::write(path, report.to_json() + "\n").with_context(|| format!("writing {}", path.display()))?;
            println!("{line}");
        }
        None if out.quiet || out.human => {
            println!("{line}");
            if out.human {
                for r in &report.reports {
                    let state = if !r.passed() {
                        "FAIL"
                    } else if r.vacuous {
                        "vacuous"
                    } else {
                        "pass"
                    };
                    println!("  {:<26} {state:<8} checked={} inScope={}", r.theorem_id.as_str(), r.checked, r.in_scope);
                }
            }
        }
        None => println!("{}", report.to_json()),
    }
    Ok(code)
}
