//! End-to-end acceptance run: one PASS/FAIL line per criterion, non-zero
//! exit if any fails.

mod oracle;

use std::process::Command;
use std::time::{Duration, Instant};

use pdiv_core::divisibility::{
    certify_minimal, cutset_split, is_divisible, refine_cutset_divisions, Minimality, RefineOutcome,
};
use pdiv_core::invariants::subset_clique_table;
use pdiv_core::io::{enumerate_graphs, enumerate_up_to, pattern};
use pdiv_core::perfection::is_perfect;
use pdiv_core::structure::{clique_cutsets, is_simplicial_set_of, simplicial_peeling, substitute, weight_expand, CutsetMode};
use pdiv_core::verify::{check_mn2d_properties, check_mnpd_properties};
use pdiv_core::{CorpusFilter, Division, DivisionKind, Graph, Limits, PatternName, Scheme, VertexSet, WeightFunction};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pdiv(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_pdiv"))
        .args(args)
        .env_remove("PDIV_JOBS")
        .output()
        .expect("binary runs")
}

fn all_graphs(max_n: usize) -> Vec<Graph> {
    enumerate_up_to(max_n, CorpusFilter::default()).unwrap()
}

fn pd(g: &Graph, limits: &Limits) -> bool {
    is_divisible(g, &Scheme::Pd, limits).unwrap().verdict
}

fn mask(s: VertexSet) -> usize {
    s.bits() as usize
}

fn groetzsch_certification() -> Outcome {
    let start = Instant::now();
    let o = pdiv(&["certify", "--pattern", "groetzsch", "--claim", "mnpd"]);
    ensure(o.status.code() == Some(0), || format!("exit {:?}", o.status.code()))?;
    let cert: serde_json::Value = serde_json::from_slice(&o.stdout).map_err(|e| e.to_string())?;
    ensure(cert["verdict"] == true, || "CLI verdict is not true".into())?;
    let g = pattern(PatternName::Groetzsch).unwrap();
    ensure(oracle::is_mnpd(&g), || "definitional oracle disagrees".into())?;
    let report = check_mnpd_properties(&g, &Limits::default()).map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("{:?}", report.violations))?;
    let min_degree = g.degree_sequence().into_iter().min().unwrap() as u64;
    ensure(report.count("minDegree") == 3 && min_degree == 3 && report.count("omega") + 1 == 3, || {
        format!("min degree {} (report {})", min_degree, report.count("minDegree"))
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!("MNPD, five items hold, min degree 3 = ω+1, {elapsed:.2?}"))
}

fn perfection_oracle() -> Outcome {
    let start = Instant::now();
    let expected = [(4, 11), (5, 34), (6, 156), (7, 1044)];
    for (n, count) in expected {
        let got = enumerate_graphs(n, CorpusFilter::default()).unwrap().len() as u64;
        let burnside = oracle::burnside_count(n);
        ensure(got == count && burnside == count, || format!("n={n}: enumerated {got}, Burnside {burnside}"))?;
    }
    let graphs = all_graphs(7);
    let mut subsets = 0u64;
    for g in &graphs {
        let perfect = oracle::perfect_table(&oracle::tables(g));
        for s in g.vertices().subsets().filter(|s| !s.is_empty()) {
            let got = is_perfect(g, Some(s)).unwrap().perfect;
            subsets += 1;
            ensure(got == perfect[mask(s)], || format!("{} on {s}: library {got}", g6(g)))?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(600), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "counts 11/34/156/1044 match Burnside; {} graphs, {subsets} induced subgraphs agree, {elapsed:.2?}",
        graphs.len()
    ))
}

fn clique_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let graphs = all_graphs(6);
    let mut compared = 0u64;
    for g in &graphs {
        let adj = oracle::adjacency(g);
        let ones = vec![1u32; g.n()];
        let weights: Vec<u32> = (0..g.n()).map(|_| rng.gen_range(1..=4)).collect();
        let h = WeightFunction::new(weights.clone()).unwrap();
        let plain = subset_clique_table(g, None, &Limits::default()).unwrap();
        let weighted = subset_clique_table(g, Some(&h), &Limits::default()).unwrap();
        for s in g.vertices().subsets() {
            let m = mask(s) as u32;
            ensure(plain.get(s) == oracle::brute_clique(&adj, m, &ones), || format!("{} ω on {s}", g6(g)))?;
            ensure(weighted.get(s) == oracle::brute_clique(&adj, m, &weights), || {
                format!("{} ω_h on {s} with {weights:?}", g6(g))
            })?;
            compared += 2;
        }
    }
    Ok(format!("{compared} table entries over {} graphs agree", graphs.len()))
}

fn four_critical_census() -> Outcome {
    let limits = Limits::default();
    let filter = CorpusFilter {
        triangle_free: true,
        ..CorpusFilter::default()
    };
    let graphs = enumerate_up_to(9, filter).unwrap();
    let small = all_graphs(8).into_iter().filter(|g| filter.accepts(g)).count();
    let filtered = graphs.iter().filter(|g| g.n() <= 8).count();
    ensure(small == filtered, || format!("triangle-free n<=8: {filtered} vs {small} by filtering"))?;
    let mut mnpd = Vec::new();
    let mut critical = Vec::new();
    for g in &graphs {
        let m = certify_minimal(g, Minimality::Mnpd, &limits).unwrap().verdict;
        let c = pdiv_core::invariants::is_k_critical(g, 4).unwrap();
        ensure(m == oracle::is_mnpd(g) && c == oracle::is_k_critical(g, 4), || {
            format!("{}: library mnpd={m} critical={c} disagrees with oracle", g6(g))
        })?;
        if m {
            mnpd.push(g6(g));
        }
        if c {
            critical.push(g6(g));
        }
    }
    ensure(mnpd.is_empty() && critical.is_empty(), || format!("mnpd {mnpd:?}, 4-critical {critical:?}"))?;
    let gr = pattern(PatternName::Groetzsch).unwrap();
    let m = certify_minimal(&gr, Minimality::Mnpd, &limits).unwrap().verdict;
    let c = pdiv_core::invariants::is_k_critical(&gr, 4).unwrap();
    ensure(m && c, || format!("Groetzsch mnpd={m} 4-critical={c}"))?;
    Ok(format!(
        "{} triangle-free graphs n<=9: both censuses empty; Groetzsch MNPD and 4-critical",
        graphs.len()
    ))
}

fn binomial2(k: u64) -> u64 {
    k * (k - 1) / 2
}

fn chromatic_bounds() -> Outcome {
    let limits = Limits::default();
    let graphs = all_graphs(7);
    let (mut two, mut pd_count, mut vizing) = (0, 0, 0);
    for g in &graphs {
        let t = oracle::tables(g);
        let full = t.chi.len() - 1;
        let (chi, omega) = (t.chi[full] as u64, t.omega[full] as u64);
        let two_div = is_divisible(g, &Scheme::TwoDiv, &limits).unwrap().verdict;
        let is_pd = pd(g, &limits);
        if two_div {
            two += 1;
            ensure(chi <= 1 << (omega - 1), || format!("{}: 2-divisible with χ={chi}, ω={omega}", g6(g)))?;
        }
        if is_pd {
            pd_count += 1;
            ensure(chi <= binomial2(omega + 1), || format!("{}: PD with χ={chi}, ω={omega}", g6(g)))?;
        }
        if chi <= omega + 1 {
            vizing += 1;
            ensure(is_pd, || format!("{}: χ={chi} <= ω+1 but not PD", g6(g)))?;
        }
    }
    Ok(format!(
        "{} graphs n<=7: {two} 2-divisible, {pd_count} PD, {vizing} with χ<=ω+1, no violations",
        graphs.len()
    ))
}

fn weighted_reduction() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let limits = Limits {
        exhaustive: 18,
        ..Limits::default()
    };
    let mut premise = 0;
    for case in 0..500 {
        let n = rng.gen_range(1..=6);
        let p = rng.gen_range(0.2..0.8);
        let g = oracle::random_graph(&mut rng, n, p);
        let h = WeightFunction::new((0..n).map(|_| rng.gen_range(1..=3)).collect()).unwrap();
        let expanded = weight_expand(&g, &h, None).unwrap().graph;
        if !pd(&expanded, &limits) {
            continue;
        }
        premise += 1;
        let weighted = is_divisible(&g, &Scheme::Weighted(h.clone()), &limits).unwrap().verdict;
        ensure(weighted, || format!("case {case}: {} PD after expansion, not h-PD for {:?}", g6(&g), h.as_slice()))?;
    }
    Ok(format!("500 cases, {premise} with PD expansion, all h-PD"))
}

fn random_perfect(rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let n = rng.gen_range(2..=5);
        let p = rng.gen_range(0.2..0.8);
        let g = oracle::random_graph(rng, n, p);
        if is_perfect(&g, None).unwrap().perfect {
            return g;
        }
    }
}

fn substitution() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for case in 0..500 {
        let g = random_perfect(&mut rng);
        let h = random_perfect(&mut rng);
        let v = rng.gen_range(0..g.n());
        let s = substitute(&g, v, &h).unwrap().graph;
        let lib = is_perfect(&s, None).unwrap().perfect;
        let def = *oracle::perfect_table(&oracle::tables(&s)).last().unwrap();
        ensure(lib && def, || format!("case {case}: {} into {} at {v}: library {lib}, oracle {def}", g6(&h), g6(&g)))?;
    }
    Ok("500 substitutions of perfect into perfect are perfect (library and oracle)".into())
}

/// `G[X]` is a disjoint union of pairwise anticomplete cliques.
fn cliques_apart(g: &Graph, x: VertexSet) -> bool {
    g.components_of(x).into_iter().all(|c| g.is_clique(c))
}

fn simplicial_propositions() -> Outcome {
    let limits = Limits::default();
    let graphs = all_graphs(6);
    let (mut shapes, mut transfers, mut peelings) = (0u64, 0u64, 0u64);
    for g in &graphs {
        let v = g.vertices();
        let perfect = oracle::perfect_table(&oracle::tables(g));
        let g_perfect = perfect[mask(v)];
        let g_pd = pd(g, &limits);
        for x in v.subsets().filter(|x| !x.is_empty()) {
            for y in (v - x).subsets() {
                if is_simplicial_set_of(g, x, y).unwrap() {
                    shapes += 1;
                    ensure(cliques_apart(g, x), || format!("{}: {x} simplicial for {y} but not cliques", g6(g)))?;
                }
            }
            if is_simplicial_set_of(g, x, v - x).unwrap() {
                transfers += 1;
                let (rest_perfect, rest_pd) = match g.delete(x) {
                    Some(rest) => (perfect[mask(v - x)], pd(&rest.graph, &limits)),
                    None => (true, true),
                };
                ensure(g_perfect == rest_perfect, || format!("{}: perfection transfer fails at {x}", g6(g)))?;
                ensure(g_pd == rest_pd, || format!("{}: PD transfer fails at {x}", g6(g)))?;
            }
            let d = simplicial_peeling(g, x).unwrap();
            peelings += 1;
            ensure(d.is_valid(g), || format!("{}: invalid peeling of {x}", g6(g)))?;
            ensure(d.perfect == perfect[mask(x)], || format!("{}: peeling flag wrong on {x}", g6(g)))?;
        }
    }
    Ok(format!(
        "{} graphs n<=6: {shapes} simplicial pairs, {transfers} transfers, {peelings} peelings, no violations",
        graphs.len()
    ))
}

fn hunters() -> Outcome {
    let dir = std::env::temp_dir().join(format!("pdiv-acceptance-{}", std::process::id()));
    let mut lines = Vec::new();
    for problem in ["pd-vs-pwd", "vertex-in-a"] {
        let o = pdiv(&["hunt", "--problem", problem, "--up-to", "6", "--weight-bound", "3", "--out-dir", dir.to_str().unwrap()]);
        let report: serde_json::Value = serde_json::from_slice(&o.stdout).map_err(|e| e.to_string())?;
        let hits = report["violations"].as_array().map_or(0, Vec::len);
        ensure(o.status.code() == Some(0) && hits == 0, || {
            format!("{problem}: exit {:?}, {hits} hits, artifacts {}", o.status.code(), report["artifacts"])
        })?;
        lines.push(format!("{problem}: {} in scope, 0 hits", report["inScope"]));
    }
    ensure(!dir.exists(), || "artifacts written without hits".into())?;
    Ok(lines.join("; "))
}

fn random_perfect_division(rng: &mut ChaCha8Rng, g: &Graph, side: VertexSet) -> Division {
    let omega = pdiv_core::invariants::clique_number(g, None, Some(side));
    loop {
        let b: VertexSet = side.iter().filter(|_| rng.gen_bool(0.4)).collect();
        if pdiv_core::invariants::clique_number(g, None, Some(b)) < omega {
            return Division {
                a: side - b,
                b,
                kind: DivisionKind::Perfect,
                weights: None,
            };
        }
    }
}

fn mn2d_sanity() -> Outcome {
    let limits = Limits::default();
    for k in [5, 7] {
        let g = pattern(PatternName::Cycle(Some(k))).unwrap();
        let cert = certify_minimal(&g, Minimality::Mn2d, &limits).unwrap();
        ensure(cert.verdict, || format!("C{k} not MN2D"))?;
        let r = check_mn2d_properties(&g, &limits).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("C{k}: {:?}", r.violations))?;
        let bound = 2 * r.count("omega") - 2;
        ensure(g.degree_sequence().iter().all(|&d| d as u64 >= bound), || format!("C{k} degree bound"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let (mut instances, mut merged, mut max_ratio) = (0, 0, 0usize);
    while instances < 500 {
        let n = rng.gen_range(3..=10);
        let g = oracle::random_chordal(&mut rng, n);
        let cutsets = clique_cutsets(&g, CutsetMode::All).unwrap();
        if cutsets.is_empty() {
            continue;
        }
        instances += 1;
        let x = cutsets[rng.gen_range(0..cutsets.len())];
        let split = cutset_split(&g, x).unwrap();
        let d1 = random_perfect_division(&mut rng, &g, split.side(1));
        let d2 = random_perfect_division(&mut rng, &g, split.side(2));
        let r = refine_cutset_divisions(&g, &split, &d1, &d2).unwrap();
        ensure(r.iterations <= x.len(), || format!("{}: {} iterations for |X|={}", g6(&g), r.iterations, x.len()))?;
        max_ratio = max_ratio.max(r.iterations);
        if let RefineOutcome::Merged(d) = &r.outcome {
            merged += 1;
            ensure(d.is_valid(&g, g.vertices()), || format!("{}: merged division invalid", g6(&g)))?;
        }
    }
    Ok(format!(
        "C5, C7 MN2D with items (1)-(4); 500 chordal cutset instances, {merged} merged and valid, max {max_ratio} iterations"
    ))
}

fn g6(g: &Graph) -> String {
    pdiv_core::io::graph_id(g)
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Groetzsch certification", groetzsch_certification),
        ("perfection oracle, n<=7", perfection_oracle),
        ("clique oracle, n<=6", clique_oracle),
        ("triangle-free 4-critical census, n<=9", four_critical_census),
        ("chromatic bounds, n<=7", chromatic_bounds),
        ("weighted reduction fuzz", weighted_reduction),
        ("substitution fuzz", substitution),
        ("simplicial propositions, n<=6", simplicial_propositions),
        ("open-problem hunters, n<=6", hunters),
        ("MN2D sanity and cutset refinement", mn2d_sanity),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
