//! Necessary conditions on minimal non-divisible graphs, evaluated
//! literally on a single certified subject.

use std::time::Instant;

use crate::divisibility::{certify_minimal, Minimality};
use crate::error::{Error, Result};
use crate::invariants::{clique_number, independence_number, subset_clique_table};
use crate::io::graph_id;
use crate::structure::{basins, sets_of_size, simplicial_vertices};
use crate::{Graph, Limits, Vertex};

use super::report::{TheoremId, TheoremReport};

/// Items (1)-(5) for an MNPD subject: no basin or simplicial set; the
/// `Y ⊆ N(v)` condition; a maximum clique through `v` missing part of
/// `N(v)`; `|N(X)| >= ω - ω(X)`; `deg(v) >= ω + 1`.
pub fn check_mnpd_properties(g: &Graph, limits: &Limits) -> Result<TheoremReport> {
    check(g, Minimality::Mnpd, limits)
}

/// Items (1)-(4) for an MN2D subject: no basin; the maximum-clique
/// condition; `|N(X)| >= ω - ω(X)`; `deg(v) >= 2ω - 2`.
pub fn check_mn2d_properties(g: &Graph, limits: &Limits) -> Result<TheoremReport> {
    check(g, Minimality::Mn2d, limits)
}

fn check(g: &Graph, which: Minimality, limits: &Limits) -> Result<TheoremReport> {
    let start = Instant::now();
    let cert = certify_minimal(g, which, limits)?;
    let id = graph_id(g);
    if !cert.verdict {
        return Err(Error::precondition(format!("{id} is not {:?}", cert.claim)));
    }
    let theorem = match which {
        Minimality::Mnpd => TheoremId::MnpdProperties,
        Minimality::Mn2d => TheoremId::Mn2dProperties,
    };
    let mut report = TheoremReport::new(theorem, id.clone());
    report.checked = 1;
    report.in_scope = 1;
    report.assumptions = cert.assumptions.clone();
    let omega = clique_number(g, None, None);
    let n = g.n();

    let mut failures: Vec<String> = Vec::new();
    let label = |mnpd: &str, mn2d: &str| -> String {
        match which {
            Minimality::Mnpd => mnpd.to_string(),
            Minimality::Mn2d => mn2d.to_string(),
        }
    };

    let found = basins(g, n, limits)?;
    if let Some(b) = found.first() {
        failures.push(format!("item (1): {} is a basin", b.set));
    }
    if which == Minimality::Mnpd {
        let simplicial = simplicial_vertices(g, g.vertices());
        if !simplicial.is_empty() {
            failures.push(format!("item (1): simplicial vertices {simplicial}"));
        }
        for v in g.vertices() {
            if !has_split_neighbourhood(g, v, omega) {
                failures.push(format!(
                    "item (2): no Y in N({v}) with alpha(Y) >= 2 and omega(N(v) - Y) = {}",
                    omega - 1
                ));
            }
        }
    }
    for v in g.vertices() {
        if !has_loose_maximum_clique(g, v, omega as usize) {
            failures.push(format!(
                "{}: no maximum clique through {v} missing part of N({v})",
                label("item (3)", "item (2)")
            ));
        }
    }
    let table = subset_clique_table(g, None, limits)?;
    if let Some(x) = g
        .vertices()
        .subsets()
        .filter(|x| !x.is_empty())
        .find(|&x| (g.open_neighborhood(x).len() as u64) < omega - table.get(x))
    {
        failures.push(format!(
            "{}: |N({x})| = {} < omega - omega(X) = {}",
            label("item (4)", "item (3)"),
            g.open_neighborhood(x).len(),
            omega - table.get(x)
        ));
    }
    let bound = match which {
        Minimality::Mnpd => omega as usize + 1,
        Minimality::Mn2d => (2 * omega as usize).saturating_sub(2),
    };
    let min_degree = (0..n).map(|v| g.degree(v)).min().unwrap_or(0);
    if min_degree < bound {
        let v = (0..n).find(|&v| g.degree(v) < bound).unwrap();
        failures.push(format!(
            "{}: deg({v}) = {} < {bound}",
            label("item (5)", "item (4)"),
            g.degree(v)
        ));
    }
    for f in failures {
        report.violation(&id, f);
    }
    report.bump("omega", omega);
    report.bump("minDegree", min_degree as u64);
    report.bump("degreeBound", bound as u64);
    report.finish();
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Some `Y ⊆ N(v)` has `α(Y) >= 2` and `ω(N(v) - Y) = ω - 1`.
fn has_split_neighbourhood(g: &Graph, v: Vertex, omega: u64) -> bool {
    let nv = g.neighbors(v);
    nv.subsets().any(|y| {
        y.len() >= 2
            && independence_number(g, Some(y)) >= 2
            && clique_number(g, None, Some(nv - y)) + 1 == omega
    })
}

/// Some maximum clique `K ∋ v` has `N(v) ⊄ K`.
fn has_loose_maximum_clique(g: &Graph, v: Vertex, omega: usize) -> bool {
    let nv = g.neighbors(v);
    sets_of_size(nv, omega - 1)
        .into_iter()
        .filter(|&rest| g.is_clique(rest))
        .any(|rest| !nv.is_subset(rest.with(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::patterns::{complete, cycle, pattern};
    use crate::PatternName;

    #[test]
    fn groetzsch_is_tight() {
        let g = pattern(PatternName::Groetzsch).unwrap();
        let r = check_mnpd_properties(&g, &Limits::default()).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        assert_eq!(r.count("minDegree"), 3);
        assert_eq!(r.count("degreeBound"), 3);
        assert!(!r.vacuous);
    }

    #[test]
    fn c5_is_not_mnpd() {
        let c5 = cycle(5).unwrap();
        assert!(matches!(
            check_mnpd_properties(&c5, &Limits::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn odd_cycles_are_mn2d() {
        for k in [5, 7] {
            let c = cycle(k).unwrap();
            let r = check_mn2d_properties(&c, &Limits::default()).unwrap();
            assert!(r.passed(), "{:?}", r.violations);
            assert_eq!(r.count("minDegree"), 2);
            assert_eq!(r.count("degreeBound"), 2);
        }
        assert!(check_mn2d_properties(&complete(3).unwrap(), &Limits::default()).is_err());
    }
}
