//! Identities checked on every graph of a small universe.

use pdiv_core::divisibility::{find_division, is_divisible};
use pdiv_core::invariants::{chromatic_number, clique_number, independence_number};
use pdiv_core::io::{canonical_code, enumerate_graphs, enumerate_up_to};
use pdiv_core::perfection::is_perfect;
use pdiv_core::structure::{is_simplicial_set_of, weight_expand};
use pdiv_core::{CorpusFilter, DivisionKind, Graph, Limits, Scheme, WeightFunction};

fn universe(max_n: usize) -> Vec<Graph> {
    enumerate_up_to(max_n, CorpusFilter::default()).unwrap()
}

#[test]
fn connected_counts() {
    let connected = CorpusFilter {
        connected: true,
        ..CorpusFilter::default()
    };
    let counts: Vec<usize> = (1..=7).map(|n| enumerate_graphs(n, connected).unwrap().len()).collect();
    assert_eq!(counts, [1, 1, 2, 6, 21, 112, 853]);
}

#[test]
fn basic_invariants_up_to_seven() {
    for g in universe(7) {
        let omega = clique_number(&g, None, None);
        assert_eq!(independence_number(&g, None), clique_number(&g.complement(), None, None));
        let chi = chromatic_number(&g).unwrap() as u64;
        assert!(omega <= chi && chi <= g.n() as u64);
        let ones = WeightFunction::ones(g.n());
        assert_eq!(clique_number(&g, Some(&ones), None), omega);
    }
}

#[test]
fn perfection_is_closed_under_complement() {
    for g in universe(7) {
        let p = is_perfect(&g, None).unwrap().perfect;
        assert_eq!(p, is_perfect(&g.complement(), None).unwrap().perfect);
    }
}

#[test]
fn perfection_transfers_across_simplicial_sets() {
    for g in enumerate_graphs(7, CorpusFilter::default()).unwrap() {
        let v = g.vertices();
        let whole = is_perfect(&g, None).unwrap().perfect;
        for x in v.subsets().filter(|x| !x.is_empty() && *x != v) {
            if is_simplicial_set_of(&g, x, v - x).unwrap() {
                assert_eq!(whole, is_perfect(&g, Some(v - x)).unwrap().perfect, "{g:?} at {x}");
            }
        }
    }
}

#[test]
fn found_divisions_revalidate() {
    let limits = Limits::default();
    for g in universe(6) {
        for s in g.vertices().subsets().filter(|s| !s.is_empty()) {
            for kind in [DivisionKind::Perfect, DivisionKind::Two] {
                if let Some(d) = find_division(&g, s, kind, None, &limits).unwrap() {
                    assert!(d.is_valid(&g, s), "{g:?} {s} {kind:?}");
                }
            }
        }
    }
}

#[test]
fn two_divisible_implies_perfectly_divisible() {
    let limits = Limits::default();
    for g in universe(7) {
        if is_divisible(&g, &Scheme::TwoDiv, &limits).unwrap().verdict {
            assert!(is_divisible(&g, &Scheme::Pd, &limits).unwrap().verdict);
        }
    }
}

fn expand_in_order(g: &Graph, h: &WeightFunction, order: &[usize]) -> Graph {
    let mut g = g.clone();
    let mut h = h.clone();
    for &x in order {
        let e = weight_expand(&g, &h, Some(x)).unwrap();
        g = e.graph;
        h = e.weights;
    }
    assert!(h.is_all_ones());
    g
}

fn orders(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in orders(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

#[test]
fn expansion_order_does_not_matter_up_to_isomorphism() {
    for g in universe(4) {
        let n = g.n();
        for code in 0..3usize.pow(n as u32) {
            let weights: Vec<u32> = (0..n).map(|i| (code / 3usize.pow(i as u32) % 3) as u32 + 1).collect();
            let h = WeightFunction::new(weights).unwrap();
            let reference = canonical_code(&weight_expand(&g, &h, None).unwrap().graph);
            let heavy: Vec<usize> = (0..n).filter(|&v| h.get(v) >= 2).collect();
            for order in orders(&heavy) {
                assert_eq!(canonical_code(&expand_in_order(&g, &h, &order)), reference);
            }
        }
    }
}
