//! Reference implementations used only to cross-check the library. Each
//! one is the plain definition evaluated by brute force, sharing no code
//! with `pdiv_core` beyond reading adjacency.

#![allow(dead_code)]

use pdiv_core::Graph;
use rand::Rng;

/// Unlabelled graphs on `n` vertices by Burnside's lemma: the average over
/// all permutations of `2^(cycles induced on vertex pairs)`.
pub fn burnside_count(n: usize) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total: u128 = 0;
    let mut count: u128 = 0;
    permutations(&mut perm, 0, &mut |p| {
        let mut seen = vec![false; pairs.len()];
        let mut cycles = 0u32;
        for start in 0..pairs.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                let (a, b) = pairs[k];
                let (x, y) = (p[a].min(p[b]), p[a].max(p[b]));
                k = pairs.iter().position(|&q| q == (x, y)).unwrap();
            }
        }
        total += 1u128 << cycles;
        count += 1;
    });
    (total / count) as u64
}

fn permutations(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, f);
        p.swap(k, i);
    }
}

pub fn adjacency(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|u| (0..g.n()).filter(|&v| g.adjacent(u, v)).fold(0u32, |m, v| m | 1 << v))
        .collect()
}

fn is_clique(adj: &[u32], s: u32) -> bool {
    (0..adj.len()).filter(|v| s >> v & 1 == 1).all(|v| adj[v] & s == s & !(1 << v))
}

fn is_independent(adj: &[u32], s: u32) -> bool {
    (0..adj.len()).filter(|v| s >> v & 1 == 1).all(|v| adj[v] & s == 0)
}

fn submasks(s: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(s);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & s) };
        Some(cur)
    })
}

/// Heaviest clique inside `s`, by trying every subset of `s`.
pub fn brute_clique(adj: &[u32], s: u32, weights: &[u32]) -> u64 {
    submasks(s)
        .filter(|&k| is_clique(adj, k))
        .map(|k| (0..adj.len()).filter(|v| k >> v & 1 == 1).map(|v| weights[v] as u64).sum())
        .max()
        .unwrap_or(0)
}

/// ω and χ of every induced subgraph, by brute force over cliques and
/// colour classes.
pub struct Tables {
    pub omega: Vec<u32>,
    pub chi: Vec<u32>,
}

pub fn tables(g: &Graph) -> Tables {
    let adj = adjacency(g);
    let full = (1u32 << g.n()) - 1;
    let size = 1usize << g.n();
    let independent: Vec<bool> = (0..size as u32).map(|s| is_independent(&adj, s)).collect();
    let clique: Vec<bool> = (0..size as u32).map(|s| is_clique(&adj, s)).collect();
    let mut omega = vec![0u32; size];
    let mut chi = vec![0u32; size];
    for s in 1..=full {
        omega[s as usize] = submasks(s).filter(|&k| clique[k as usize]).map(u32::count_ones).max().unwrap();
        let low = s & s.wrapping_neg();
        chi[s as usize] = 1 + submasks(s & !low)
            .map(|r| r | low)
            .filter(|&i| independent[i as usize])
            .map(|i| chi[(s & !i) as usize])
            .min()
            .unwrap();
    }
    Tables { omega, chi }
}

/// Perfect in the original sense: χ = ω on every induced subgraph.
pub fn perfect_table(t: &Tables) -> Vec<bool> {
    let mut perfect = vec![true; t.chi.len()];
    for s in 1..t.chi.len() {
        let own = t.chi[s] == t.omega[s];
        let sub = (0..32).filter(|v| s >> v & 1 == 1).all(|v| perfect[s & !(1 << v)]);
        perfect[s] = own && sub;
    }
    perfect
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// A connected chordal graph: each new vertex is attached to a clique
/// inside the closed neighbourhood of a random earlier vertex, so the
/// insertion order reversed is a perfect elimination order.
pub fn random_chordal(rng: &mut impl Rng, n: usize) -> Graph {
    let mut adj = vec![0u64; n];
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        let mut chosen = 1u64 << u;
        for w in 0..v {
            if adj[u] >> w & 1 == 1 && rng.gen_bool(0.5) && adj[w] & chosen == chosen {
                chosen |= 1 << w;
            }
        }
        for w in 0..v {
            if chosen >> w & 1 == 1 {
                adj[w] |= 1 << v;
                adj[v] |= 1 << w;
                edges.push((w, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// For every subset `S`: some `A ⊆ S` has `G[A]` perfect and
/// `ω(S - A) < ω(S)`.
pub fn division_table(t: &Tables, perfect: &[bool]) -> Vec<bool> {
    (0..t.chi.len() as u32)
        .map(|s| s == 0 || submasks(s).any(|a| perfect[a as usize] && t.omega[(s & !a) as usize] < t.omega[s as usize]))
        .collect()
}

/// Minimally nonperfectly divisible by definition.
pub fn is_mnpd(g: &Graph) -> bool {
    let t = tables(g);
    let divisible = division_table(&t, &perfect_table(&t));
    let full = divisible.len() - 1;
    !divisible[full] && (0..full).all(|s| divisible[s])
}

/// χ = k and deleting any vertex lowers it.
pub fn is_k_critical(g: &Graph, k: u32) -> bool {
    let t = tables(g);
    let full = t.chi.len() - 1;
    t.chi[full] == k && (0..g.n()).all(|v| t.chi[full & !(1 << v)] < k)
}
