use std::fmt;
use std::str::FromStr;

use crate::error::{Cap, Error, Result};
use crate::graph::MAX_VERTICES;
use crate::{Graph, Vertex};

/// The named small graphs the checks refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternName {
    P2,
    P3,
    P4,
    P5,
    C5,
    C7,
    /// K3
    Triangle,
    K4,
    /// K_{1,3}; vertex 0 is the centre.
    Claw,
    /// K4 minus the edge {2,3}.
    Diamond,
    TwoP3,
    /// P2 on {0,1} plus P4 on 2-3-4-5.
    P2UnionP4,
    FourK1,
    /// Mycielskian of C5.
    Groetzsch,
    Complete(Option<usize>),
    Cycle(Option<usize>),
    Path(Option<usize>),
}

impl PatternName {
    /// The same name with its size parameter filled in.
    pub fn with_size(self, k: usize) -> PatternName {
        match self {
            PatternName::Complete(_) => PatternName::Complete(Some(k)),
            PatternName::Cycle(_) => PatternName::Cycle(Some(k)),
            PatternName::Path(_) => PatternName::Path(Some(k)),
            other => other,
        }
    }
}

impl FromStr for PatternName {
    type Err = Error;

    /// Accepts `p4`, `c7`, `k5` style names, `kn`/`cn`/`pn` with the size
    /// supplied separately, and the fixed names (`claw`, `diamond`, `2p3`,
    /// `p2+p4`, `4k1`, `triangle`, `groetzsch`).
    fn from_str(s: &str) -> Result<PatternName> {
        let lower = s.trim().to_lowercase();
        let fixed = match lower.as_str() {
            "claw" | "k13" | "k1,3" => Some(PatternName::Claw),
            "diamond" => Some(PatternName::Diamond),
            "2p3" => Some(PatternName::TwoP3),
            "p2+p4" | "p2p4" | "p2∪p4" | "p2_p4" => Some(PatternName::P2UnionP4),
            "4k1" => Some(PatternName::FourK1),
            "triangle" | "k3" => Some(PatternName::Triangle),
            "k4" => Some(PatternName::K4),
            "p2" => Some(PatternName::P2),
            "p3" => Some(PatternName::P3),
            "p4" => Some(PatternName::P4),
            "p5" => Some(PatternName::P5),
            "c5" => Some(PatternName::C5),
            "c7" => Some(PatternName::C7),
            "groetzsch" | "grotzsch" | "grötzsch" => Some(PatternName::Groetzsch),
            "kn" => Some(PatternName::Complete(None)),
            "cn" => Some(PatternName::Cycle(None)),
            "pn" => Some(PatternName::Path(None)),
            _ => None,
        };
        if let Some(p) = fixed {
            return Ok(p);
        }
        let (head, tail) = lower.split_at(1.min(lower.len()));
        let k = tail.parse::<usize>().ok();
        match (head, k) {
            ("k", Some(k)) => Ok(PatternName::Complete(Some(k))),
            ("c", Some(k)) => Ok(PatternName::Cycle(Some(k))),
            ("p", Some(k)) => Ok(PatternName::Path(Some(k))),
            _ => Err(Error::InvalidArgument(format!("unknown pattern {s:?}"))),
        }
    }
}

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let param = |f: &mut fmt::Formatter<'_>, c: char, k: &Option<usize>| match k {
            Some(k) => write!(f, "{c}{k}"),
            None => write!(f, "{c}n"),
        };
        match self {
            PatternName::P2 => f.write_str("P2"),
            PatternName::P3 => f.write_str("P3"),
            PatternName::P4 => f.write_str("P4"),
            PatternName::P5 => f.write_str("P5"),
            PatternName::C5 => f.write_str("C5"),
            PatternName::C7 => f.write_str("C7"),
            PatternName::Triangle => f.write_str("K3"),
            PatternName::K4 => f.write_str("K4"),
            PatternName::Claw => f.write_str("claw"),
            PatternName::Diamond => f.write_str("diamond"),
            PatternName::TwoP3 => f.write_str("2P3"),
            PatternName::P2UnionP4 => f.write_str("P2+P4"),
            PatternName::FourK1 => f.write_str("4K1"),
            PatternName::Groetzsch => f.write_str("Groetzsch"),
            PatternName::Complete(k) => param(f, 'K', k),
            PatternName::Cycle(k) => param(f, 'C', k),
            PatternName::Path(k) => param(f, 'P', k),
        }
    }
}

pub fn path(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidArgument("P_k needs k >= 1".into()));
    }
    let edges: Vec<(Vertex, Vertex)> = (1..k).map(|i| (i - 1, i)).collect();
    Graph::new(k, &edges)
}

pub fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidArgument("C_k needs k >= 3".into()));
    }
    let edges: Vec<(Vertex, Vertex)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Graph::new(k, &edges)
}

pub fn complete(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidArgument("K_k needs k >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            edges.push((u, v));
        }
    }
    Graph::new(k, &edges)
}

pub fn pattern(name: PatternName) -> Result<Graph> {
    let need = |k: Option<usize>| {
        k.ok_or_else(|| Error::InvalidArgument(format!("pattern {name} needs a size")))
    };
    let g = match name {
        PatternName::P2 => path(2)?,
        PatternName::P3 => path(3)?,
        PatternName::P4 => path(4)?,
        PatternName::P5 => path(5)?,
        PatternName::C5 => cycle(5)?,
        PatternName::C7 => cycle(7)?,
        PatternName::Triangle => complete(3)?,
        PatternName::K4 => complete(4)?,
        PatternName::Claw => Graph::new(4, &[(0, 1), (0, 2), (0, 3)])?,
        PatternName::Diamond => Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])?,
        PatternName::TwoP3 => Graph::new(6, &[(0, 1), (1, 2), (3, 4), (4, 5)])?,
        PatternName::P2UnionP4 => Graph::new(6, &[(0, 1), (2, 3), (3, 4), (4, 5)])?,
        PatternName::FourK1 => Graph::empty(4)?,
        PatternName::Groetzsch => mycielski(&cycle(5)?)?,
        PatternName::Complete(k) => complete(need(k)?)?,
        PatternName::Cycle(k) => cycle(need(k)?)?,
        PatternName::Path(k) => path(need(k)?)?,
    };
    Ok(g.named(name.to_string()))
}

/// Mycielskian on `2n + 1` vertices: the original graph on `0..n`, shadow
/// `n + i` adjacent to `N(i)`, apex `2n` adjacent to every shadow.
pub fn mycielski(g: &Graph) -> Result<Graph> {
    let n = g.n();
    let order = 2 * n + 1;
    Error::check_cap(Cap::GraphOrder, MAX_VERTICES, order)?;
    let mut edges = g.edges();
    for (u, v) in g.edges() {
        edges.push((n + u, v));
        edges.push((n + v, u));
    }
    for i in 0..n {
        edges.push((n + i, 2 * n));
    }
    Graph::new(order, &edges)
}
