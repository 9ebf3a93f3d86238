//! Odd independent sets: predicates, forbidden/forcing pairs, exact solvers
//! and explicit constructions.

mod construct;
mod search;
mod solve;

use std::fmt;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::graph::Graph;

pub use construct::*;
pub use search::{enumerate_ois, for_each_ois, Budget};
pub use solve::*;

pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| !g.neighbors(v).intersects(s))
}

/// Independent, and every vertex outside `s` sees `s` zero or an odd number of times.
pub fn is_odd_independent(g: &Graph, s: &VertexSet) -> bool {
    is_independent(g, s)
        && (0..g.n()).all(|v| {
            s.contains(v) || {
                let c = g.neighbors(v).intersection_len(s);
                c == 0 || c % 2 == 1
            }
        })
}

/// `|N(v) ∩ s|` for every vertex.
pub fn odd_profile(g: &Graph, s: &VertexSet) -> Vec<usize> {
    (0..g.n()).map(|v| g.neighbors(v).intersection_len(s)).collect()
}

/// A nonadjacent pair with the common neighbour that certifies it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Pair {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PairClassification {
    /// `x < y` nonadjacent, `z` a common neighbour with `N[z] ⊆ N[x] ∪ N[y]`.
    pub forbidden: Vec<Pair>,
    /// `x < y` nonadjacent in `N(z)`, every neighbour of `z` independent of
    /// both forming a forbidden pair with one of them. Forbidden pairs are
    /// forcing too, but are listed only under `forbidden`.
    pub forcing: Vec<Pair>,
}

impl PairClassification {
    /// Whether `{x, y}` is listed in either class.
    pub fn excludes(&self, x: usize, y: usize) -> bool {
        let (x, y) = (x.min(y), x.max(y));
        self.forbidden.iter().chain(&self.forcing).any(|p| p.x == x && p.y == y)
    }
}

fn closed(g: &Graph, v: usize) -> VertexSet {
    g.closed_neighbors(v)
}

fn forbidden_at(g: &Graph, x: usize, y: usize, z: usize) -> bool {
    closed(g, z).is_subset(&closed(g, x).union(&closed(g, y)))
}

/// Forbidden-pair matrix: `m[x]` holds every `y` forming a forbidden pair with `x`.
pub fn forbidden_rows(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut rows = vec![VertexSet::new(n); n];
    for z in 0..n {
        let nz = g.neighbors(z).to_vec();
        for (i, &x) in nz.iter().enumerate() {
            for &y in &nz[i + 1..] {
                if !g.has_edge(x, y) && !rows[x].contains(y) && forbidden_at(g, x, y, z) {
                    rows[x].insert(y);
                    rows[y].insert(x);
                }
            }
        }
    }
    rows
}

/// Rows of the pairs that can never lie together in an odd independent set
/// by the pair lemma: forbidden and forcing partners.
pub fn excluded_rows(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let forb = forbidden_rows(g);
    let mut rows = forb.clone();
    for z in 0..n {
        let nz = g.neighbors(z);
        let list = nz.to_vec();
        for (i, &x) in list.iter().enumerate() {
            for &y in &list[i + 1..] {
                if g.has_edge(x, y) || rows[x].contains(y) {
                    continue;
                }
                let mut third = nz.difference(g.neighbors(x));
                third.difference_with(g.neighbors(y));
                third.remove(x);
                third.remove(y);
                if third.iter().all(|w| forb[w].contains(x) || forb[w].contains(y)) {
                    rows[x].insert(y);
                    rows[y].insert(x);
                }
            }
        }
    }
    rows
}

/// Complete classification over nonadjacent pairs with a common neighbour.
/// Each pair is reported once, with the smallest certifying `z`.
pub fn pair_classification(g: &Graph) -> PairClassification {
    let n = g.n();
    let forb = forbidden_rows(g);
    let mut out = PairClassification::default();
    for x in 0..n {
        for y in (x + 1)..n {
            if g.has_edge(x, y) {
                continue;
            }
            let common = g.neighbors(x).intersection(g.neighbors(y));
            if common.is_empty() {
                continue;
            }
            if forb[x].contains(y) {
                let z = common.iter().find(|&z| forbidden_at(g, x, y, z)).expect("certified");
                out.forbidden.push(Pair { x, y, z });
                continue;
            }
            let forcing_z = common.iter().find(|&z| {
                let mut third = g.neighbors(z).difference(g.neighbors(x));
                third.difference_with(g.neighbors(y));
                third.remove(x);
                third.remove(y);
                third.iter().all(|w| forb[w].contains(x) || forb[w].contains(y))
            });
            if let Some(z) = forcing_z {
                out.forcing.push(Pair { x, y, z });
            }
        }
    }
    out
}

/// How a result was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Method {
    BruteForce,
    BranchBound,
    ClawFreeReduction,
    OddRegularBipartite,
    BoundedK { k: usize },
    ConstructionOnly { lower: usize },
    CountingExclusion { note: String },
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::BruteForce => f.write_str("brute-force"),
            Method::BranchBound => f.write_str("branch-bound"),
            Method::ClawFreeReduction => f.write_str("claw-free-reduction"),
            Method::OddRegularBipartite => f.write_str("odd-regular-bipartite"),
            Method::BoundedK { k } => write!(f, "bounded-k({k})"),
            Method::ConstructionOnly { lower } => write!(f, "construction-only(>= {lower})"),
            Method::CountingExclusion { note } => write!(f, "counting-exclusion({note})"),
        }
    }
}

/// Optimum (or best bounds) of a maximisation over vertex sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub value: usize,
    pub witness: VertexSet,
    pub method: Method,
    pub exact: bool,
    pub lower: usize,
    pub upper: usize,
    pub nodes: u64,
    pub millis: u64,
}

/// α_od results share the general shape.
pub type OisResult = SolveResult;
