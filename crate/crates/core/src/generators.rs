//! Deterministic constructors for the named graph families.
//!
//! Every constructor documents its vertex labelling so that explicit vertex
//! sets (the Hoffman–Singleton 15-sets, the 112 binary strings of `Q_8`) can be
//! written down as literal ids.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, MAX_VERTICES};
use crate::metrics::is_triangle_free;
use crate::ops;

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParam(msg.into())
}

/// `P_n`, vertices in path order.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(bad("path needs n >= 1"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges)
}

/// `C_n`, vertices in cyclic order.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(bad("cycle needs n >= 3"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(bad("complete graph needs n >= 1"));
    }
    let mut b = GraphBuilder::new(n)?;
    for u in 0..n {
        for v in (u + 1)..n {
            b.add_edge(u, v);
        }
    }
    Ok(b.build())
}

/// Edgeless graph `E_n`.
pub fn empty(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(bad("empty graph needs n >= 1"));
    }
    Graph::empty(n)
}

/// `K_{a,b}`; the first `a` ids form one side.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    complete_multipartite(&[a, b])
}

/// `K_{p_1,...,p_t}`; parts occupy consecutive id ranges.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(bad("multipartite parts must be non-empty"));
    }
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    let mut b = GraphBuilder::new(n)?;
    for u in 0..n {
        for v in (u + 1)..n {
            if part_of[u] != part_of[v] {
                b.add_edge(u, v);
            }
        }
    }
    Ok(b.build())
}

/// `K_{1,n-1}` with centre 0.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(bad("star needs n >= 1"));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edge_list(n, &edges)
}

/// `Q_d`. Vertex `i` is the `d`-bit binary string of `i`, most significant bit
/// first; `i ~ j` iff `i XOR j` is a power of two.
pub fn hypercube(d: usize) -> Result<Graph> {
    if d > 12 {
        return Err(bad("hypercube dimension must be at most 12"));
    }
    let n = 1usize << d;
    let mut b = GraphBuilder::new(n)?;
    for i in 0..n {
        for k in 0..d {
            let j = i ^ (1 << k);
            if j > i {
                b.add_edge(i, j);
            }
        }
    }
    Ok(b.build())
}

/// Maps a subset of `{1..d}` to its `Q_d` vertex id: element `e` is string
/// position `e`, i.e. bit `d - e` of the id.
pub fn cube_vertex_of_subset(d: usize, elements: &[usize]) -> usize {
    elements.iter().fold(0, |acc, &e| {
        assert!((1..=d).contains(&e), "element {e} outside 1..={d}");
        acc | (1 << (d - e))
    })
}

/// Parses a binary string (most significant bit first) as a `Q_d` vertex id.
pub fn cube_vertex_of_string(s: &str) -> Option<usize> {
    usize::from_str_radix(s, 2).ok()
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// The `k`-subsets of `0..n` as bitmasks in colexicographic order.
pub fn colex_subsets(n: usize, k: usize) -> Vec<u64> {
    assert!(n <= 63);
    let mut out = Vec::new();
    if k == 0 {
        out.push(0);
        return out;
    }
    if k > n {
        return out;
    }
    let mut x: u64 = (1 << k) - 1;
    while x < (1u64 << n) {
        out.push(x);
        // Gosper's hack: next integer with the same popcount
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}

/// `KG(n, k)`: vertices are the `k`-subsets of `0..n` in colex order,
/// adjacent when disjoint.
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || n < 2 * k {
        return Err(bad(format!("kneser needs k >= 1 and n >= 2k, got n={n}, k={k}")));
    }
    let size = binomial(n as u64, k as u64);
    if n > 63 || size > MAX_VERTICES as u128 {
        return Err(Error::TooLarge(size.min(usize::MAX as u128) as usize));
    }
    let sets = colex_subsets(n, k);
    let mut b = GraphBuilder::new(sets.len())?;
    for i in 0..sets.len() {
        for j in (i + 1)..sets.len() {
            if sets[i] & sets[j] == 0 {
                b.add_edge(i, j);
            }
        }
    }
    Ok(b.build())
}

/// The Petersen graph, `KG(5, 2)`.
pub fn petersen() -> Graph {
    kneser(5, 2).expect("fixed parameters")
}

/// Neighbours of vertices `0..10` of the Hoffman–Singleton graph; the rest
/// follows from the automorphism `i -> i + 10 (mod 50)`.
pub const HS_TABLE: [[usize; 7]; 10] = [
    [1, 4, 13, 16, 26, 43, 49],
    [0, 2, 6, 18, 28, 36, 47],
    [1, 3, 8, 24, 34, 38, 45],
    [2, 4, 10, 19, 29, 40, 48],
    [0, 3, 5, 22, 32, 35, 46],
    [4, 6, 9, 12, 24, 27, 37],
    [1, 5, 7, 14, 21, 30, 40],
    [6, 8, 11, 19, 25, 35, 49],
    [2, 7, 9, 13, 22, 31, 41],
    [5, 8, 10, 17, 33, 43, 47],
];

/// The Hoffman–Singleton graph on `0..50`, built from [`HS_TABLE`] closed
/// under the rotation by 10.
pub fn hoffman_singleton() -> Graph {
    let mut b = GraphBuilder::new(50).expect("fixed order");
    for shift in (0..50).step_by(10) {
        for (v, row) in HS_TABLE.iter().enumerate() {
            for &u in row {
                b.add_edge((v + shift) % 50, (u + shift) % 50);
            }
        }
    }
    b.build()
}

/// `H_{n,n}`: ids `0..n` are `u_1..u_n`, ids `n..2n` are `v_1..v_n`, and
/// `u_i ~ v_j` iff `j >= i`.
pub fn half_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(bad("half graph needs n >= 1"));
    }
    let mut b = GraphBuilder::new(2 * n)?;
    for i in 0..n {
        for j in i..n {
            b.add_edge(i, n + j);
        }
    }
    Ok(b.build())
}

/// `S(K_n)`: originals `0..n`, then `x_{i,j}` (`i < j`) in lexicographic order.
pub fn complete_subdivision(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(bad("complete subdivision needs n >= 2"));
    }
    ops::subdivide_all_edges(&complete(n)?)
}

/// Id of the subdivision vertex `x_{i,j}` in [`complete_subdivision`].
pub fn subdivision_vertex(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    assert!(i != j && j < n);
    // pairs (a, b) with a < i come first: sum_{a<i} (n - 1 - a)
    n + i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// `K_p □ K_q`, `K_p`-major labelling.
pub fn k_box_k(p: usize, q: usize) -> Result<Graph> {
    ops::cartesian_product(&complete(p)?, &complete(q)?)
}

/// The tight example for the even-regular upper bound: `t` copies of
/// `K_{d,d-1}` whose size-`d` classes are closed up by a perfect matching.
///
/// Copy `c` occupies ids `c(2d-1)..`; its size-`d` class comes first. With
/// `bipartite` (requires `t = 2`) vertex `s` of one size-`d` class is matched
/// to vertex `s` of the other. Otherwise class vertex 0 of copy `c` is matched
/// to class vertex 1 of copy `c+1 (mod t)` and the remaining class vertices
/// are paired inside their copy; `t = 1` pairs the whole class internally.
pub fn regular_tight(d: usize, t: usize, bipartite: bool) -> Result<Graph> {
    if d < 2 || d % 2 == 1 {
        return Err(bad("regular_tight needs an even d >= 2"));
    }
    if t == 0 {
        return Err(bad("regular_tight needs t >= 1"));
    }
    if bipartite && t != 2 {
        return Err(bad("bipartite regular_tight needs t = 2"));
    }
    let block = 2 * d - 1;
    let a = |c: usize, s: usize| c * block + s;
    let mut b = GraphBuilder::new(t * block)?;
    for c in 0..t {
        for s in 0..d {
            for r in d..block {
                b.add_edge(a(c, s), c * block + r);
            }
        }
    }
    if bipartite {
        for s in 0..d {
            b.add_edge(a(0, s), a(1, s));
        }
    } else if t == 1 {
        for s in (0..d).step_by(2) {
            b.add_edge(a(0, s), a(0, s + 1));
        }
    } else {
        for c in 0..t {
            b.add_edge(a(c, 0), a((c + 1) % t, 1));
            for s in (2..d).step_by(2) {
                b.add_edge(a(c, s), a(c, s + 1));
            }
        }
    }
    Ok(b.build())
}

/// Cases of the constructions realising `α_od = α = k` on `n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FeasibleCase {
    /// `K_{n-k+1} ∪ (k-1)K_1`, any `1 <= k <= n`.
    I,
    /// `K_{n-k} + E_k`, `k` odd.
    II,
    /// `K_{k,...,k}`, `k | n`, `k` odd.
    III,
    /// `K_{n-k} + E_{k-1}` plus a vertex `z`, with one join edge `vw` moved to `vz`; `k` even.
    IV,
}

impl std::str::FromStr for FeasibleCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(FeasibleCase::I),
            "II" | "2" => Ok(FeasibleCase::II),
            "III" | "3" => Ok(FeasibleCase::III),
            "IV" | "4" => Ok(FeasibleCase::IV),
            _ => Err(bad(format!("unknown feasible case {s}"))),
        }
    }
}

/// Clique part first, then the independent part; in case IV, `v = 0`,
/// `w = n - k` and `z = n - 1`.
pub fn feasible_combo(n: usize, k: usize, case: FeasibleCase) -> Result<Graph> {
    if k == 0 || k > n {
        return Err(bad("feasible_combo needs 1 <= k <= n"));
    }
    match case {
        FeasibleCase::I => ops::disjoint_union(&complete(n - k + 1)?, &Graph::empty(k - 1)?),
        FeasibleCase::II => {
            if k.is_multiple_of(2) {
                return Err(bad("case II needs odd k"));
            }
            ops::join(&ops::complement(&Graph::empty(n - k)?), &Graph::empty(k)?)
        }
        FeasibleCase::III => {
            if k.is_multiple_of(2) || !n.is_multiple_of(k) {
                return Err(bad("case III needs odd k dividing n"));
            }
            complete_multipartite(&vec![k; n / k])
        }
        FeasibleCase::IV => {
            if k % 2 == 1 || k < 2 || k + 2 > n {
                return Err(bad("case IV needs even k with 2 <= k <= n - 2"));
            }
            let base = ops::join(&complete(n - k)?, &Graph::empty(k - 1)?)?;
            let mut b = GraphBuilder::new(n)?;
            for (u, v) in base.edges() {
                b.add_edge(u, v);
            }
            let (v, w, z) = (0, n - k, n - 1);
            b.remove_edge(v, w);
            b.add_edge(v, z);
            Ok(b.build())
        }
    }
}

/// Triangle-free constructions with controlled diameters of `G` and `Ḡ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TriangleFreeKind {
    /// `K_{n,m} - tK_2`, `n >= m >= 2`, `1 <= t <= m-1`. Removed edges are `(i, n+i)`, `i < t`.
    MatchingDeleted { n: usize, m: usize, t: usize },
    /// `G(n,m,t)`: `K_{n,m}` with the matching edges `(i, n+i)`, `i < t`, each
    /// subdivided by a new vertex `n+m+i`. `n >= m >= 2`, `1 <= t <= m`.
    SubdividedMatching { n: usize, m: usize, t: usize },
    /// `G □ K_2` for a triangle-free `G`.
    BoxK2(Box<Graph>),
}

pub fn trianglefree_diam(kind: &TriangleFreeKind) -> Result<Graph> {
    match *kind {
        TriangleFreeKind::MatchingDeleted { n, m, t } => {
            if m < 2 || n < m || t == 0 || t >= m {
                return Err(bad("matching-deleted needs n >= m >= 2 and 1 <= t <= m-1"));
            }
            let base = complete_bipartite(n, m)?;
            let mut b = GraphBuilder::new(n + m)?;
            for (u, v) in base.edges() {
                if !(u < t && v == n + u) {
                    b.add_edge(u, v);
                }
            }
            Ok(b.build())
        }
        TriangleFreeKind::SubdividedMatching { n, m, t } => {
            if m < 2 || n < m || t == 0 || t > m {
                return Err(bad("subdivided-matching needs n >= m >= 2 and 1 <= t <= m"));
            }
            let base = complete_bipartite(n, m)?;
            let mut b = GraphBuilder::new(n + m + t)?;
            for (u, v) in base.edges() {
                if !(u < t && v == n + u) {
                    b.add_edge(u, v);
                }
            }
            for i in 0..t {
                b.add_edge(i, n + m + i);
                b.add_edge(n + i, n + m + i);
            }
            Ok(b.build())
        }
        TriangleFreeKind::BoxK2(ref g) => {
            if !is_triangle_free(g) {
                return Err(Error::NotTriangleFree);
            }
            ops::cartesian_product(g, &complete(2)?)
        }
    }
}

/// A named family with its parameters; the parse/print form is a
/// whitespace-separated token list such as `kneser 5 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    Star(usize),
    Hypercube(usize),
    Kneser(usize, usize),
    Petersen,
    HoffmanSingleton,
    HalfGraph(usize),
    CompleteSubdivision(usize),
    KBoxK(usize, usize),
    RegularTight { d: usize, t: usize, bipartite: bool },
    FeasibleCombo { n: usize, k: usize, case: FeasibleCase },
    TriangleFreeDiam { kind: String, n: usize, m: usize, t: usize },
    TriangleFreeBoxK2(Box<FamilySpec>),
    MuProduct(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    pub const NAMES: &'static [&'static str] = &[
        "path", "cycle", "complete", "empty", "bipartite", "multipartite", "star", "hypercube",
        "kneser", "petersen", "hoffman-singleton", "half-graph", "subdivision", "k-box-k",
        "regular-tight", "feasible", "matching-deleted", "subdivided-matching", "box-k2", "mu",
    ];

    /// Parses a token list; nested families (`box-k2`, `mu`) consume further tokens.
    pub fn parse(tokens: &[&str]) -> Result<FamilySpec> {
        let (spec, rest) = Self::parse_prefix(tokens)?;
        if !rest.is_empty() {
            return Err(bad(format!("trailing tokens: {}", rest.join(" "))));
        }
        Ok(spec)
    }

    fn parse_prefix<'a, 'b>(tokens: &'a [&'b str]) -> Result<(FamilySpec, &'a [&'b str])> {
        let (name, rest) = tokens.split_first().ok_or_else(|| bad("missing family name"))?;
        let num = |i: usize| -> Result<usize> {
            rest.get(i)
                .ok_or_else(|| bad(format!("{name}: missing parameter {}", i + 1)))?
                .parse()
                .map_err(|_| bad(format!("{name}: parameter {} is not an integer", i + 1)))
        };
        let name = name.to_ascii_lowercase();
        let spec = match name.as_str() {
            "path" => (FamilySpec::Path(num(0)?), 1),
            "cycle" => (FamilySpec::Cycle(num(0)?), 1),
            "complete" => (FamilySpec::Complete(num(0)?), 1),
            "empty" => (FamilySpec::Empty(num(0)?), 1),
            "bipartite" => (FamilySpec::CompleteBipartite(num(0)?, num(1)?), 2),
            "multipartite" => {
                let parts = rest
                    .first()
                    .ok_or_else(|| bad("multipartite: missing part sizes"))?
                    .split(',')
                    .map(|p| p.parse().map_err(|_| bad("multipartite: bad part size")))
                    .collect::<Result<Vec<usize>>>()?;
                (FamilySpec::CompleteMultipartite(parts), 1)
            }
            "star" => (FamilySpec::Star(num(0)?), 1),
            "hypercube" | "cube" => (FamilySpec::Hypercube(num(0)?), 1),
            "kneser" => (FamilySpec::Kneser(num(0)?, num(1)?), 2),
            "petersen" => (FamilySpec::Petersen, 0),
            "hoffman-singleton" | "hs" => (FamilySpec::HoffmanSingleton, 0),
            "half-graph" | "half" => (FamilySpec::HalfGraph(num(0)?), 1),
            "subdivision" => (FamilySpec::CompleteSubdivision(num(0)?), 1),
            "k-box-k" => (FamilySpec::KBoxK(num(0)?, num(1)?), 2),
            "regular-tight" => {
                let bipartite = match rest.get(2).copied() {
                    Some("bipartite") => true,
                    Some("connected") | None => false,
                    Some(other) => return Err(bad(format!("regular-tight: unknown variant {other}"))),
                };
                let used = if rest.get(2).is_some() { 3 } else { 2 };
                (FamilySpec::RegularTight { d: num(0)?, t: num(1)?, bipartite }, used)
            }
            "feasible" => {
                let case = rest
                    .get(2)
                    .ok_or_else(|| bad("feasible: missing case"))?
                    .parse()?;
                (FamilySpec::FeasibleCombo { n: num(0)?, k: num(1)?, case }, 3)
            }
            "matching-deleted" | "subdivided-matching" => (
                FamilySpec::TriangleFreeDiam { kind: name.clone(), n: num(0)?, m: num(1)?, t: num(2)? },
                3,
            ),
            "box-k2" => {
                let (inner, tail) = Self::parse_prefix(rest)?;
                return Ok((FamilySpec::TriangleFreeBoxK2(Box::new(inner)), tail));
            }
            "mu" => {
                let (g, tail) = Self::parse_prefix(rest)?;
                let (h, tail) = Self::parse_prefix(tail)?;
                return Ok((FamilySpec::MuProduct(Box::new(g), Box::new(h)), tail));
            }
            other => return Err(bad(format!("unknown family {other}"))),
        };
        Ok((spec.0, &rest[spec.1..]))
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Path(n) => path(*n),
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::Complete(n) => complete(*n),
            FamilySpec::Empty(n) => empty(*n),
            FamilySpec::CompleteBipartite(a, b) => complete_bipartite(*a, *b),
            FamilySpec::CompleteMultipartite(parts) => complete_multipartite(parts),
            FamilySpec::Star(n) => star(*n),
            FamilySpec::Hypercube(d) => hypercube(*d),
            FamilySpec::Kneser(n, k) => kneser(*n, *k),
            FamilySpec::Petersen => Ok(petersen()),
            FamilySpec::HoffmanSingleton => Ok(hoffman_singleton()),
            FamilySpec::HalfGraph(n) => half_graph(*n),
            FamilySpec::CompleteSubdivision(n) => complete_subdivision(*n),
            FamilySpec::KBoxK(p, q) => k_box_k(*p, *q),
            FamilySpec::RegularTight { d, t, bipartite } => regular_tight(*d, *t, *bipartite),
            FamilySpec::FeasibleCombo { n, k, case } => feasible_combo(*n, *k, *case),
            FamilySpec::TriangleFreeDiam { kind, n, m, t } => {
                let (n, m, t) = (*n, *m, *t);
                let kind = if kind == "matching-deleted" {
                    TriangleFreeKind::MatchingDeleted { n, m, t }
                } else {
                    TriangleFreeKind::SubdividedMatching { n, m, t }
                };
                trianglefree_diam(&kind)
            }
            FamilySpec::TriangleFreeBoxK2(inner) => {
                trianglefree_diam(&TriangleFreeKind::BoxK2(Box::new(inner.build()?)))
            }
            FamilySpec::MuProduct(g, h) => ops::cartesian_product(&g.build()?, &h.build()?),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path {n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle {n}"),
            FamilySpec::Complete(n) => write!(f, "complete {n}"),
            FamilySpec::Empty(n) => write!(f, "empty {n}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "bipartite {a} {b}"),
            FamilySpec::CompleteMultipartite(p) => {
                let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
                write!(f, "multipartite {}", parts.join(","))
            }
            FamilySpec::Star(n) => write!(f, "star {n}"),
            FamilySpec::Hypercube(d) => write!(f, "hypercube {d}"),
            FamilySpec::Kneser(n, k) => write!(f, "kneser {n} {k}"),
            FamilySpec::Petersen => f.write_str("petersen"),
            FamilySpec::HoffmanSingleton => f.write_str("hoffman-singleton"),
            FamilySpec::HalfGraph(n) => write!(f, "half-graph {n}"),
            FamilySpec::CompleteSubdivision(n) => write!(f, "subdivision {n}"),
            FamilySpec::KBoxK(p, q) => write!(f, "k-box-k {p} {q}"),
            FamilySpec::RegularTight { d, t, bipartite } => write!(
                f,
                "regular-tight {d} {t} {}",
                if *bipartite { "bipartite" } else { "connected" }
            ),
            FamilySpec::FeasibleCombo { n, k, case } => write!(f, "feasible {n} {k} {case:?}"),
            FamilySpec::TriangleFreeDiam { kind, n, m, t } => write!(f, "{kind} {n} {m} {t}"),
            FamilySpec::TriangleFreeBoxK2(g) => write!(f, "box-k2 {g}"),
            FamilySpec::MuProduct(g, h) => write!(f, "mu {g} {h}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{bipartition, diameter, girth, is_connected, metrics, Distance};

    #[test]
    fn small_families() {
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.regular_degree(), Some(2));
        assert_eq!(girth(&c5), Distance::Finite(5));
        let k333 = complete_multipartite(&[3, 3, 3]).unwrap();
        assert_eq!(k333.regular_degree(), Some(6));
        let s = star(6).unwrap();
        assert_eq!(s.degree(0), 5);
        assert_eq!(s.edge_count(), 5);
        assert!(cycle(2).is_err() && path(0).is_err());
    }

    #[test]
    fn hypercube_labelling() {
        assert_eq!(hypercube(0).unwrap().n(), 1);
        let q3 = hypercube(3).unwrap();
        assert_eq!(q3.regular_degree(), Some(3));
        assert!(bipartition(&q3).is_some());
        assert!(q3.has_edge(0b000, 0b100));
        assert!(!q3.has_edge(0b001, 0b010));
        assert_eq!(cube_vertex_of_subset(8, &[1, 8]), 0b1000_0001);
        assert_eq!(cube_vertex_of_string("00000111"), Some(7));
        assert!(hypercube(13).is_err());
    }

    #[test]
    fn kneser_properties() {
        let m = kneser(6, 3).unwrap();
        assert_eq!(m.regular_degree(), Some(1));
        assert_eq!(m.n(), 20);
        let k62 = kneser(6, 2).unwrap();
        assert_eq!((k62.n(), k62.regular_degree()), (15, Some(6)));
        for (n, k) in [(7, 2), (7, 3), (8, 3), (9, 4)] {
            let g = kneser(n, k).unwrap();
            let d = binomial((n - k) as u64, k as u64) as usize;
            assert_eq!(g.regular_degree(), Some(d));
        }
        assert!(kneser(5, 3).is_err());
        assert!(matches!(kneser(30, 10), Err(Error::TooLarge(_))));
        // colex: {0,1} {0,2} {1,2} {0,3} ...
        assert_eq!(&colex_subsets(4, 2)[..4], &[0b0011, 0b0101, 0b0110, 0b1001]);
    }

    #[test]
    fn hoffman_singleton_structure() {
        let hs = hoffman_singleton();
        assert_eq!(hs.n(), 50);
        assert_eq!(hs.edge_count(), 175);
        assert_eq!(hs.regular_degree(), Some(7));
        assert_eq!(hs.neighbors(0).to_vec(), vec![1, 4, 13, 16, 26, 43, 49]);
        let shifted: Vec<usize> = {
            let mut v: Vec<usize> = HS_TABLE[0].iter().map(|&u| (u + 10) % 50).collect();
            v.sort_unstable();
            v
        };
        assert_eq!(hs.neighbors(10).to_vec(), shifted);
        let m = metrics(&hs);
        assert_eq!(m.girth, Distance::Finite(5));
        assert_eq!(m.diameter, Distance::Finite(2));
        // no two vertices share two neighbours (no C4), adjacent ones share none
        for u in 0..50 {
            for v in (u + 1)..50 {
                let common = hs.neighbors(u).intersection_len(hs.neighbors(v));
                assert_eq!(common, if hs.has_edge(u, v) { 0 } else { 1 });
            }
        }
    }

    #[test]
    fn half_graph_counts() {
        assert_eq!(half_graph(1).unwrap(), complete(2).unwrap());
        let h3 = half_graph(3).unwrap();
        assert_eq!((h3.degree(0), h3.degree(3)), (3, 1));
        for n in 1..8 {
            let h = half_graph(n).unwrap();
            assert_eq!(h.edge_count(), n * (n + 1) / 2);
            assert!(bipartition(&h).is_some());
        }
    }

    #[test]
    fn subdivision_labelling() {
        let s4 = complete_subdivision(4).unwrap();
        assert_eq!(s4.n(), 10);
        for v in 0..4 {
            assert_eq!(s4.degree(v), 3);
        }
        let x = subdivision_vertex(4, 1, 3);
        assert_eq!(s4.neighbors(x).to_vec(), vec![1, 3]);
        let mut id = 5;
        for i in 0..5 {
            for j in (i + 1)..5 {
                assert_eq!(subdivision_vertex(5, i, j), id);
                id += 1;
            }
        }
        assert_eq!(complete_subdivision(2).unwrap(), path(3).unwrap().permuted(&[0, 2, 1]));
    }

    #[test]
    fn regular_tight_shapes() {
        for t in 1..6 {
            let g = regular_tight(2, t, false).unwrap();
            assert_eq!(g.n(), 3 * t);
            assert_eq!(g.regular_degree(), Some(2));
            assert!(is_connected(&g));
        }
        for (d, t) in [(4, 1), (4, 2), (4, 3), (6, 2), (6, 4)] {
            let g = regular_tight(d, t, false).unwrap();
            assert_eq!(g.n(), t * (2 * d - 1));
            assert_eq!(g.regular_degree(), Some(d));
            assert!(is_connected(&g));
        }
        let b = regular_tight(4, 2, true).unwrap();
        assert_eq!((b.n(), b.regular_degree()), (14, Some(4)));
        assert!(bipartition(&b).is_some() && is_connected(&b));
        assert!(regular_tight(3, 2, false).is_err());
        assert!(regular_tight(4, 3, true).is_err());
    }

    #[test]
    fn feasible_constructions() {
        let p4 = feasible_combo(4, 2, FeasibleCase::IV).unwrap();
        assert_eq!(p4.edge_count(), 3);
        let mut d = p4.degrees();
        d.sort_unstable();
        assert_eq!(d, vec![1, 1, 2, 2]);
        assert!(is_connected(&p4));
        assert_eq!(
            feasible_combo(9, 3, FeasibleCase::III).unwrap(),
            complete_multipartite(&[3, 3, 3]).unwrap()
        );
        let split = feasible_combo(10, 3, FeasibleCase::II).unwrap();
        assert_eq!(split.edge_count(), 21 + 21);
        assert!(feasible_combo(10, 2, FeasibleCase::II).is_err());
        assert!(feasible_combo(9, 2, FeasibleCase::III).is_err());
        assert!(feasible_combo(5, 4, FeasibleCase::IV).is_err());
    }

    #[test]
    fn trianglefree_constructions() {
        let g = trianglefree_diam(&TriangleFreeKind::MatchingDeleted { n: 3, m: 2, t: 1 }).unwrap();
        assert_eq!(diameter(&g), Distance::Finite(3));
        assert_eq!(diameter(&ops::complement(&g)), Distance::Finite(3));
        let g = trianglefree_diam(&TriangleFreeKind::SubdividedMatching { n: 3, m: 2, t: 1 }).unwrap();
        assert!(is_triangle_free(&g));
        assert_eq!(diameter(&g), Distance::Finite(2));
        assert_eq!(diameter(&ops::complement(&g)), Distance::Finite(2));
        let g = trianglefree_diam(&TriangleFreeKind::BoxK2(Box::new(cycle(5).unwrap()))).unwrap();
        assert_eq!(diameter(&g), Distance::Finite(3));
        assert_eq!(diameter(&ops::complement(&g)), Distance::Finite(2));
        assert_eq!(
            trianglefree_diam(&TriangleFreeKind::BoxK2(Box::new(complete(3).unwrap()))),
            Err(Error::NotTriangleFree)
        );
        assert!(trianglefree_diam(&TriangleFreeKind::MatchingDeleted { n: 3, m: 2, t: 2 }).is_err());
    }

    #[test]
    fn family_spec_round_trip() {
        for text in [
            "kneser 5 2",
            "multipartite 3,3,3",
            "regular-tight 4 2 bipartite",
            "feasible 10 3 II",
            "matching-deleted 3 2 1",
            "box-k2 cycle 5",
            "mu hypercube 4 cycle 4",
        ] {
            let tokens: Vec<&str> = text.split_whitespace().collect();
            let spec = FamilySpec::parse(&tokens).unwrap();
            assert_eq!(spec.to_string(), text);
            assert!(spec.build().is_ok());
        }
        assert!(FamilySpec::parse(&["nope"]).is_err());
        assert!(FamilySpec::parse(&["cycle"]).is_err());
        assert!(FamilySpec::parse(&["cycle", "5", "6"]).is_err());
    }
}
