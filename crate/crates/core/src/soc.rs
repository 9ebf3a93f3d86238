//! Strong odd colorings: verification, exact search, `χ(G²)`, the matching
//! algorithm for `α(G) <= 2`, and explicit colorings of the named families.
//!
//! A coloring is strong odd exactly when every colour class is an odd
//! independent set of the whole graph, so the exact search partitions the
//! vertex set into precomputed odd independent sets.

use std::collections::HashSet;
use std::time::Instant;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::generators::{hypercube, subdivision_vertex};
use crate::graph::Graph;
use crate::matching::maximum_matching;
use crate::metrics::is_triangle_free;
use crate::oddind::{
    for_each_ois, girth5_seed, greedy_independent, is_odd_independent, odd_degree_bipartite_seed, Budget,
};
use crate::ops::{complement, square};

/// A total map vertex -> colour in `0..k` using every colour.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        let k = colors.iter().max().map_or(0, |m| m + 1);
        let mut used = vec![false; k];
        for &c in &colors {
            used[c] = true;
        }
        if used.iter().any(|u| !u) {
            return Err(Error::BadParam("colour classes must be non-empty".into()));
        }
        Ok(Coloring { colors, k })
    }

    /// Relabels colours by first occurrence, so any map becomes valid.
    pub fn normalized(colors: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let out: Vec<usize> = colors
            .iter()
            .map(|c| {
                let next = map.len();
                *map.entry(*c).or_insert(next)
            })
            .collect();
        Coloring { k: map.len(), colors: out }
    }

    /// From a partition of `0..n` into classes.
    pub fn from_classes(n: usize, classes: &[VertexSet]) -> Result<Self> {
        let mut colors = vec![usize::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            for v in class.iter() {
                if v >= n || colors[v] != usize::MAX {
                    return Err(Error::BadParam("classes do not partition the vertices".into()));
                }
                colors[v] = c;
            }
        }
        if colors.contains(&usize::MAX) {
            return Err(Error::BadParam("classes do not cover every vertex".into()));
        }
        Coloring::new(colors)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn classes(&self) -> Vec<VertexSet> {
        let n = self.colors.len();
        let mut out = vec![VertexSet::new(n); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c].insert(v);
        }
        out
    }
}

pub fn is_proper(g: &Graph, c: &Coloring) -> bool {
    c.colors.len() == g.n() && g.edges().all(|(u, v)| c.colors[u] != c.colors[v])
}

/// Proper, and each colour present in any `N(v)` appears there an odd number of times.
pub fn is_strong_odd_coloring(g: &Graph, c: &Coloring) -> bool {
    if !is_proper(g, c) {
        return false;
    }
    let mut count = vec![0usize; c.k];
    (0..g.n()).all(|v| {
        count.iter_mut().for_each(|x| *x = 0);
        for u in g.neighbors(v).iter() {
            count[c.colors[u]] += 1;
        }
        count.iter().all(|&x| x == 0 || x % 2 == 1)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColorMethod {
    ClassSearch,
    SquareDsatur,
    Alpha2Matching,
    Construction,
    Greedy,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringResult {
    pub chi: usize,
    pub coloring: Coloring,
    pub exact: bool,
    pub lower: usize,
    pub upper: usize,
    pub method: ColorMethod,
    pub nodes: u64,
    pub millis: u64,
}

/// Greedy DSATUR colouring, used for upper bounds.
fn dsatur_greedy(h: &Graph) -> Vec<usize> {
    let n = h.n();
    let mut colors = vec![usize::MAX; n];
    let mut seen: Vec<HashSet<usize>> = vec![HashSet::new(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| (seen[v].len(), h.degree(v), std::cmp::Reverse(v)))
            .expect("uncoloured vertex left");
        let c = (0..).find(|c| !seen[v].contains(c)).expect("unbounded");
        colors[v] = c;
        for u in h.neighbors(v).iter() {
            seen[u].insert(c);
        }
    }
    colors
}

/// Greedy clique, a lower bound for the chromatic number.
fn greedy_clique(h: &Graph) -> usize {
    let n = h.n();
    (0..n)
        .map(|start| {
            let mut cand = h.neighbors(start).clone();
            let mut size = 1;
            while let Some(v) = cand.iter().max_by_key(|&v| h.neighbors(v).intersection_len(&cand)) {
                size += 1;
                cand.intersect_with(h.neighbors(v));
            }
            size
        })
        .max()
        .unwrap_or(0)
}

struct Dsatur<'a> {
    h: &'a Graph,
    colors: Vec<usize>,
    /// `count[v][c]`: neighbours of `v` with colour `c`
    count: Vec<Vec<u32>>,
    sat: Vec<usize>,
    best: usize,
    best_colors: Vec<usize>,
    lower: usize,
    deadline: Option<Instant>,
    aborted: bool,
    nodes: u64,
}

impl Dsatur<'_> {
    fn set(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for u in self.h.neighbors(v).iter() {
            if self.count[u][c] == 0 {
                self.sat[u] += 1;
            }
            self.count[u][c] += 1;
        }
    }

    fn unset(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = usize::MAX;
        for u in self.h.neighbors(v).iter() {
            self.count[u][c] -= 1;
            if self.count[u][c] == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    fn search(&mut self, colored: usize, used: usize) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.aborted = true;
        }
        if self.aborted || self.best <= self.lower {
            return;
        }
        let n = self.h.n();
        if colored == n {
            self.best = used;
            self.best_colors = self.colors.clone();
            return;
        }
        let v = (0..n)
            .filter(|&v| self.colors[v] == usize::MAX)
            .max_by_key(|&v| (self.sat[v], self.h.degree(v), std::cmp::Reverse(v)))
            .expect("uncoloured vertex left");
        for c in 0..=used {
            if c + 1 >= self.best {
                break;
            }
            if c < used && self.count[v][c] > 0 {
                continue;
            }
            self.set(v, c);
            self.search(colored + 1, used.max(c + 1));
            self.unset(v);
        }
    }
}

/// Exact chromatic number by DSATUR branch and bound.
pub fn chromatic_number(h: &Graph, budget: Budget) -> ColoringResult {
    let start = Instant::now();
    let n = h.n();
    let greedy = dsatur_greedy(h);
    let ub = greedy.iter().max().map_or(0, |m| m + 1);
    let lower = greedy_clique(h);
    let mut s = Dsatur {
        h,
        colors: vec![usize::MAX; n],
        count: vec![vec![0; ub + 1]; n],
        sat: vec![0; n],
        best: ub,
        best_colors: greedy,
        lower,
        deadline: budget.deadline(start),
        aborted: false,
        nodes: 0,
    };
    if ub > lower {
        s.search(0, 0);
    }
    let exact = !s.aborted || s.best == lower;
    ColoringResult {
        chi: s.best,
        coloring: Coloring::normalized(&s.best_colors),
        exact,
        lower: if exact { s.best } else { lower },
        upper: s.best,
        method: ColorMethod::SquareDsatur,
        nodes: s.nodes,
        millis: start.elapsed().as_millis() as u64,
    }
}

/// `χ(G²)`, an upper bound for `χ_so(G)`; the colouring is strong odd in `g`.
pub fn chi_square(g: &Graph, budget: Budget) -> ColoringResult {
    chromatic_number(&square(g), budget)
}

/// One large odd independent set (cheap heuristics), then a greedy colouring
/// of `G²` on the rest. At most `n - |S| + 1` colours.
pub fn chi_so_upper_from_partition(g: &Graph) -> (usize, Coloring) {
    let n = g.n();
    if n == 0 {
        return (0, Coloring { colors: Vec::new(), k: 0 });
    }
    let sq = square(g);
    let mut best = greedy_independent(&sq);
    for s in [odd_degree_bipartite_seed(g), girth5_seed(g)].into_iter().flatten() {
        if s.len() > best.len() {
            best = s;
        }
    }
    let rest = best.complement();
    let ids: Vec<usize> = rest.iter().collect();
    let sub = crate::ops::induced_subgraph(&sq, &rest);
    let greedy = dsatur_greedy(&sub);
    let mut colors = vec![0usize; n];
    for (i, &v) in ids.iter().enumerate() {
        colors[v] = greedy[i] + 1;
    }
    let c = Coloring::normalized(&colors);
    (c.k(), c)
}

const OIS_CAP: usize = 4_000_000;

struct Partition<'a> {
    by_min: &'a [Vec<u128>],
    alpha_od: usize,
    failed: HashSet<(u128, usize)>,
    chosen: Vec<u128>,
    deadline: Option<Instant>,
    aborted: bool,
    nodes: u64,
}

impl Partition<'_> {
    fn solve(&mut self, mask: u128, k: usize) -> bool {
        if mask == 0 {
            return true;
        }
        if k == 0 || mask.count_ones() as usize > k * self.alpha_od {
            return false;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) && self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.aborted = true;
        }
        if self.aborted || self.failed.contains(&(mask, k)) {
            return false;
        }
        let v = mask.trailing_zeros() as usize;
        for &s in &self.by_min[v] {
            if s & !mask != 0 {
                continue;
            }
            self.chosen.push(s);
            if self.solve(mask & !s, k - 1) {
                return true;
            }
            self.chosen.pop();
            if self.aborted {
                return false;
            }
        }
        self.failed.insert((mask, k));
        false
    }
}

/// Exact `χ_so` by partitioning into odd independent sets (n <= 128). Larger
/// or over-budget instances return the best bounds found.
pub fn chi_so_exact(g: &Graph, budget: Budget) -> ColoringResult {
    chi_so_exact_with(g, budget, None)
}

/// As [`chi_so_exact`], starting from a known strong odd colouring as the
/// upper bound (ignored if invalid).
pub fn chi_so_exact_with(g: &Graph, budget: Budget, known: Option<&Coloring>) -> ColoringResult {
    let start = Instant::now();
    let n = g.n();
    let (mut ub, mut ub_coloring) = chi_so_upper_from_partition(g);
    if let Some(c) = known.filter(|c| c.k() < ub && is_strong_odd_coloring(g, c)) {
        ub = c.k();
        ub_coloring = c.clone();
    }
    let bounds_only = |lower: usize, nodes: u64| ColoringResult {
        chi: ub,
        coloring: ub_coloring.clone(),
        exact: lower >= ub,
        lower,
        upper: ub,
        method: ColorMethod::Greedy,
        nodes,
        millis: start.elapsed().as_millis() as u64,
    };
    if n == 0 {
        return bounds_only(0, 0);
    }
    if n > 128 {
        return bounds_only(1, 0);
    }
    let deadline = budget.deadline(start);
    let mut by_min: Vec<Vec<u128>> = vec![Vec::new(); n];
    let mut total = 0usize;
    let mut alpha_od = 1;
    let mut overflow = false;
    for_each_ois(g, 1, |s| {
        let mask = s.iter().fold(0u128, |m, v| m | 1 << v);
        by_min[mask.trailing_zeros() as usize].push(mask);
        alpha_od = alpha_od.max(s.len());
        total += 1;
        if total >= OIS_CAP || (total.is_multiple_of(4096) && deadline.is_some_and(|d| Instant::now() >= d)) {
            overflow = true;
            return false;
        }
        true
    });
    if overflow {
        return bounds_only(1, total as u64);
    }
    for list in by_min.iter_mut() {
        list.sort_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
    }
    let full: u128 = if n == 128 { !0 } else { (1u128 << n) - 1 };
    let mut search = Partition {
        by_min: &by_min,
        alpha_od,
        failed: HashSet::new(),
        chosen: Vec::new(),
        deadline,
        aborted: false,
        nodes: 0,
    };
    let mut lower = n.div_ceil(alpha_od);
    while lower < ub {
        search.chosen.clear();
        if search.solve(full, lower) {
            let classes: Vec<VertexSet> = search
                .chosen
                .iter()
                .map(|&m| VertexSet::from_ids(n, (0..n).filter(|&v| m >> v & 1 == 1)).expect("in range"))
                .collect();
            let coloring = Coloring::from_classes(n, &classes).expect("partition");
            debug_assert!(is_strong_odd_coloring(g, &coloring));
            return ColoringResult {
                chi: lower,
                coloring,
                exact: true,
                lower,
                upper: lower,
                method: ColorMethod::ClassSearch,
                nodes: search.nodes,
                millis: start.elapsed().as_millis() as u64,
            };
        }
        if search.aborted {
            return bounds_only(lower, search.nodes);
        }
        lower += 1;
    }
    let mut r = bounds_only(ub, search.nodes);
    r.method = ColorMethod::ClassSearch;
    r
}

/// Polynomial `χ_so` when `α(g) <= 2`: `n` minus a maximum matching in the
/// graph of pairs at distance at least three.
pub fn chi_so_alpha2(g: &Graph) -> Result<ColoringResult> {
    let start = Instant::now();
    if !is_triangle_free(&complement(g)) {
        return Err(Error::AlphaTooLarge);
    }
    let n = g.n();
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if !g.has_edge(u, v) && !g.neighbors(u).intersects(g.neighbors(v)) {
                pairs.push((u, v));
            }
        }
    }
    let aux = Graph::from_edge_list(n, &pairs)?;
    let m = maximum_matching(&aux);
    let mut colors: Vec<usize> = (0..n).collect();
    for &(u, v) in &m.pairs {
        colors[v] = u;
    }
    let coloring = Coloring::normalized(&colors);
    let chi = n - m.len();
    Ok(ColoringResult {
        chi,
        coloring,
        exact: true,
        lower: chi,
        upper: chi,
        method: ColorMethod::Alpha2Matching,
        nodes: 0,
        millis: start.elapsed().as_millis() as u64,
    })
}

/// `χ_so(Q_d)` with its witness: the bipartition for odd `d`; for even `d`
/// the two halves by leading bit, each 2-coloured, with disjoint palettes.
pub fn cube_chi_so(d: usize) -> Result<(usize, Coloring)> {
    if d == 0 || d > 12 {
        return Err(Error::BadParam("cube_chi_so needs 1 <= d <= 12".into()));
    }
    let colors: Vec<usize> = (0..1usize << d)
        .map(|i| {
            let parity = i.count_ones() as usize % 2;
            if d % 2 == 1 {
                parity
            } else {
                let top = i >> (d - 1);
                // parity within the half ignores the leading bit
                2 * top + (parity ^ top)
            }
        })
        .collect();
    let c = Coloring::new(colors)?;
    debug_assert!(is_strong_odd_coloring(&hypercube(d)?, &c));
    Ok((c.k(), c))
}

/// The 20-class colouring of the Hoffman–Singleton graph: `{0,2,6,18,47}`
/// and `{1,3,24}` rotated by multiples of 10, and ten singletons.
pub fn hs_20_coloring() -> Coloring {
    let mut classes = Vec::new();
    let mut covered = VertexSet::new(50);
    for base in [[0usize, 2, 6, 18, 47].as_slice(), [1usize, 3, 24].as_slice()] {
        for r in 0..5 {
            let s = VertexSet::from_ids(50, base.iter().map(|&v| (v + 10 * r) % 50)).expect("ids < 50");
            covered.union_with(&s);
            classes.push(s);
        }
    }
    for v in covered.complement().iter() {
        classes.push(VertexSet::singleton(50, v));
    }
    Coloring::from_classes(50, &classes).expect("disjoint rotations")
}

/// Strong odd colourings of `S(K_n)` with `n` colours (`3` for `n = 2`, `5`
/// for `n = 4`), ids as in [`crate::generators::complete_subdivision`].
pub fn subdivision_coloring(n: usize) -> Result<Coloring> {
    if n < 2 {
        return Err(Error::BadParam("subdivision_coloring needs n >= 2".into()));
    }
    let total = n * (n + 1) / 2;
    let mut colors = vec![0usize; total];
    for (i, c) in colors.iter_mut().enumerate().take(n) {
        *c = i;
    }
    let x = |i: usize, j: usize| subdivision_vertex(n, i, j);
    if n == 2 {
        colors[x(0, 1)] = 2;
    } else if n % 2 == 1 {
        let half = n.div_ceil(2); // inverse of 2 mod n
        for i in 0..n {
            for j in (i + 1)..n {
                colors[x(i, j)] = (i + j) * half % n;
            }
        }
    } else if n == 4 {
        for i in 0..4 {
            colors[x((i + 1) % 4, (i + 2) % 4)] = i;
        }
        colors[x(0, 2)] = 4;
        colors[x(1, 3)] = 4;
    } else {
        for i in 0..n {
            for j in (i + 1)..n {
                let c = if j <= n - 3 {
                    n - 1
                } else if j == n - 2 {
                    if i == 0 {
                        1
                    } else {
                        0
                    }
                } else if i == n - 2 {
                    n - 3
                } else if i == n - 3 {
                    1
                } else {
                    n - 2
                };
                colors[x(i, j)] = c;
            }
        }
    }
    Coloring::new(colors)
}

/// `n + 1` classes for `H_{n,n}`: `u_1` and `v_n` alone, `{u_i, v_{i-1}}` otherwise.
pub fn half_graph_coloring(n: usize) -> Result<Coloring> {
    if n == 0 {
        return Err(Error::BadParam("half_graph_coloring needs n >= 1".into()));
    }
    let mut colors = vec![0usize; 2 * n];
    for i in 2..=n {
        colors[i - 1] = i - 1;
        colors[n + i - 2] = i - 1;
    }
    colors[2 * n - 1] = n;
    Coloring::new(colors)
}

/// Checks a colouring class by class, returning the first class that is not
/// odd independent.
pub fn first_bad_class(g: &Graph, c: &Coloring) -> Option<usize> {
    c.classes().iter().position(|s| !is_odd_independent(g, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::ops;

    fn b() -> Budget {
        Budget::secs(30)
    }

    #[test]
    fn verification_examples() {
        let k33 = complete_bipartite(3, 3).unwrap();
        let c = Coloring::new(vec![0, 0, 0, 1, 1, 1]).unwrap();
        assert!(is_strong_odd_coloring(&k33, &c));
        let c4 = cycle(4).unwrap();
        let c = Coloring::new(vec![0, 1, 0, 1]).unwrap();
        assert!(!is_strong_odd_coloring(&c4, &c));
        assert!(Coloring::new(vec![0, 2]).is_err());
    }

    #[test]
    fn exact_examples() {
        for (g, want) in [
            (cycle(5).unwrap(), 5),
            (petersen(), 6),
            (complete_subdivision(4).unwrap(), 5),
            (half_graph(3).unwrap(), 4),
            (path(5).unwrap(), 3),
            (hypercube(2).unwrap(), 4),
        ] {
            let r = chi_so_exact(&g, b());
            assert_eq!((r.chi, r.exact), (want, true), "{g:?}");
            assert!(is_strong_odd_coloring(&g, &r.coloring));
        }
    }

    #[test]
    fn square_examples() {
        assert_eq!(chi_square(&petersen(), b()).chi, 10);
        assert_eq!(chi_square(&path(4).unwrap(), b()).chi, 3);
    }

    #[test]
    fn alpha2_examples() {
        let k5 = complete(5).unwrap();
        assert_eq!(chi_so_alpha2(&k5).unwrap().chi, 5);
        let two_k3 = ops::t_copies(&complete(3).unwrap(), 2).unwrap();
        let r = chi_so_alpha2(&two_k3).unwrap();
        assert_eq!(r.chi, 3);
        assert!(is_strong_odd_coloring(&two_k3, &r.coloring));
        assert_eq!(chi_so_alpha2(&empty(3).unwrap()), Err(Error::AlphaTooLarge));
    }

    #[test]
    fn constructions_are_valid() {
        let hs = hoffman_singleton();
        let c = hs_20_coloring();
        assert_eq!(c.k(), 20);
        assert!(is_strong_odd_coloring(&hs, &c));
        for n in 2..=9 {
            let c = subdivision_coloring(n).unwrap();
            let want = match n {
                2 => 3,
                4 => 5,
                _ => n,
            };
            assert_eq!(c.k(), want);
            assert!(is_strong_odd_coloring(&complete_subdivision(n).unwrap(), &c), "n={n}");
        }
        for n in 1..8 {
            let c = half_graph_coloring(n).unwrap();
            assert_eq!(c.k(), n + 1);
            assert!(is_strong_odd_coloring(&half_graph(n).unwrap(), &c));
        }
        for d in 1..=8 {
            let (k, c) = cube_chi_so(d).unwrap();
            assert_eq!(k, if d % 2 == 1 { 2 } else { 4 });
            assert!(is_strong_odd_coloring(&hypercube(d).unwrap(), &c));
        }
    }

    #[test]
    fn partition_upper_bound_is_valid() {
        for g in [petersen(), hoffman_singleton(), cycle(7).unwrap(), hypercube(4).unwrap()] {
            let (k, c) = chi_so_upper_from_partition(&g);
            assert_eq!(k, c.k());
            assert!(is_strong_odd_coloring(&g, &c));
        }
    }
}
