use std::time::Instant;

use super::search::{Budget, Engine, Outcome};
use super::{excluded_rows, is_odd_independent, Method, SolveResult};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::maximum_matching;
use crate::metrics::{bipartition, girth, is_claw_free, Distance};
use crate::ops::square;

/// Vertices by decreasing degree in `g`, ties by id.
fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// Minimum-degree greedy independent set.
pub fn greedy_independent(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut alive = VertexSet::full(n);
    let mut out = VertexSet::new(n);
    while !alive.is_empty() {
        let v = alive
            .iter()
            .min_by_key(|&v| (g.neighbors(v).intersection_len(&alive), v))
            .expect("non-empty");
        out.insert(v);
        alive.remove(v);
        alive.difference_with(g.neighbors(v));
    }
    out
}

/// Number of greedy classes of pairwise conflicting vertices; an upper bound
/// on the independence number of the conflict graph.
fn clique_cover_bound(conflict: &[VertexSet]) -> usize {
    let n = conflict.len();
    let mut rest = VertexSet::full(n);
    let mut classes = 0;
    while let Some(v) = rest.first() {
        classes += 1;
        let mut q = conflict[v].intersection(&rest);
        rest.remove(v);
        while let Some(u) = q.first() {
            rest.remove(u);
            q.intersect_with(&conflict[u]);
        }
    }
    classes
}

fn finish(
    g: &Graph,
    out: Outcome,
    upper: usize,
    start: Instant,
    method: Method,
) -> SolveResult {
    let witness = g.set_of(out.best.iter().copied()).expect("engine ids are in range");
    let value = witness.len();
    let exact = out.completed || value >= upper;
    SolveResult {
        value,
        witness,
        method,
        exact,
        lower: value,
        upper: if exact { value } else { upper },
        nodes: out.nodes,
        millis: start.elapsed().as_millis() as u64,
    }
}

/// Maximum independent set by branch and bound.
pub fn alpha(g: &Graph, budget: Budget) -> SolveResult {
    let start = Instant::now();
    let n = g.n();
    let upper = (n - maximum_matching(g).len()).min(clique_cover_bound(g.rows()));
    let engine = Engine::new(g, g.rows(), false, degree_order(g), upper, budget);
    engine.seed(&greedy_independent(g).to_vec());
    finish(g, engine.run(), upper, start, Method::BranchBound)
}

/// Maximum independent set of `G²`, reported on the vertices of `g`. Every
/// such set is odd independent in `g`.
pub fn alpha_square(g: &Graph, budget: Budget) -> SolveResult {
    alpha(&square(g), budget)
}

/// Upper bound for `Δ`-regular graphs whose adjacent vertices share at
/// least `λ` neighbours, with `λ` the minimum over edges.
pub fn common_neighbor_floor(g: &Graph) -> Option<usize> {
    g.edges().map(|(u, v)| g.neighbors(u).intersection_len(g.neighbors(v))).min()
}

/// The λ-bound for regular graphs, `None` when not regular or edgeless.
pub fn lambda_bound(g: &Graph) -> Option<usize> {
    let d = g.regular_degree().filter(|&d| d > 0)?;
    let lambda = common_neighbor_floor(g)?;
    let n = g.n();
    let gap = d - lambda;
    Some(if gap % 2 == 0 {
        (gap - 1) * n / (2 * d - lambda - 1)
    } else {
        gap * n / (2 * d - lambda)
    })
}

/// `⌊(d-1)n/(2d-1)⌋` for `d`-regular graphs with `d >= 2` even.
pub fn even_regular_bound(g: &Graph) -> Option<usize> {
    let d = g.regular_degree().filter(|&d| d >= 2 && d % 2 == 0)?;
    Some((d - 1) * g.n() / (2 * d - 1))
}

/// Larger bipartition class when every degree is odd; that class is odd
/// independent.
pub fn odd_degree_bipartite_seed(g: &Graph) -> Option<VertexSet> {
    if g.n() == 0 || (0..g.n()).any(|v| g.degree(v).is_multiple_of(2)) {
        return None;
    }
    let (a, b) = bipartition(g)?;
    Some(if a.len() >= b.len() { a } else { b })
}

/// An odd-size subset of a maximum-degree neighbourhood, odd independent when
/// the girth is at least 5.
pub fn girth5_seed(g: &Graph) -> Option<VertexSet> {
    if g.n() == 0 || g.max_degree() == 0 {
        return None;
    }
    if girth(g) < Distance::Finite(5) {
        return None;
    }
    let v = (0..g.n()).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))?;
    let mut s = g.neighbors(v).clone();
    if s.len().is_multiple_of(2) {
        let last = s.iter().last().expect("degree >= 2");
        s.remove(last);
    }
    Some(s)
}

/// Knobs for [`alpha_od_with`].
#[derive(Debug, Clone)]
#[derive(Default)]
pub struct OdOptions {
    pub budget: Budget,
    /// Known odd independent sets; invalid ones are ignored.
    pub seeds: Vec<VertexSet>,
    /// Externally proven upper bound, if any.
    pub upper: Option<usize>,
}


/// Exact `α_od` with the default options.
pub fn alpha_od(g: &Graph, budget: Budget) -> SolveResult {
    alpha_od_with(g, &OdOptions { budget, ..OdOptions::default() })
}

pub fn alpha_od_with(g: &Graph, opts: &OdOptions) -> SolveResult {
    let start = Instant::now();
    let n = g.n();
    let mut nodes = 0;
    if n == 0 {
        return SolveResult {
            value: 0,
            witness: VertexSet::new(0),
            method: Method::BranchBound,
            exact: true,
            lower: 0,
            upper: 0,
            nodes: 0,
            millis: 0,
        };
    }

    let conflict: Vec<VertexSet> = excluded_rows(g)
        .into_iter()
        .enumerate()
        .map(|(v, x)| x.union(g.neighbors(v)))
        .collect();

    // upper bounds
    let a = alpha(g, opts.budget.scaled(1, 4));
    nodes += a.nodes;
    let mut upper = a.upper.min(clique_cover_bound(&conflict));
    for b in [even_regular_bound(g), lambda_bound(g), opts.upper].into_iter().flatten() {
        upper = upper.min(b);
    }

    // lower bounds
    let sq = alpha_square(g, opts.budget.scaled(1, 8));
    nodes += sq.nodes;
    let mut best = sq.witness;
    let mut method = Method::BranchBound;
    if let Some(s) = odd_degree_bipartite_seed(g) {
        if s.len() > best.len() {
            best = s;
            method = Method::OddRegularBipartite;
        }
    }
    let extra = girth5_seed(g).into_iter().chain(opts.seeds.iter().cloned());
    for s in extra {
        if s.universe() == n && s.len() > best.len() && is_odd_independent(g, &s) {
            best = s;
            method = Method::BranchBound;
        }
    }

    if best.len() >= upper {
        let value = best.len();
        return SolveResult {
            value,
            witness: best,
            method,
            exact: true,
            lower: value,
            upper: value,
            nodes,
            millis: start.elapsed().as_millis() as u64,
        };
    }

    let order = degree_order(&square(g));
    let remaining = opts.budget.remaining(start.elapsed());
    let engine = Engine::new(g, &conflict, true, order, upper, remaining);
    engine.seed(&best.to_vec());
    let mut res = finish(g, engine.run(), upper, start, Method::BranchBound);
    res.nodes += nodes;
    res
}

/// `α_od` restricted to sets of size at most `k`, by exhaustive scan of the
/// independent `j`-subsets. Exact whenever `α(g) <= k`, which is detected.
pub fn alpha_od_bounded(g: &Graph, k: usize) -> Result<SolveResult> {
    if k == 0 {
        return Err(Error::BadParam("alpha_od_bounded needs k >= 1".into()));
    }
    let start = Instant::now();
    let n = g.n();
    let mut best = VertexSet::new(n);
    let mut alpha_exceeds = false;
    let mut nodes = 0u64;
    let mut cur = VertexSet::new(n);

    #[allow(clippy::too_many_arguments)]
    fn scan(
        g: &Graph,
        k: usize,
        next: usize,
        cur: &mut VertexSet,
        cand: &VertexSet,
        best: &mut VertexSet,
        exceeds: &mut bool,
        nodes: &mut u64,
    ) {
        *nodes += 1;
        if cur.len() > best.len() && is_odd_independent(g, cur) {
            *best = cur.clone();
        }
        if cur.len() == k {
            if !cand.is_empty() {
                *exceeds = true;
            }
            return;
        }
        for v in cand.iter().filter(|&v| v >= next) {
            let mut c = cand.difference(g.neighbors(v));
            c.remove(v);
            // keep only later vertices so each subset is visited once
            let later: VertexSet = c.iter().filter(|&u| u > v).fold(VertexSet::new(g.n()), |mut s, u| {
                s.insert(u);
                s
            });
            cur.insert(v);
            scan(g, k, v + 1, cur, &later, best, exceeds, nodes);
            cur.remove(v);
        }
    }

    let all = VertexSet::full(n);
    scan(g, k, 0, &mut cur, &all, &mut best, &mut alpha_exceeds, &mut nodes);
    let value = best.len();
    Ok(SolveResult {
        value,
        witness: best,
        method: Method::BoundedK { k },
        exact: !alpha_exceeds,
        lower: value,
        upper: if alpha_exceeds { n } else { value },
        nodes,
        millis: start.elapsed().as_millis() as u64,
    })
}

/// `α_od = α(G²)` for claw-free graphs.
pub fn alpha_od_clawfree(g: &Graph, budget: Budget) -> Result<SolveResult> {
    if !is_claw_free(g) {
        return Err(Error::NotClawFree);
    }
    let mut r = alpha_square(g, budget);
    r.method = Method::ClawFreeReduction;
    Ok(r)
}
