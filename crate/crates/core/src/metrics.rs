//! Degree, distance and local-structure metrics.

use std::collections::VecDeque;
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// A length that may be unbounded. `Infinite` orders above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMetrics {
    pub max_degree: usize,
    pub min_degree: usize,
    pub average_degree: Ratio<u64>,
    pub girth: Distance,
    pub diameter: Distance,
    pub bipartition: Option<(VertexSet, VertexSet)>,
    pub is_triangle_free: bool,
    pub is_claw_free: bool,
    pub is_regular: bool,
}

impl GraphMetrics {
    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }
}

pub fn metrics(g: &Graph) -> GraphMetrics {
    let n = g.n() as u64;
    GraphMetrics {
        max_degree: g.max_degree(),
        min_degree: g.min_degree(),
        average_degree: if n == 0 {
            Ratio::from_integer(0)
        } else {
            Ratio::new(2 * g.edge_count() as u64, n)
        },
        girth: girth(g),
        diameter: diameter(g),
        bipartition: bipartition(g),
        is_triangle_free: is_triangle_free(g),
        is_claw_free: is_claw_free(g),
        is_regular: g.regular_degree().is_some(),
    }
}

/// BFS distances from `src`; `None` marks unreachable vertices.
pub fn bfs_distances(g: &Graph, src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices have distances");
        for w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn distance(g: &Graph, u: usize, v: usize) -> Distance {
    bfs_distances(g, u)[v].map_or(Distance::Infinite, Distance::Finite)
}

/// All-pairs distance matrix by repeated BFS.
pub fn distance_matrix(g: &Graph) -> Vec<Vec<Distance>> {
    (0..g.n())
        .map(|s| {
            bfs_distances(g, s)
                .into_iter()
                .map(|d| d.map_or(Distance::Infinite, Distance::Finite))
                .collect()
        })
        .collect()
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() == 0 || bfs_distances(g, 0).iter().all(Option::is_some)
}

/// Diameter; `Infinite` iff the graph is disconnected. The empty graph and
/// `K_1` have diameter 0.
pub fn diameter(g: &Graph) -> Distance {
    let mut best = 0;
    for s in 0..g.n() {
        for d in bfs_distances(g, s) {
            match d {
                Some(d) => best = best.max(d),
                None => return Distance::Infinite,
            }
        }
    }
    Distance::Finite(best)
}

/// Length of a shortest cycle; `Infinite` for forests.
pub fn girth(g: &Graph) -> Distance {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Distance::Infinite
    } else {
        Distance::Finite(best)
    }
}

/// A 2-colouring `(A, B)` if one exists. Each component's lowest vertex lands in `A`.
pub fn bipartition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let n = g.n();
    let mut side: Vec<Option<bool>> = vec![None; n];
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].expect("queued vertices are coloured");
            for w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let mut a = VertexSet::new(n);
    let mut b = VertexSet::new(n);
    for (v, s) in side.into_iter().enumerate() {
        if s == Some(false) {
            a.insert(v);
        } else {
            b.insert(v);
        }
    }
    Some((a, b))
}

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges().all(|(u, v)| !g.neighbors(u).intersects(g.neighbors(v)))
}

/// Scans every neighbourhood for an independent triple (an induced `K_{1,3}`).
pub fn is_claw_free(g: &Graph) -> bool {
    (0..g.n()).all(|c| find_claw_at(g, c).is_none())
}

/// Leaves of an induced claw centred at `c`, if any.
pub fn find_claw_at(g: &Graph, c: usize) -> Option<[usize; 3]> {
    let nb = g.neighbors(c);
    for x in nb.iter() {
        let mut rest = nb.difference(g.neighbors(x));
        rest.remove(x);
        for y in rest.iter().filter(|&y| y > x) {
            let mut third = rest.difference(g.neighbors(y));
            third.remove(y);
            if let Some(z) = third.iter().find(|&z| z > y) {
                return Some([x, y, z]);
            }
        }
    }
    None
}

/// Connected components as vertex sets, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut seen = VertexSet::new(n);
    let mut out = Vec::new();
    for root in 0..n {
        if seen.contains(root) {
            continue;
        }
        let comp = VertexSet::from_ids(
            n,
            bfs_distances(g, root)
                .iter()
                .enumerate()
                .filter(|(_, d)| d.is_some())
                .map(|(v, _)| v),
        )
        .expect("ids in range");
        seen.union_with(&comp);
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn petersen_metrics() {
        let m = metrics(&petersen());
        assert_eq!(m.girth, Distance::Finite(5));
        assert_eq!(m.diameter, Distance::Finite(2));
        assert_eq!((m.max_degree, m.min_degree), (3, 3));
        assert!(m.is_regular && m.is_triangle_free && !m.is_bipartite());
        assert!(!m.is_claw_free);
    }

    #[test]
    fn edgeless_metrics() {
        let m = metrics(&empty(4).unwrap());
        assert_eq!(m.girth, Distance::Infinite);
        assert_eq!(m.diameter, Distance::Infinite);
        assert!(Distance::Infinite > Distance::Finite(usize::MAX));
    }

    #[test]
    fn cycle_girth_and_bipartition() {
        for n in 3..12 {
            let m = metrics(&cycle(n).unwrap());
            assert_eq!(m.girth, Distance::Finite(n));
            assert_eq!(m.diameter, Distance::Finite(n / 2));
            assert_eq!(m.is_bipartite(), n % 2 == 0);
            assert!(m.is_claw_free);
        }
        let (a, b) = bipartition(&cycle(6).unwrap()).unwrap();
        assert_eq!(a.to_vec(), vec![0, 2, 4]);
        assert_eq!(b.to_vec(), vec![1, 3, 5]);
    }

    #[test]
    fn claw_detection() {
        assert!(!is_claw_free(&star(4).unwrap()));
        assert_eq!(find_claw_at(&star(4).unwrap(), 0), Some([1, 2, 3]));
        assert!(is_claw_free(&complete(5).unwrap()));
    }
}
