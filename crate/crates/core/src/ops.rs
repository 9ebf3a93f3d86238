//! Structural graph operations. All are pure and return fresh graphs.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let mut b = GraphBuilder::new(n).expect("same order");
    for u in 0..n {
        for v in (u + 1)..n {
            if !g.has_edge(u, v) {
                b.add_edge(u, v);
            }
        }
    }
    b.build()
}

/// `G²`: vertices at distance at most two become adjacent.
pub fn square(g: &Graph) -> Graph {
    let n = g.n();
    let mut b = GraphBuilder::new(n).expect("same order");
    for u in 0..n {
        let mut reach = g.neighbors(u).clone();
        for w in g.neighbors(u) {
            reach.union_with(g.neighbors(w));
        }
        reach.remove(u);
        for v in reach.iter().filter(|&v| v > u) {
            b.add_edge(u, v);
        }
    }
    b.build()
}

/// Index of the product vertex `(u, w)`; products are `g`-major.
#[inline]
pub fn product_index(u: usize, w: usize, h_order: usize) -> usize {
    u * h_order + w
}

/// Cartesian product `g □ h` with vertex `(u, w)` at `u * |h| + w`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (gn, hn) = (g.n(), h.n());
    let mut b = GraphBuilder::new(gn * hn)?;
    for u in 0..gn {
        for (w, x) in h.edges() {
            b.add_edge(product_index(u, w, hn), product_index(u, x, hn));
        }
    }
    for (u, v) in g.edges() {
        for w in 0..hn {
            b.add_edge(product_index(u, w, hn), product_index(v, w, hn));
        }
    }
    Ok(b.build())
}

/// `g ∪ h`; vertices of `h` follow those of `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let off = g.n();
    let mut b = GraphBuilder::new(off + h.n())?;
    for (u, v) in g.edges() {
        b.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        b.add_edge(off + u, off + v);
    }
    Ok(b.build())
}

/// Complete join `g + h`.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let off = g.n();
    let mut b = GraphBuilder::new(off + h.n())?;
    for (u, v) in g.edges() {
        b.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        b.add_edge(off + u, off + v);
    }
    for u in 0..off {
        for v in 0..h.n() {
            b.add_edge(u, off + v);
        }
    }
    Ok(b.build())
}

/// `tG`, the disjoint union of `t` copies; copy `i` occupies `i*|g|..`.
pub fn t_copies(g: &Graph, t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::BadParam("t_copies needs t >= 1".into()));
    }
    let n = g.n();
    let mut b = GraphBuilder::new(n * t)?;
    for i in 0..t {
        for (u, v) in g.edges() {
            b.add_edge(i * n + u, i * n + v);
        }
    }
    Ok(b.build())
}

/// Replaces every edge by a path of length two. Original vertices keep their
/// ids; the subdivision vertex of the `k`-th edge of [`Graph::edges`] is `n + k`.
pub fn subdivide_all_edges(g: &Graph) -> Result<Graph> {
    let n = g.n();
    let edges: Vec<_> = g.edges().collect();
    let mut b = GraphBuilder::new(n + edges.len())?;
    for (k, &(u, v)) in edges.iter().enumerate() {
        b.add_edge(u, n + k);
        b.add_edge(v, n + k);
    }
    Ok(b.build())
}

/// Line graph; vertex `k` is the `k`-th edge of [`Graph::edges`].
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let edges: Vec<_> = g.edges().collect();
    let mut b = GraphBuilder::new(edges.len())?;
    for i in 0..edges.len() {
        let (a, c) = edges[i];
        for (j, &(x, y)) in edges.iter().enumerate().skip(i + 1) {
            if a == x || a == y || c == x || c == y {
                b.add_edge(i, j);
            }
        }
    }
    Ok(b.build())
}

/// Subgraph induced by `keep`, relabelled `0..|keep|` in increasing order.
pub fn induced_subgraph(g: &Graph, keep: &VertexSet) -> Graph {
    let ids: Vec<usize> = keep.iter().collect();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in ids.iter().enumerate() {
        index[v] = i;
    }
    let mut b = GraphBuilder::new(ids.len()).expect("subgraph is smaller");
    for (i, &v) in ids.iter().enumerate() {
        for u in g.neighbors(v).intersection(keep).iter() {
            if index[u] > i {
                b.add_edge(i, index[u]);
            }
        }
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    #[test]
    fn complement_of_complete_is_empty() {
        let g = complement(&complete(6).unwrap());
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.n(), 6);
    }

    #[test]
    fn square_of_path() {
        let sq = square(&path(5).unwrap());
        for u in 0..5usize {
            for v in 0..5usize {
                assert_eq!(sq.has_edge(u, v), u != v && u.abs_diff(v) <= 2);
            }
        }
    }

    #[test]
    fn product_degree_law() {
        let (g, h) = (path(4).unwrap(), cycle(5).unwrap());
        let p = cartesian_product(&g, &h).unwrap();
        assert_eq!(p.n(), 20);
        for u in 0..4 {
            for w in 0..5 {
                assert_eq!(p.degree(product_index(u, w, 5)), g.degree(u) + h.degree(w));
            }
        }
    }

    #[test]
    fn copies_and_join() {
        let k2 = complete(2).unwrap();
        let m = t_copies(&k2, 4).unwrap();
        assert_eq!((m.n(), m.edge_count()), (8, 4));
        assert!(m.degrees().iter().all(|&d| d == 1));
        assert!(t_copies(&k2, 0).is_err());
        let j = join(&complete(2).unwrap(), &Graph::empty(3).unwrap()).unwrap();
        assert_eq!(j.edge_count(), 1 + 6);
    }

    #[test]
    fn subdivided_k4() {
        let s = subdivide_all_edges(&complete(4).unwrap()).unwrap();
        assert_eq!(s.n(), 10);
        let mut d = s.degrees();
        d.sort_unstable();
        assert_eq!(d, vec![2, 2, 2, 2, 2, 2, 3, 3, 3, 3]);
    }

    #[test]
    fn line_graph_of_star_is_complete() {
        let star = crate::generators::star(5).unwrap();
        let l = line_graph(&star).unwrap();
        assert_eq!(l, complete(4).unwrap());
    }
}
