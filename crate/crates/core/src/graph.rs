//! Immutable simple undirected graphs with bit-packed adjacency rows.

use std::fmt;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 4096;

/// A simple undirected graph on vertices `0..n`.
///
/// Row `v` holds `N(v)`. Rows are symmetric and irreflexive; every
/// constructor enforces this, so there is no way to observe a malformed
/// graph through the public API.
#[derive(Clone)]
pub struct Graph {
    rows: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// The edgeless graph `E_n`.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        Ok(Graph { rows: vec![VertexSet::new(n); n], labels: None })
    }

    /// Builds a graph from an edge list. Duplicate and reversed pairs collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = GraphBuilder::new(n)?;
        for &(u, v) in edges {
            b.try_add_edge(u, v)?;
        }
        Ok(b.build())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.rows[u].contains(v)
    }

    /// Open neighbourhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(VertexSet::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.rows.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.rows.iter().map(VertexSet::len).min().unwrap_or(0)
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.rows.first().map_or(0, VertexSet::len);
        self.rows.iter().all(|r| r.len() == d).then_some(d)
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.rows
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::BadParam(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Empty vertex set sized for this graph.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::new(self.n())
    }

    /// Vertex set from ids, checked against `n`.
    pub fn set_of<I: IntoIterator<Item = usize>>(&self, ids: I) -> Result<VertexSet> {
        let n = self.n();
        let mut s = VertexSet::new(n);
        for v in ids {
            if v >= n {
                return Err(Error::IndexOutOfRange { vertex: v, n });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Bit-level scan of the representation invariants.
    pub fn check_invariants(&self) -> bool {
        let n = self.n();
        self.rows.iter().enumerate().all(|(v, row)| {
            row.universe() == n
                && !row.contains(v)
                && row.iter().all(|u| u < n && self.rows[u].contains(v))
        })
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.n();
        assert_eq!(perm.len(), n);
        let mut b = GraphBuilder::new(n).expect("same size");
        for (u, v) in self.edges() {
            b.add_edge(perm[u], perm[v]);
        }
        b.build()
    }
}

/// Mutable accumulator used by constructors; produces an immutable [`Graph`].
pub struct GraphBuilder {
    rows: Vec<VertexSet>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        Ok(GraphBuilder { rows: vec![VertexSet::new(n); n] })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::IndexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Panics on out-of-range endpoints or loops; for internal constructors.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loop at {u}");
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u].remove(v);
        self.rows[v].remove(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn build(self) -> Graph {
        Graph { rows: self.rows, labels: None }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let g = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn path_degrees() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.degrees(), vec![1, 2, 1]);
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::from_edge_list(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.check_invariants());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(Error::IndexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::from_edge_list(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::empty(MAX_VERTICES + 1), Err(Error::TooLarge(MAX_VERTICES + 1)));
    }
}
