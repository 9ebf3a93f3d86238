//! Canonical labelling for small graphs (n <= 64) by individualization and
//! refinement, and isomorph-free enumeration by vertex augmentation.
//!
//! Only twin transpositions are used to prune the search tree, so this is
//! meant for the census sizes used in tests (n <= 16 or so), not for large
//! highly symmetric graphs.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// Adjacency rows of the canonically relabelled graph. Equal keys mean
/// isomorphic graphs.
pub type CanonKey = Vec<u64>;

const LIMIT: usize = 64;

fn rows64(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, u| acc | (1 << u)))
        .collect()
}

/// Refines `color` (a vertex -> cell index map whose cells are `0..k`) to the
/// coarsest equitable partition below it. Returns the number of cells.
fn refine(rows: &[u64], color: &mut [usize]) -> usize {
    let n = rows.len();
    let mut cells = color.iter().copied().max().map_or(0, |m| m + 1);
    let mut sig: Vec<(usize, Vec<u32>, usize)> = Vec::with_capacity(n);
    loop {
        let mut masks = vec![0u64; cells];
        for v in 0..n {
            masks[color[v]] |= 1 << v;
        }
        sig.clear();
        for v in 0..n {
            let counts = masks.iter().map(|m| (rows[v] & m).count_ones()).collect();
            sig.push((color[v], counts, v));
        }
        sig.sort_unstable();
        let mut next = 0;
        for i in 0..n {
            if i > 0 && (sig[i].0 != sig[i - 1].0 || sig[i].1 != sig[i - 1].1) {
                next += 1;
            }
            color[sig[i].2] = next;
        }
        let new_cells = if n == 0 { 0 } else { next + 1 };
        if new_cells == cells {
            return cells;
        }
        cells = new_cells;
    }
}

struct Search<'a> {
    rows: &'a [u64],
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn leaf_key(&self, color: &[usize]) -> Vec<u64> {
        let mut out = vec![0u64; self.rows.len()];
        for (v, &row) in self.rows.iter().enumerate() {
            let mut r = row;
            let mut mapped = 0u64;
            while r != 0 {
                let u = r.trailing_zeros() as usize;
                r &= r - 1;
                mapped |= 1 << color[u];
            }
            out[color[v]] = mapped;
        }
        out
    }

    fn descend(&mut self, color: Vec<usize>, cells: usize) {
        let n = self.rows.len();
        if cells == n {
            let key = self.leaf_key(&color);
            if self.best.as_ref().is_none_or(|(b, _)| key < *b) {
                self.best = Some((key, color));
            }
            return;
        }
        // first non-singleton cell
        let mut size = vec![0usize; cells];
        for &c in &color {
            size[c] += 1;
        }
        let target = (0..cells).find(|&c| size[c] > 1).expect("some cell is not discrete");
        let members: Vec<usize> = (0..n).filter(|&v| color[v] == target).collect();
        let mut reps: Vec<usize> = Vec::new();
        for &v in &members {
            let twin = reps.iter().any(|&r| {
                let (a, b) = (self.rows[v] & !(1 << r), self.rows[r] & !(1 << v));
                a == b
            });
            if !twin {
                reps.push(v);
            }
        }
        for v in reps {
            let mut next: Vec<usize> = color
                .iter()
                .map(|&c| if c > target { c + 1 } else { c })
                .collect();
            for &u in &members {
                if u != v {
                    next[u] = target + 1;
                }
            }
            let k = refine(self.rows, &mut next);
            self.descend(next, k);
        }
    }
}

/// Canonical relabelling: returns the key and `perm` with vertex `v` mapped to
/// `perm[v]` in the canonical graph.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonKey, Vec<usize>)> {
    let n = g.n();
    if n > LIMIT {
        return Err(Error::TooLarge(n));
    }
    let rows = rows64(g);
    let mut color = vec![0usize; n];
    let cells = refine(&rows, &mut color);
    let mut search = Search { rows: &rows, best: None };
    search.descend(color, cells);
    Ok(search.best.unwrap_or_default())
}

pub fn canonical_key(g: &Graph) -> Result<CanonKey> {
    canonical_labeling(g).map(|(k, _)| k)
}

/// The canonically relabelled copy of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let (_, perm) = canonical_labeling(g)?;
    Ok(g.permuted(&perm))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(canonical_key(g)? == canonical_key(h)?)
}

fn graph_of_key(key: &[u64]) -> Graph {
    let n = key.len();
    let mut b = GraphBuilder::new(n).expect("small");
    for (v, &row) in key.iter().enumerate() {
        for u in (v + 1)..n {
            if row >> u & 1 == 1 {
                b.add_edge(v, u);
            }
        }
    }
    b.build()
}

/// Hereditary (induced-subgraph-closed) classes for augmentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Class {
    All,
    TriangleFree,
    MaxDegree(usize),
}

impl Class {
    /// Whether the neighbourhood `nb` of a new vertex keeps the class.
    fn admits(self, rows: &[u64], nb: u64) -> bool {
        match self {
            Class::All => true,
            Class::TriangleFree => {
                let mut r = nb;
                while r != 0 {
                    let v = r.trailing_zeros() as usize;
                    r &= r - 1;
                    if rows[v] & nb != 0 {
                        return false;
                    }
                }
                true
            }
            Class::MaxDegree(k) => {
                if nb.count_ones() as usize > k {
                    return false;
                }
                let mut r = nb;
                while r != 0 {
                    let v = r.trailing_zeros() as usize;
                    r &= r - 1;
                    if rows[v].count_ones() as usize >= k {
                        return false;
                    }
                }
                true
            }
        }
    }
}

fn extend(parent: &[u64], class: Class) -> Vec<CanonKey> {
    let n = parent.len();
    let mut out = Vec::new();
    for nb in 0u64..(1 << n) {
        if !class.admits(parent, nb) {
            continue;
        }
        let mut rows = parent.to_vec();
        for (v, row) in rows.iter_mut().enumerate() {
            if nb >> v & 1 == 1 {
                *row |= 1 << n;
            }
        }
        rows.push(nb);
        let g = graph_of_key(&rows);
        out.push(canonical_key(&g).expect("small"));
    }
    out
}

/// All graphs of the class on exactly `n` vertices, one per isomorphism
/// class, sorted by canonical key. `n` is capped at 12.
pub fn enumerate(n: usize, class: Class) -> Result<Vec<Graph>> {
    Ok(enumerate_up_to(n, class)?.pop().unwrap_or_default())
}

/// Levels `0..=n`: entry `i` holds the graphs on `i` vertices.
pub fn enumerate_up_to(n: usize, class: Class) -> Result<Vec<Vec<Graph>>> {
    if n > 12 {
        return Err(Error::TooLarge(n));
    }
    let mut levels: Vec<Vec<CanonKey>> = vec![vec![Vec::new()]];
    for _ in 0..n {
        let prev = levels.last().expect("level 0 exists");
        let batches = crate::par::map(prev, |p| extend(p, class));
        let mut seen: HashSet<CanonKey> = HashSet::new();
        for batch in batches {
            seen.extend(batch);
        }
        let mut next: Vec<CanonKey> = seen.into_iter().collect();
        next.sort_unstable();
        levels.push(next);
    }
    Ok(levels
        .into_iter()
        .map(|lvl| lvl.iter().map(|k| graph_of_key(k)).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::ops;

    #[test]
    fn known_counts_all_graphs() {
        let levels = enumerate_up_to(7, Class::All).unwrap();
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn known_counts_triangle_free() {
        let levels = enumerate_up_to(8, Class::TriangleFree).unwrap();
        let counts: Vec<usize> = levels.iter().skip(1).map(Vec::len).collect();
        assert_eq!(counts, vec![1, 2, 3, 7, 14, 38, 107, 410]);
    }

    #[test]
    fn isomorphism_examples() {
        let c5 = cycle(5).unwrap();
        assert!(is_isomorphic(&ops::complement(&c5), &c5).unwrap());
        assert!(is_isomorphic(&kneser(5, 2).unwrap(), &petersen()).unwrap());
        let q2 = hypercube(2).unwrap();
        assert!(is_isomorphic(&hypercube(4).unwrap(), &ops::cartesian_product(&q2, &q2).unwrap()).unwrap());
        assert!(is_isomorphic(&complete_subdivision(3).unwrap(), &cycle(6).unwrap()).unwrap());
        assert!(!is_isomorphic(&path(4).unwrap(), &star(4).unwrap()).unwrap());
        // same degree sequence, not isomorphic
        let two_triangles = ops::t_copies(&complete(3).unwrap(), 2).unwrap();
        assert!(!is_isomorphic(&two_triangles, &cycle(6).unwrap()).unwrap());
    }

    #[test]
    fn canonical_form_is_invariant() {
        let g = petersen();
        let perm = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4];
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&g.permuted(&perm)).unwrap());
    }
}
