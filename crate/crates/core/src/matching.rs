//! Maximum matching in general graphs with Edmonds' blossom contraction.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    /// Matched pairs `(u, v)` with `u < v`, sorted.
    pub pairs: Vec<(usize, usize)>,
    /// `mate[v]` is the partner of `v`, if any.
    pub mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching { pairs: Vec::new(), mate: vec![None; n] }
    }

    /// Builds a matching from pairs; returns `None` if a vertex repeats or an
    /// id is out of range.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Option<Self> {
        let mut mate = vec![None; n];
        for &(u, v) in pairs {
            if u >= n || v >= n || u == v || mate[u].is_some() || mate[v].is_some() {
                return None;
            }
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        Some(Self::from_mate(mate))
    }

    fn from_mate(mate: Vec<Option<usize>>) -> Self {
        let pairs = mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| v > u).map(|v| (u, v)))
            .collect();
        Matching { pairs, mate }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// State of one augmenting-path search from an exposed root.
struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph, mate: Vec<usize>) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn contract(&mut self, v: usize, u: usize) {
        let b = self.lca(v, u);
        self.in_blossom.iter_mut().for_each(|x| *x = false);
        self.mark_path(v, b, u);
        self.mark_path(u, b, v);
        for i in 0..self.g.n() {
            if self.in_blossom[self.base[i]] {
                self.base[i] = b;
                if !self.used[i] {
                    self.used[i] = true;
                    self.queue.push_back(i);
                }
            }
        }
    }

    /// Searches for an augmenting path from `root`; returns its exposed end.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for u in self.g.neighbors(v).iter() {
                if self.base[v] == self.base[u] || self.mate[v] == u {
                    continue;
                }
                if u == root || (self.mate[u] != NONE && self.parent[self.mate[u]] != NONE) {
                    self.contract(v, u);
                } else if self.parent[u] == NONE {
                    self.parent[u] = v;
                    if self.mate[u] == NONE {
                        return Some(u);
                    }
                    let w = self.mate[u];
                    self.used[w] = true;
                    self.queue.push_back(w);
                }
            }
        }
        debug_assert!(n == self.g.n());
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

/// Maximum matching. Exposed roots are tried in increasing id order.
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.n();
    let mut mate = vec![NONE; n];
    // greedy warm start, also in id order
    for u in 0..n {
        if mate[u] == NONE {
            if let Some(v) = g.neighbors(u).iter().find(|&v| mate[v] == NONE) {
                mate[u] = v;
                mate[v] = u;
            }
        }
    }
    let mut search = Blossom::new(g, mate);
    for root in 0..n {
        if search.mate[root] == NONE {
            if let Some(end) = search.find_path(root) {
                search.augment(end);
            }
        }
    }
    Matching::from_mate(search.mate.into_iter().map(|m| (m != NONE).then_some(m)).collect())
}

/// Pairs are edges, no vertex is used twice, and `mate` agrees with `pairs`.
pub fn is_valid_matching(g: &Graph, m: &Matching) -> bool {
    let n = g.n();
    if m.mate.len() != n {
        return false;
    }
    let mut mate = vec![None; n];
    for &(u, v) in &m.pairs {
        if !g.has_edge(u, v) || mate[u].is_some() || mate[v].is_some() {
            return false;
        }
        mate[u] = Some(v);
        mate[v] = Some(u);
    }
    mate == m.mate
}

/// Berge certificate: `false` iff `m` is maximum.
pub fn has_augmenting_path(g: &Graph, m: &Matching) -> bool {
    let mate: Vec<usize> = m.mate.iter().map(|x| x.unwrap_or(NONE)).collect();
    let mut search = Blossom::new(g, mate);
    (0..g.n()).any(|r| search.mate[r] == NONE && search.find_path(r).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn brute_force(g: &Graph) -> usize {
        let edges: Vec<_> = g.edges().collect();
        let mut best = 0;
        for mask in 0u32..(1 << edges.len()) {
            let mut used = 0u64;
            let mut ok = true;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    if used >> u & 1 == 1 || used >> v & 1 == 1 {
                        ok = false;
                        break;
                    }
                    used |= 1 << u | 1 << v;
                }
            }
            if ok {
                best = best.max(mask.count_ones() as usize);
            }
        }
        best
    }

    #[test]
    fn named_examples() {
        assert_eq!(maximum_matching(&path(4).unwrap()).len(), 2);
        assert_eq!(maximum_matching(&cycle(5).unwrap()).len(), 2);
        let p = petersen();
        assert_eq!(brute_force(&p), 5);
        let m = maximum_matching(&p);
        assert_eq!(m.len(), 5);
        assert!(is_valid_matching(&p, &m) && !has_augmenting_path(&p, &m));
    }

    #[test]
    fn augmenting_path_certificates() {
        let k2 = complete(2).unwrap();
        assert!(has_augmenting_path(&k2, &Matching::empty(2)));
        let c6 = cycle(6).unwrap();
        let m = Matching::from_pairs(6, &[(1, 2), (4, 5)]).unwrap();
        assert!(is_valid_matching(&c6, &m));
        assert!(has_augmenting_path(&c6, &m));
        assert!(Matching::from_pairs(3, &[(0, 1), (1, 2)]).is_none());
    }

    #[test]
    fn blossom_needed() {
        // triangle with a pendant on each corner: perfect matching needs a blossom
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(maximum_matching(&g).len(), 3);
        let hs = hoffman_singleton();
        assert_eq!(maximum_matching(&hs).len(), 25);
    }
}
