//! Bit-parallel branch and bound for maximum independent sets of a conflict
//! graph, optionally restricted to odd independent sets of a host graph.
//!
//! Candidates are coloured greedily into classes of pairwise conflicting
//! vertices; a branch is cut when the current set plus the number of classes
//! cannot beat the incumbent. Parity is not hereditary, so it is tracked
//! incrementally and checked at every node that would improve the incumbent.
//! A subtree is dropped once some outside vertex sees the current set an even
//! number of times and has no neighbour left among the candidates.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::par;

/// Wall-clock allowance for one solve. `None` means unlimited.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub Option<Duration>);

impl Budget {
    pub const UNLIMITED: Budget = Budget(None);

    pub fn secs(s: u64) -> Budget {
        Budget(Some(Duration::from_secs(s)))
    }

    /// The default: 60 s, or `ODDIND_BUDGET_SECS` when set.
    pub fn from_env() -> Budget {
        std::env::var("ODDIND_BUDGET_SECS")
            .ok()
            .and_then(|s| s.parse().ok())
            .map_or(Budget::secs(60), Budget::secs)
    }

    pub(crate) fn deadline(self, start: Instant) -> Option<Instant> {
        self.0.map(|d| start + d)
    }

    /// A fraction of this budget, for sub-solves.
    pub fn scaled(self, num: u32, den: u32) -> Budget {
        Budget(self.0.map(|d| d * num / den))
    }

    /// What is left of this budget after `elapsed`.
    pub fn remaining(self, elapsed: Duration) -> Budget {
        Budget(self.0.map(|d| d.saturating_sub(elapsed)))
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::from_env()
    }
}

pub(crate) struct Outcome {
    pub best: Vec<usize>,
    pub completed: bool,
    pub nodes: u64,
}

/// Search over independent sets of the conflict graph given by `conflict`
/// rows (which must contain the host adjacency when `parity` is set).
pub(crate) struct Engine<'a> {
    host: &'a Graph,
    parity: bool,
    /// new index -> original vertex
    order: Vec<usize>,
    compat: Vec<VertexSet>,
    nbr: Vec<VertexSet>,
    upper: usize,
    deadline: Option<Instant>,
    best_len: AtomicUsize,
    best: Mutex<Vec<usize>>,
    aborted: AtomicBool,
    nodes: AtomicU64,
}

struct Local {
    r: Vec<usize>,
    counts: Vec<u32>,
    bad: VertexSet,
    nodes: u64,
}

impl<'a> Engine<'a> {
    /// `order` lists every vertex once, most promising first.
    pub fn new(
        host: &'a Graph,
        conflict: &[VertexSet],
        parity: bool,
        order: Vec<usize>,
        upper: usize,
        budget: Budget,
    ) -> Self {
        let n = host.n();
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let remap = |s: &VertexSet| {
            let mut out = VertexSet::new(n);
            for u in s.iter() {
                out.insert(pos[u]);
            }
            out
        };
        let compat = order
            .iter()
            .map(|&v| {
                let mut c = remap(&conflict[v]).complement();
                c.remove(pos[v]);
                c
            })
            .collect();
        let nbr = order.iter().map(|&v| remap(host.neighbors(v))).collect();
        Engine {
            host,
            parity,
            order,
            compat,
            nbr,
            upper,
            deadline: budget.deadline(Instant::now()),
            best_len: AtomicUsize::new(0),
            best: Mutex::new(Vec::new()),
            aborted: AtomicBool::new(false),
            nodes: AtomicU64::new(0),
        }
    }

    /// Seeds the incumbent with a known feasible set (original ids).
    pub fn seed(&self, set: &[usize]) {
        let mut best = self.best.lock().expect("poisoned");
        if set.len() > self.best_len.load(Ordering::SeqCst) {
            *best = set.to_vec();
            self.best_len.store(set.len(), Ordering::SeqCst);
        }
    }

    fn record(&self, r: &[usize]) {
        let mut best = self.best.lock().expect("poisoned");
        if r.len() > self.best_len.load(Ordering::SeqCst) {
            *best = r.iter().map(|&i| self.order[i]).collect();
            self.best_len.store(r.len(), Ordering::SeqCst);
        }
    }

    fn local(&self) -> Local {
        let n = self.host.n();
        Local { r: Vec::new(), counts: vec![0; n], bad: VertexSet::new(n), nodes: 0 }
    }

    fn push(&self, st: &mut Local, v: usize) {
        st.r.push(v);
        if self.parity {
            for u in self.nbr[v].iter() {
                st.counts[u] += 1;
                if st.counts[u].is_multiple_of(2) {
                    st.bad.insert(u);
                } else {
                    st.bad.remove(u);
                }
            }
        }
    }

    fn pop(&self, st: &mut Local, v: usize) {
        st.r.pop();
        if self.parity {
            for u in self.nbr[v].iter() {
                st.counts[u] -= 1;
                if st.counts[u] > 0 && st.counts[u].is_multiple_of(2) {
                    st.bad.insert(u);
                } else {
                    st.bad.remove(u);
                }
            }
        }
    }

    fn dead(&self, st: &Local, p: &VertexSet) -> bool {
        self.parity && st.bad.iter().any(|u| !self.nbr[u].intersects(p))
    }

    fn feasible(&self, st: &Local) -> bool {
        !self.parity || st.bad.is_empty()
    }

    /// Greedy partition of `p` into classes of pairwise conflicting vertices,
    /// returned in class order with the class number of each vertex.
    fn classes(&self, p: &VertexSet) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(p.len());
        let mut rest = p.clone();
        let mut class = 0;
        while !rest.is_empty() {
            class += 1;
            let mut q = rest.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.difference_with(&self.compat[v]);
                rest.remove(v);
                out.push((v, class));
            }
        }
        out
    }

    fn tick(&self, st: &mut Local) -> bool {
        st.nodes += 1;
        if st.nodes.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.aborted.store(true, Ordering::SeqCst);
                }
            }
        }
        !self.aborted.load(Ordering::Relaxed)
    }

    fn done(&self) -> bool {
        self.best_len.load(Ordering::Relaxed) >= self.upper || self.aborted.load(Ordering::Relaxed)
    }

    fn expand(&self, st: &mut Local, mut p: VertexSet) {
        if !self.tick(st) {
            return;
        }
        let list = self.classes(&p);
        for &(v, class) in list.iter().rev() {
            if self.done() || st.r.len() + class <= self.best_len.load(Ordering::Relaxed) {
                return;
            }
            p.remove(v);
            self.branch(st, v, &p);
        }
    }

    /// Adds `v` to the current set with remaining candidates `p` (before
    /// restriction to `v`'s compatible vertices) and explores below it.
    fn branch(&self, st: &mut Local, v: usize, p: &VertexSet) {
        self.push(st, v);
        let np = p.intersection(&self.compat[v]);
        if st.r.len() > self.best_len.load(Ordering::Relaxed) && self.feasible(st) {
            self.record(&st.r);
        }
        if !np.is_empty() && !self.dead(st, &np) {
            self.expand(st, np);
        }
        self.pop(st, v);
    }

    pub fn run(self) -> Outcome {
        let n = self.host.n();
        let all = VertexSet::full(n);
        if n > 0 && !self.done() {
            let list = self.classes(&all);
            // candidates of root branch j: vertices listed before j
            let mut prefix = Vec::with_capacity(list.len());
            let mut acc = VertexSet::new(n);
            for &(v, _) in &list {
                prefix.push(acc.clone());
                acc.insert(v);
            }
            let len = list.len();
            let nodes = par::map_range(len, |k| {
                let j = len - 1 - k;
                let (v, class) = list[j];
                if self.done() || class <= self.best_len.load(Ordering::Relaxed) {
                    return 0;
                }
                let mut st = self.local();
                self.branch(&mut st, v, &prefix[j]);
                st.nodes
            });
            self.nodes.fetch_add(nodes.iter().sum::<u64>(), Ordering::SeqCst);
        }
        let completed = !self.aborted.load(Ordering::SeqCst);
        let best = self.best.into_inner().expect("poisoned");
        Outcome { best, completed, nodes: self.nodes.into_inner() }
    }
}

/// Visits every odd independent set of `g` with at least `min_size`
/// vertices (no bounding beyond size and the pair lemma). `visit` returns
/// `false` to stop early.
pub fn for_each_ois<F: FnMut(&VertexSet) -> bool>(g: &Graph, min_size: usize, mut visit: F) {
    let n = g.n();
    let excl = super::excluded_rows(g);
    let compat: Vec<VertexSet> = (0..n)
        .map(|v| {
            let mut c = g.neighbors(v).union(&excl[v]).complement();
            c.remove(v);
            c
        })
        .collect();
    let mut counts = vec![0u32; n];
    let mut r = VertexSet::new(n);
    let mut size = 0;
    if min_size == 0 && !visit(&r) {
        return;
    }

    #[allow(clippy::too_many_arguments)]
    fn rec<F: FnMut(&VertexSet) -> bool>(
        g: &Graph,
        compat: &[VertexSet],
        counts: &mut [u32],
        r: &mut VertexSet,
        size: &mut usize,
        p: VertexSet,
        min_size: usize,
        visit: &mut F,
    ) -> bool {
        let mut p = p;
        while let Some(v) = p.first() {
            p.remove(v);
            if *size + 1 + p.len() < min_size {
                return true;
            }
            r.insert(v);
            *size += 1;
            for u in g.neighbors(v).iter() {
                counts[u] += 1;
            }
            let np = p.intersection(&compat[v]);
            let ok = (0..counts.len()).all(|u| counts[u] % 2 == 1 || counts[u] == 0 || r.contains(u));
            let dead = (0..counts.len()).any(|u| {
                counts[u] > 0 && counts[u].is_multiple_of(2) && !g.neighbors(u).intersects(&np)
            });
            let mut keep_going = true;
            if ok && *size >= min_size {
                keep_going = visit(r);
            }
            if keep_going && !dead && !np.is_empty() {
                keep_going = rec(g, compat, counts, r, size, np, min_size, visit);
            }
            for u in g.neighbors(v).iter() {
                counts[u] -= 1;
            }
            *size -= 1;
            r.remove(v);
            if !keep_going {
                return false;
            }
        }
        true
    }

    rec(g, &compat, &mut counts, &mut r, &mut size, VertexSet::full(n), min_size, &mut visit);
}

/// All odd independent sets with at least `min_size` vertices, in discovery order.
pub fn enumerate_ois(g: &Graph, min_size: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for_each_ois(g, min_size, |s| {
        out.push(s.clone());
        true
    });
    out
}
