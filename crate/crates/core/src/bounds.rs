//! Closed-form bounds checked in exact arithmetic, plus family criteria:
//! the Kneser parity test, complements of triangle-free graphs and the
//! Moore-graph case analysis.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::generators::{binomial, hypercube};
use crate::graph::Graph;
use crate::metrics::{diameter, girth, is_connected, is_triangle_free, Distance};
use crate::oddind::{alpha, alpha_od, alpha_square, even_regular_bound, lambda_bound, Budget};
use crate::ops::{complement, square};
use crate::soc::{chi_so_exact, chi_square};

/// A quantity known exactly (`lower == upper`) or only up to an interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub lower: usize,
    pub upper: usize,
}

impl Interval {
    pub fn exact(v: usize) -> Self {
        Interval { lower: v, upper: v }
    }

    pub fn new(lower: usize, upper: usize) -> Self {
        Interval { lower, upper }
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lower)
        } else {
            write!(f, "[{}, {}]", self.lower, self.upper)
        }
    }
}

/// The parameters a report compares against each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Values {
    pub alpha_od: Interval,
    pub chi_so: Interval,
    pub alpha: Interval,
    pub alpha_sq: Interval,
    pub chi_sq: Interval,
}

impl Values {
    /// Runs every solver with `budget` each.
    pub fn compute(g: &Graph, budget: Budget) -> Values {
        let od = alpha_od(g, budget);
        let so = chi_so_exact(g, budget);
        let a = alpha(g, budget);
        let asq = alpha_square(g, budget);
        let csq = chi_square(g, budget);
        Values {
            alpha_od: Interval::new(od.lower, od.upper),
            chi_so: Interval::new(so.lower, so.upper),
            alpha: Interval::new(a.lower, a.upper),
            alpha_sq: Interval::new(asq.lower, asq.upper),
            chi_sq: Interval::new(csq.lower, csq.upper),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "=")]
    Eq,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        })
    }
}

fn ser_ratio<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// One inequality. With interval inputs, `lhs` and `rhs` are the ends that
/// certify the relation, so `satisfied` means proved for the true values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: String,
    #[serde(serialize_with = "ser_ratio")]
    pub lhs: BigRational,
    #[serde(serialize_with = "ser_ratio")]
    pub rhs: BigRational,
    pub relation: Relation,
    pub satisfied: bool,
    pub anchor: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub graph_id: String,
    pub entries: Vec<BoundEntry>,
    /// Bounds that did not apply, with the reason.
    pub omitted: Vec<(String, String)>,
}

impl BoundReport {
    pub fn all_satisfied(&self) -> bool {
        self.entries.iter().all(|e| e.satisfied)
    }

    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

fn int(v: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn frac(p: usize, q: usize) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

struct Builder {
    entries: Vec<BoundEntry>,
    omitted: Vec<(String, String)>,
}

impl Builder {
    fn push(&mut self, name: &str, lhs: BigRational, relation: Relation, rhs: BigRational, anchor: &str) {
        let satisfied = match relation {
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Eq => lhs == rhs,
        };
        self.entries.push(BoundEntry { name: name.into(), lhs, rhs, relation, satisfied, anchor: anchor.into() });
    }

    fn omit(&mut self, name: &str, reason: &str) {
        self.omitted.push((name.into(), reason.into()));
    }
}

/// Whether `g` is `Q_d` for `d = log2 n`, either as labelled by the
/// generator or up to isomorphism for small orders.
fn hypercube_dimension(g: &Graph) -> Option<usize> {
    let n = g.n();
    if n < 2 || !n.is_power_of_two() {
        return None;
    }
    let d = n.trailing_zeros() as usize;
    if g.regular_degree() != Some(d) {
        return None;
    }
    let q = hypercube(d).ok()?;
    if *g == q {
        return Some(d);
    }
    if n <= 64 && crate::canon::is_isomorphic(g, &q).ok()? {
        return Some(d);
    }
    None
}

/// Evaluates every applicable bound against `v`.
pub fn bound_report(g: &Graph, v: &Values, graph_id: &str) -> BoundReport {
    let n = g.n();
    let mut b = Builder { entries: Vec::new(), omitted: Vec::new() };
    let delta = g.max_degree();
    let sq = square(g);
    let delta_sq = sq.max_degree();
    let (a, c) = (v.alpha_od, v.chi_so);

    b.push("chi_so <= chi(G^2)", int(c.upper), Relation::Le, int(v.chi_sq.lower), "chi_so(G) <= chi(G^2)");
    b.push("chi(G^2) <= Delta(G^2)+1", int(v.chi_sq.upper), Relation::Le, int(delta_sq + 1), "greedy colouring of G^2");
    b.push("Delta(G^2)+1 <= Delta^2+1", int(delta_sq + 1), Relation::Le, int(delta * delta + 1), "square degree at most Delta^2");

    if n > 0 {
        b.push("alpha_od >= n/chi_so", int(a.lower), Relation::Ge, frac(n, c.lower.max(1)), "a partition into chi_so odd independent sets");
        b.push("alpha_od >= n/(Delta^2+1)", int(a.lower), Relation::Ge, frac(n, delta * delta + 1), "chain through chi(G^2)");
        b.push("alpha_od*chi_so >= n", int(a.lower * c.lower), Relation::Ge, int(n), "product lower bound");
        b.push("alpha_od*chi_so <= (n+1)^2/4", int(a.upper * c.upper), Relation::Le, frac((n + 1) * (n + 1), 4), "product upper bound");
        let s_lo = a.lower + c.lower;
        b.push("(alpha_od+chi_so)^2 >= 4n", int(s_lo * s_lo), Relation::Ge, int(4 * n), "sum lower bound 2 sqrt(n), squared");
        b.push("alpha_od+chi_so <= n+1", int(a.upper + c.upper), Relation::Le, int(n + 1), "one odd independent class plus singletons");
    }
    b.push("alpha(G^2) <= alpha_od", int(v.alpha_sq.upper), Relation::Le, int(a.lower), "independent sets of G^2 are odd independent");
    b.push("alpha_od <= alpha", int(a.upper), Relation::Le, int(v.alpha.lower), "odd independent sets are independent");

    if n > 0 {
        let caro_wei: BigRational = (0..n).map(|u| frac(1, sq.degree(u) + 1)).fold(BigRational::zero(), |s, x| s + x);
        b.push("alpha_od >= sum 1/(deg_G2+1)", int(a.lower), Relation::Ge, caro_wei.clone(), "Caro-Wei on G^2");
        let d_sq = frac(2 * sq.edge_count(), n);
        let turan_sq = int(n) / (d_sq + BigRational::one());
        b.push("sum 1/(deg_G2+1) >= n/(d(G^2)+1)", caro_wei, Relation::Ge, turan_sq.clone(), "Jensen on G^2");
        let d = frac(2 * g.edge_count(), n);
        let via_delta = int(n) / (d * int(delta) + BigRational::one());
        b.push("n/(d(G^2)+1) >= n/(d Delta+1)", turan_sq, Relation::Ge, via_delta.clone(), "d(G^2) <= d(G) Delta(G)");
        b.push("alpha_od >= n/(d Delta+1)", int(a.lower), Relation::Ge, via_delta, "average degree bound");
    }

    match even_regular_bound(g) {
        Some(ub) => b.push("alpha_od <= even-regular bound", int(a.upper), Relation::Le, int(ub), "floor((d-1)n/(2d-1)), d even"),
        None => b.omit("even-regular bound", "not regular of even degree >= 2"),
    }
    match lambda_bound(g) {
        Some(ub) => b.push("alpha_od <= lambda bound", int(a.upper), Relation::Le, int(ub), "regular, adjacent vertices share >= lambda neighbours"),
        None => b.omit("lambda bound", "not regular or edgeless"),
    }

    match girth5_lemma(g) {
        Some((lo, hi)) => {
            b.push("alpha_od >= Delta - eps(Delta)", int(a.lower), Relation::Ge, int(lo), "girth >= 5: odd part of a neighbourhood");
            b.push("chi_so <= n - (Delta - eps(Delta)) + 1", int(c.upper), Relation::Le, int(hi), "girth >= 5: that part as one class");
        }
        None => b.omit("girth-5 lemma", "girth below 5 or no edges"),
    }

    if delta >= 3 {
        b.push("alpha_od >= n/(Delta^2-1)", int(a.lower), Relation::Ge, frac(n, delta * delta - 1), "Delta >= 3, Moore cases excluded");
    } else {
        b.omit("n/(Delta^2-1)", "Delta < 3");
    }

    match hypercube_dimension(g) {
        Some(d) if d % 2 == 0 => {
            let rhs = (BigRational::one() - frac(1, 2 * d - 1)) * int(1 << (d - 1));
            b.push("alpha_od(Q_d) <= (1-1/(2d-1)) 2^(d-1)", int(a.upper), Relation::Le, rhs, "even d hypercube");
        }
        Some(d) => {
            b.push("alpha_od(Q_d) = 2^(d-1)", int(a.lower), Relation::Eq, int(1 << (d - 1)), "odd d hypercube");
        }
        None => b.omit("hypercube corollary", "not a hypercube"),
    }

    BoundReport { graph_id: graph_id.into(), entries: b.entries, omitted: b.omitted }
}

/// `(α_od lower, χ_so upper)` from an odd part of a maximum neighbourhood,
/// valid when the girth is at least 5.
pub fn girth5_lemma(g: &Graph) -> Option<(usize, usize)> {
    let delta = g.max_degree();
    if delta == 0 || girth(g) < Distance::Finite(5) {
        return None;
    }
    let size = delta - (1 - delta % 2);
    Some((size, g.n() - size + 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KneserCriterion {
    /// `C(n-k-1, k-1)` is odd, i.e. `α_od = α` is predicted.
    pub parity_odd: bool,
    /// `Σ_{t=1..k} C(k,t) C(n-k-1,k-1-t) = C(n-1,k-1) - C(n-k-1,k-1)` holds exactly.
    pub equivalent_sum_check: bool,
    /// Parity of the sum side disagrees with `C(n-1,k-1)`, the restated criterion.
    pub sum_parity_predicts: bool,
}

/// Parity of `C(a, b)` by the binary digit test: odd iff `b` is a bitwise subset of `a`.
pub fn binomial_is_odd(a: u64, b: u64) -> bool {
    b <= a && b & !a == 0
}

fn binom_signed(a: i64, b: i64) -> u128 {
    if a < 0 || b < 0 || b > a {
        0
    } else {
        binomial(a as u64, b as u64)
    }
}

pub fn kneser_alpha_criterion(n: usize, k: usize) -> Result<KneserCriterion> {
    if k < 2 || n < 2 * k || n > 60 {
        return Err(Error::BadParam(format!("kneser criterion needs k >= 2 and 2k <= n <= 60, got ({n}, {k})")));
    }
    let (n, k) = (n as i64, k as i64);
    let parity_odd = binomial_is_odd((n - k - 1) as u64, (k - 1) as u64);
    let sum: u128 = (1..=k).map(|t| binom_signed(k, t) * binom_signed(n - k - 1, k - 1 - t)).sum();
    let total = binom_signed(n - 1, k - 1);
    let rest = binom_signed(n - k - 1, k - 1);
    let equivalent_sum_check = sum + rest == total;
    let sum_parity_predicts = (total % 2) != (sum % 2);
    Ok(KneserCriterion { parity_odd, equivalent_sum_check, sum_parity_predicts })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoTriangleFreeCase {
    /// At most one vertex.
    Trivial,
    /// `diam(g) >= 4`, including disconnected `g`.
    DiamAtLeast4,
    Diam3Comp2,
    Diam3Comp3,
    Diam2Comp2,
    /// `g` has diameter at most 2 and its complement is disconnected, hence two cliques.
    ComplementDisconnected,
    /// A combination the case analysis rules out.
    Unexpected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoTriangleFreePrediction {
    pub alpha_od_comp: Option<usize>,
    pub alpha_sq_comp: Option<usize>,
    pub chi_so_comp: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoTriangleFreeClass {
    pub diam_g: Distance,
    pub diam_comp: Distance,
    pub case: CoTriangleFreeCase,
    pub predicted: CoTriangleFreePrediction,
}

/// Predicts `α_od`, `α(·²)` and `χ_so` of the complement of a triangle-free graph from the two diameters.
pub fn classify_cotrianglefree(g: &Graph) -> Result<CoTriangleFreeClass> {
    if !is_triangle_free(g) {
        return Err(Error::NotTriangleFree);
    }
    let n = g.n();
    let comp = complement(g);
    let diam_g = diameter(g);
    let diam_comp = diameter(&comp);
    let none = CoTriangleFreePrediction { alpha_od_comp: None, alpha_sq_comp: None, chi_so_comp: None };
    let one = CoTriangleFreePrediction { alpha_od_comp: Some(1), alpha_sq_comp: Some(1), chi_so_comp: Some(n) };
    let (case, predicted) = if n <= 1 {
        (CoTriangleFreeCase::Trivial, CoTriangleFreePrediction { chi_so_comp: Some(n), ..one })
    } else if diam_g >= Distance::Finite(4) {
        (CoTriangleFreeCase::DiamAtLeast4, one)
    } else if !is_connected(&comp) {
        // two cliques: one vertex from each is odd independent
        let big = crate::metrics::components(&comp).iter().map(|c| c.len()).max().unwrap_or(0);
        let p = CoTriangleFreePrediction { alpha_od_comp: Some(2), alpha_sq_comp: Some(2), chi_so_comp: Some(big) };
        (CoTriangleFreeCase::ComplementDisconnected, p)
    } else {
        match (diam_g.finite(), diam_comp.finite()) {
            (Some(3), Some(2)) => (CoTriangleFreeCase::Diam3Comp2, one),
            (Some(3), Some(3)) => {
                let p = CoTriangleFreePrediction { alpha_od_comp: Some(2), alpha_sq_comp: Some(2), chi_so_comp: None };
                (CoTriangleFreeCase::Diam3Comp3, p)
            }
            (Some(2), Some(2)) => (CoTriangleFreeCase::Diam2Comp2, one),
            _ => (CoTriangleFreeCase::Unexpected, none),
        }
    };
    Ok(CoTriangleFreeClass { diam_g, diam_comp, case, predicted })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MooreRow {
    pub name: String,
    pub n: usize,
    pub delta: usize,
    pub eps: usize,
    pub lemma_alpha_od_lower: usize,
    pub lemma_chi_so_upper: usize,
    pub chi_so: Interval,
    /// `χ_so < Δ² + 1`, so the graph does not attain the chain's upper end.
    pub excluded: bool,
    /// Whether the row was computed on a constructed graph.
    pub constructed: bool,
}

/// The Moore-graph case ledger: `C_5`, Petersen, Hoffman–Singleton and the
/// hypothetical `Δ = 57` graph (lemma arithmetic only).
pub fn moore_exclusion_check(budget: Budget) -> Vec<MooreRow> {
    use crate::generators::{cycle, hoffman_singleton, petersen};
    let mut rows = Vec::new();
    let graphs = [
        ("C_5", cycle(5).expect("valid")),
        ("Petersen", petersen()),
        ("Hoffman-Singleton", hoffman_singleton()),
    ];
    for (name, g) in graphs {
        let delta = g.max_degree();
        let (lo, hi) = girth5_lemma(&g).expect("Moore graphs have girth 5");
        let r = chi_so_exact(&g, budget);
        let mut chi = Interval::new(r.lower, r.upper);
        if name == "Hoffman-Singleton" {
            let scheme = crate::soc::hs_20_coloring();
            if crate::soc::is_strong_odd_coloring(&g, &scheme) {
                chi.upper = chi.upper.min(scheme.k());
            }
        }
        rows.push(MooreRow {
            name: name.into(),
            n: g.n(),
            delta,
            eps: 1 - delta % 2,
            lemma_alpha_od_lower: lo,
            lemma_chi_so_upper: hi,
            chi_so: chi,
            excluded: chi.upper < delta * delta + 1,
            constructed: true,
        });
    }
    let (delta, n) = (57, 57 * 57 + 1);
    let hi = n - delta + 1;
    rows.push(MooreRow {
        name: "Moore Delta=57".into(),
        n,
        delta,
        eps: 0,
        lemma_alpha_od_lower: delta,
        lemma_chi_so_upper: hi,
        chi_so: Interval::new(1, hi),
        excluded: hi < delta * delta + 1,
        constructed: false,
    });
    rows
}

/// Integer check that no odd independent set of size `k` exists in the
/// Hoffman–Singleton graph for `11 <= k <= 14`: `12k - 75 > C(k, 2)`.
pub fn hs_counting_table() -> Vec<(usize, usize, usize, bool)> {
    (11..=14)
        .map(|k| {
            let lhs = 12 * k - 75;
            let rhs = k * (k - 1) / 2;
            (k, lhs, rhs, lhs > rhs)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn vals(a: usize, c: usize, al: usize, asq: usize, csq: usize) -> Values {
        Values {
            alpha_od: Interval::exact(a),
            chi_so: Interval::exact(c),
            alpha: Interval::exact(al),
            alpha_sq: Interval::exact(asq),
            chi_sq: Interval::exact(csq),
        }
    }

    #[test]
    fn petersen_report() {
        let r = bound_report(&petersen(), &vals(3, 6, 4, 1, 10), "petersen");
        assert!(r.all_satisfied(), "{r:#?}");
        let e = r.entry("alpha_od >= n/(Delta^2-1)").unwrap();
        assert_eq!(e.rhs, frac(10, 8));
    }

    #[test]
    fn product_equalities() {
        let c5 = cycle(5).unwrap();
        let r = bound_report(&c5, &vals(1, 5, 2, 1, 5), "C5");
        let e = r.entry("alpha_od*chi_so >= n").unwrap();
        assert_eq!(e.lhs, e.rhs);
        // K_5 plus four isolated vertices: (n+1)^2/4 = 25
        let g = crate::ops::disjoint_union(&complete(5).unwrap(), &empty(4).unwrap()).unwrap();
        let r = bound_report(&g, &vals(5, 5, 5, 5, 5), "K5+4K1");
        let e = r.entry("alpha_od*chi_so <= (n+1)^2/4").unwrap();
        assert_eq!(e.lhs, e.rhs);
        assert!(r.all_satisfied());
    }

    #[test]
    fn violation_is_reported() {
        let r = bound_report(&petersen(), &vals(5, 6, 4, 1, 10), "bad");
        assert!(!r.entry("alpha_od <= alpha").unwrap().satisfied);
    }

    #[test]
    fn cube_corollary() {
        let q6 = hypercube(6).unwrap();
        let v = Values {
            alpha_od: Interval::new(24, 29),
            chi_so: Interval::exact(4),
            alpha: Interval::exact(32),
            alpha_sq: Interval::new(1, 24),
            chi_sq: Interval::new(4, 64),
        };
        let r = bound_report(&q6, &v, "Q6");
        assert_eq!(r.entry("alpha_od(Q_d) <= (1-1/(2d-1)) 2^(d-1)").unwrap().rhs, frac(320, 11));
        assert_eq!(r.entry("alpha_od <= even-regular bound").unwrap().rhs, int(29));
    }

    #[test]
    fn kneser_examples() {
        assert!(!kneser_alpha_criterion(5, 2).unwrap().parity_odd);
        assert!(kneser_alpha_criterion(6, 2).unwrap().parity_odd);
        assert!(kneser_alpha_criterion(7, 3).unwrap().parity_odd);
        assert!(kneser_alpha_criterion(3, 2).is_err());
    }

    #[test]
    fn cotrianglefree_examples() {
        let g = trianglefree_diam(&TriangleFreeKind::SubdividedMatching { n: 3, m: 2, t: 1 }).unwrap();
        let c = classify_cotrianglefree(&g).unwrap();
        assert_eq!(c.case, CoTriangleFreeCase::Diam2Comp2);
        assert_eq!(c.predicted.alpha_od_comp, Some(1));
        let k32e = trianglefree_diam(&TriangleFreeKind::MatchingDeleted { n: 3, m: 2, t: 1 }).unwrap();
        assert_eq!(classify_cotrianglefree(&k32e).unwrap().case, CoTriangleFreeCase::Diam3Comp3);
        let c5k2 = trianglefree_diam(&TriangleFreeKind::BoxK2(Box::new(cycle(5).unwrap()))).unwrap();
        assert_eq!(classify_cotrianglefree(&c5k2).unwrap().case, CoTriangleFreeCase::Diam3Comp2);
        assert_eq!(classify_cotrianglefree(&complete(3).unwrap()), Err(Error::NotTriangleFree));
    }

    #[test]
    fn moore_lemma_values() {
        assert_eq!(girth5_lemma(&cycle(5).unwrap()), Some((1, 5)));
        assert_eq!(girth5_lemma(&petersen()), Some((3, 8)));
        assert_eq!(girth5_lemma(&hoffman_singleton()), Some((7, 44)));
        assert!(hs_counting_table().iter().all(|r| r.3));
    }
}
