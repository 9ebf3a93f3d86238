//! Solver output against brute-force oracles written here, plus a graph6
//! corpus whose expected values were computed independently with networkx
//! (`tests/data/atlas6.*`: 100 atlas graphs on at most 6 vertices).

use oddind::canon::{enumerate_up_to, Class};
use oddind::generators::*;
use oddind::io::{parse_graph6_lines, to_graph6};
use oddind::matching::maximum_matching;
use oddind::metrics::{diameter, is_connected, is_triangle_free, Distance};
use oddind::oddind::*;
use oddind::soc::*;
use oddind::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn budget() -> Budget {
    Budget::secs(60)
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u64, |m, u| m | 1 << u)).collect()
}

fn oracle_is_ois(rows: &[u64], s: u64) -> bool {
    (0..rows.len()).all(|v| {
        let c = (rows[v] & s).count_ones();
        if s >> v & 1 == 1 {
            c == 0
        } else {
            c == 0 || c % 2 == 1
        }
    })
}

/// `(α_od, α, α(G²))` by scanning every subset.
fn oracle_alphas(g: &Graph) -> (usize, usize, usize) {
    let rows = masks(g);
    let n = g.n();
    let (mut od, mut a, mut a2) = (0, 0, 0);
    for s in 0u64..(1 << n) {
        let independent = (0..n).all(|v| s >> v & 1 == 0 || rows[v] & s == 0);
        if !independent {
            continue;
        }
        let k = s.count_ones() as usize;
        a = a.max(k);
        if (0..n).all(|v| s >> v & 1 == 1 || (rows[v] & s).count_ones() <= 1) {
            a2 = a2.max(k);
        }
        if oracle_is_ois(&rows, s) {
            od = od.max(k);
        }
    }
    (od, a, a2)
}

/// Minimum number of classes over all set partitions where `ok` accepts each class.
fn oracle_min_partition(n: usize, ok: &dyn Fn(u64) -> bool) -> usize {
    fn rec(v: usize, n: usize, classes: &mut Vec<u64>, best: &mut usize, ok: &dyn Fn(u64) -> bool) {
        if classes.len() >= *best {
            return;
        }
        if v == n {
            if classes.iter().all(|&c| ok(c)) {
                *best = classes.len();
            }
            return;
        }
        for i in 0..classes.len() {
            classes[i] |= 1 << v;
            rec(v + 1, n, classes, best, ok);
            classes[i] &= !(1 << v);
        }
        classes.push(1 << v);
        rec(v + 1, n, classes, best, ok);
        classes.pop();
    }
    let mut best = n + 1;
    rec(0, n, &mut Vec::new(), &mut best, ok);
    best.min(n)
}

fn oracle_chi_so(g: &Graph) -> usize {
    let rows = masks(g);
    oracle_min_partition(g.n(), &|c| oracle_is_ois(&rows, c))
}

fn oracle_chi_square(g: &Graph) -> usize {
    let rows = masks(g);
    // a class is independent in G² iff independent and no vertex sees it twice
    oracle_min_partition(g.n(), &|c| (0..rows.len()).all(|v| {
        let k = (rows[v] & c).count_ones();
        k <= 1 && (c >> v & 1 == 0 || k == 0)
    }))
}

#[test]
fn all_graphs_up_to_six_against_oracles() {
    for level in enumerate_up_to(6, Class::All).unwrap() {
        for g in level {
            let (od, a, a2) = oracle_alphas(&g);
            let r = alpha_od(&g, budget());
            assert!(r.exact && r.value == od, "{g:?}");
            assert!(is_odd_independent(&g, &r.witness));
            assert_eq!(alpha(&g, budget()).value, a);
            assert_eq!(alpha_square(&g, budget()).value, a2);
            let c = chi_so_exact(&g, budget());
            assert!(c.exact && c.chi == oracle_chi_so(&g), "{g:?}");
            assert_eq!(chi_square(&g, budget()).chi, oracle_chi_square(&g), "{g:?}");
        }
    }
}

#[test]
fn random_graphs_up_to_sixteen() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let n = rng.random_range(8..=16);
        let p = rng.random_range(0.1..0.6);
        let g = oddind::random::gnp(n, p, &mut rng).unwrap();
        let (od, a, a2) = oracle_alphas(&g);
        assert_eq!(alpha_od(&g, budget()).value, od, "{g:?}");
        assert_eq!(alpha(&g, budget()).value, a);
        assert_eq!(alpha_square(&g, budget()).value, a2);
    }
}

#[test]
fn kneser_7_2_by_subset_scan() {
    let g = kneser(7, 2).unwrap();
    let (od, a, _) = oracle_alphas(&g);
    assert_eq!((od, a), (3, 6));
    assert_eq!(alpha_od(&g, budget()).value, 3);
}

#[test]
fn kneser_6_2_matches_ekr_value() {
    let g = kneser(6, 2).unwrap();
    let r = alpha_od(&g, budget());
    assert_eq!((r.value, r.exact), (5, true));
    assert_eq!(alpha(&g, budget()).value, 5);
}

#[test]
fn chi_so_small_named_graphs() {
    for g in [cycle(5).unwrap(), path(5).unwrap(), half_graph(3).unwrap(), complete_subdivision(3).unwrap()] {
        assert_eq!(chi_so_exact(&g, budget()).chi, oracle_chi_so(&g));
    }
}

#[test]
fn claw_free_chi_so_equals_chi_square() {
    for level in enumerate_up_to(7, Class::All).unwrap() {
        for g in level.iter().filter(|g| oddind::metrics::is_claw_free(g)) {
            assert_eq!(chi_so_exact(g, budget()).chi, chi_square(g, budget()).chi, "{g:?}");
        }
    }
}

#[test]
fn atlas_corpus() {
    let text = include_str!("data/atlas6.g6");
    let expected: Vec<serde_json::Value> = serde_json::from_str(include_str!("data/atlas6.json")).unwrap();
    let graphs = parse_graph6_lines(text).unwrap();
    assert_eq!(graphs.len(), 100);
    for ((g, e), line) in graphs.iter().zip(&expected).zip(text.lines()) {
        let get = |k: &str| e[k].as_u64().unwrap() as usize;
        assert_eq!(to_graph6(g), line);
        assert_eq!(g.n(), get("n"));
        assert_eq!(g.edge_count(), get("m"));
        assert_eq!(is_connected(g), e["connected"].as_bool().unwrap());
        assert_eq!(is_triangle_free(g), e["triangle_free"].as_bool().unwrap());
        assert_eq!(alpha(g, budget()).value, get("alpha"));
        assert_eq!(alpha_square(g, budget()).value, get("alpha_sq"));
        assert_eq!(alpha_od(g, budget()).value, get("alpha_od"), "{line}");
        assert_eq!(maximum_matching(g).len(), get("matching"));
        if let Some(d) = e["diameter"].as_u64() {
            assert_eq!(diameter(g), Distance::Finite(d as usize));
        }
    }
}
