use num_rational::Ratio;
use oddind::bounds::{bound_report, classify_cotrianglefree, kneser_alpha_criterion, Interval, Values};
use oddind::canon::{canonical_key, is_isomorphic};
use oddind::io::{parse_dimacs, parse_graph6, to_dimacs, to_graph6};
use oddind::matching::{has_augmenting_path, is_valid_matching, maximum_matching};
use oddind::metrics::{is_claw_free, is_triangle_free};
use oddind::oddind::*;
use oddind::ops::{complement, line_graph, square};
use oddind::soc::*;
use oddind::{Graph, GraphBuilder};
use proptest::prelude::*;

fn b() -> Budget {
    Budget::secs(30)
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut gb = GraphBuilder::new(n).unwrap();
            let mut i = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[i] {
                        gb.add_edge(u, v);
                    }
                    i += 1;
                }
            }
            gb.build()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn sandwich_and_witnesses(g in graph(10)) {
        let od = alpha_od(&g, b());
        let a = alpha(&g, b());
        let a2 = alpha_square(&g, b());
        prop_assert!(od.exact && a.exact && a2.exact);
        prop_assert!(a2.value <= od.value && od.value <= a.value);
        prop_assert!(is_odd_independent(&g, &od.witness));
        prop_assert_eq!(od.witness.len(), od.value);
        prop_assert!(is_independent(&g, &a.witness));
        prop_assert!(is_independent(&square(&g), &a2.witness));
    }

    #[test]
    fn pair_lemma_excludes_only_impossible_pairs(g in graph(8)) {
        let excl = excluded_rows(&g);
        for s in enumerate_ois(&g, 2) {
            for x in s.iter() {
                prop_assert!(!excl[x].intersects(&s));
            }
        }
    }

    #[test]
    fn chain_product_sum(g in graph(8)) {
        let so = chi_so_exact(&g, b());
        let sq = chi_square(&g, b());
        prop_assert!(so.exact && sq.exact);
        prop_assert!(is_strong_odd_coloring(&g, &so.coloring));
        prop_assert!(is_strong_odd_coloring(&g, &sq.coloring));
        let d = g.max_degree();
        prop_assert!(so.chi <= sq.chi && sq.chi <= square(&g).max_degree() + 1);
        prop_assert!(square(&g).max_degree() <= d * d);
        let od = alpha_od(&g, b()).value;
        let n = g.n();
        prop_assert!(n <= od * so.chi && 4 * od * so.chi <= (n + 1) * (n + 1));
        prop_assert!((od + so.chi) * (od + so.chi) >= 4 * n && od + so.chi <= n + 1);
    }

    #[test]
    fn bound_report_holds_with_exact_values(g in graph(8)) {
        let v = Values::compute(&g, b());
        prop_assert!(v.alpha_od.is_exact() && v.chi_so.is_exact());
        let r = bound_report(&g, &v, "prop");
        let failed: Vec<_> = r.entries.iter().filter(|e| !e.satisfied).map(|e| e.name.clone()).collect();
        prop_assert!(failed.is_empty(), "{:?}", failed);
    }

    #[test]
    fn upper_from_partition_is_sound(g in graph(10)) {
        let (k, c) = chi_so_upper_from_partition(&g);
        prop_assert!(is_strong_odd_coloring(&g, &c));
        prop_assert!(k >= chi_so_exact(&g, b()).chi);
        prop_assert!(k <= g.n() + 1 - greedy_independent(&square(&g)).len());
    }

    #[test]
    fn alpha2_matches_exact(g in graph(9)) {
        let h = complement(&g);
        match chi_so_alpha2(&h) {
            Ok(r) => {
                prop_assert!(is_triangle_free(&g));
                prop_assert_eq!(r.chi, chi_so_exact(&h, b()).chi);
                prop_assert!(is_strong_odd_coloring(&h, &r.coloring));
            }
            Err(_) => prop_assert!(alpha(&h, b()).value >= 3),
        }
    }

    #[test]
    fn cotrianglefree_predictions(g in graph(9)) {
        prop_assume!(is_triangle_free(&g));
        let c = classify_cotrianglefree(&g).unwrap();
        let h = complement(&g);
        if let Some(v) = c.predicted.alpha_od_comp {
            prop_assert_eq!(alpha_od(&h, b()).value, v);
        }
        if let Some(v) = c.predicted.chi_so_comp {
            prop_assert_eq!(chi_so_exact(&h, b()).chi, v);
        }
    }

    #[test]
    fn matching_is_maximum(g in graph(14)) {
        let m = maximum_matching(&g);
        prop_assert!(is_valid_matching(&g, &m));
        prop_assert!(!has_augmenting_path(&g, &m));
    }

    #[test]
    fn claw_free_fast_path(base in graph(7)) {
        prop_assume!(base.edge_count() > 0);
        let g = line_graph(&base).unwrap();
        prop_assert!(is_claw_free(&g));
        prop_assert_eq!(alpha_od_clawfree(&g, b()).unwrap().value, alpha_od(&g, b()).value);
    }

    #[test]
    fn formats_round_trip(g in graph(20)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_dimacs(&to_dimacs(&g)).unwrap(), g);
    }

    #[test]
    fn invariants_under_relabelling((g, perm) in graph(9).prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) })) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_key(&g).unwrap(), canonical_key(&h).unwrap());
        prop_assert!(is_isomorphic(&g, &h).unwrap());
        prop_assert_eq!(alpha_od(&g, b()).value, alpha_od(&h, b()).value);
        prop_assert_eq!(chi_so_exact(&g, b()).chi, chi_so_exact(&h, b()).chi);
    }

    #[test]
    fn complement_is_involution(g in graph(12)) {
        prop_assert_eq!(complement(&complement(&g)), g.clone());
        let sq = square(&g);
        prop_assert!(g.edges().all(|(u, v)| sq.has_edge(u, v)));
    }

    #[test]
    fn degree_bound_on_random_graphs(g in graph(12)) {
        let d = g.max_degree();
        prop_assume!(d >= 3);
        let od = alpha_od(&g, b()).value;
        prop_assert!(Ratio::new(g.n(), d * d - 1) <= Ratio::from_integer(od));
    }
}

#[test]
fn kneser_checks_agree_everywhere() {
    for k in 2..=6 {
        for n in 2 * k..=20 {
            let c = kneser_alpha_criterion(n, k).unwrap();
            assert!(c.equivalent_sum_check, "({n},{k})");
            assert_eq!(c.parity_odd, c.sum_parity_predicts, "({n},{k})");
        }
    }
}

#[test]
fn sequential_and_parallel_agree() {
    let graphs = [oddind::generators::hypercube(5).unwrap(), oddind::generators::kneser(7, 2).unwrap()];
    for g in &graphs {
        oddind::par::set_sequential(true);
        let s = alpha_od(g, b()).value;
        oddind::par::set_sequential(false);
        let p = alpha_od(g, b()).value;
        assert_eq!(s, p);
    }
}

#[test]
fn equality_witnesses_for_product_and_sum() {
    // t K_r: alpha_od = t, chi_so = r
    let tk = oddind::ops::t_copies(&oddind::generators::complete(3).unwrap(), 3).unwrap();
    assert_eq!((alpha_od(&tk, b()).value, chi_so_exact(&tk, b()).chi), (3, 3));
    // K_r plus t isolated vertices: alpha_od = t + 1, chi_so = r
    let g = oddind::ops::disjoint_union(&oddind::generators::complete(5).unwrap(), &oddind::generators::empty(4).unwrap()).unwrap();
    let (od, so) = (alpha_od(&g, b()).value, chi_so_exact(&g, b()).chi);
    assert_eq!((od, so), (5, 5));
    assert_eq!(4 * od * so, 10 * 10);
    let v = Values {
        alpha_od: Interval::exact(od),
        chi_so: Interval::exact(so),
        alpha: Interval::exact(5),
        alpha_sq: Interval::exact(5),
        chi_sq: Interval::exact(5),
    };
    assert!(bound_report(&g, &v, "K5+4K1").all_satisfied());
}
