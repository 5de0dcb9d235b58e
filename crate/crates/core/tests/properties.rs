mod oracle;

use ordtile_core::colouring::{chi_lt, enumerate_interval_colourings};
use ordtile_core::critical::{chi_star_exact, colouring_statistics, SearchEffort};
use ordtile_core::multipartite::{crit_chrom, distinct_orderings};
use ordtile_core::partial::f_profile;
use ordtile_core::rational::{from_usize, int, ratio};
use ordtile_core::structure::{find_local_barrier, fixed_prefix_indices, is_flexible};
use ordtile_core::thresholds::{classify, PerfectCase};
use ordtile_core::tiling::{max_tiling, verify_tiling};
use ordtile_core::{Budget, CompleteMultipartite, OrderedGraph, TilingStatus};
use proptest::prelude::*;

fn graph(max_h: usize) -> impl Strategy<Value = OrderedGraph> {
    (2..=max_h).prop_flat_map(|h| {
        let pairs = h * (h - 1) / 2;
        (Just(h), 0..1u64 << pairs).prop_map(|(h, m)| OrderedGraph::from_edge_mask(h, m).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn chi_matches_oracle_at_seven(g in graph(7)) {
        prop_assert_eq!(chi_lt(&g), oracle::chi_lt(&g));
    }

    #[test]
    fn adding_an_edge_never_lowers_chi(g in graph(8), a in 0usize..8, b in 0usize..8) {
        let (a, b) = (a % g.order(), b % g.order());
        prop_assume!(a != b);
        prop_assert!(chi_lt(&g.with_edge(a.min(b), a.max(b))) >= chi_lt(&g));
    }

    #[test]
    fn flexible_iff_no_fixed_prefix(g in graph(7)) {
        prop_assume!(g.edge_count() > 0);
        prop_assert_eq!(is_flexible(&g).unwrap().is_flexible(), fixed_prefix_indices(&g).unwrap().is_empty());
    }

    #[test]
    fn barrier_matches_definition(g in graph(6)) {
        prop_assume!(g.edge_count() > 0);
        let w = find_local_barrier(&g).unwrap().witness().map(|w| (w.i, w.j));
        prop_assert_eq!(w, oracle::local_barrier(&g));
    }

    #[test]
    fn chi_star_respects_bounds(g in graph(6)) {
        prop_assume!(g.edge_count() > 0);
        let res = chi_star_exact(&g, &SearchEffort { m_max: Some(4), ..SearchEffort::default() }).unwrap();
        let (lo, hi) = res.range();
        let r = chi_lt(&g);
        prop_assert!(lo <= hi);
        prop_assert!(lo > from_usize(r - 1));
        prop_assert!(hi <= from_usize(g.order()));
    }

    #[test]
    fn colouring_statistics_are_consistent(g in graph(7)) {
        let s = colouring_statistics(&g);
        let cols = enumerate_interval_colourings(&g, s.r, false);
        prop_assert!(!cols.is_empty());
        prop_assert_eq!(s.ell_minus, cols.iter().map(|c| c.lengths()[0]).max().unwrap());
        prop_assert!(s.t <= s.j);
    }

    #[test]
    fn classification_invariants(g in graph(6)) {
        prop_assume!(g.edge_count() > 0);
        let chi = chi_star_exact(&g, &SearchEffort { m_max: Some(4), ..SearchEffort::default() }).unwrap();
        let rep = classify(&g, &chi);
        prop_assert!(rep.cover_coeff >= int(0) && rep.cover_coeff < int(1));
        if let Some(p) = rep.perfect_coeff {
            prop_assert!(rep.cover_coeff <= p.lower());
            prop_assert!(p.upper() < int(1));
        }
        match rep.perfect_case {
            PerfectCase::CaseII => prop_assert!(rep.barrier.is_some()),
            PerfectCase::CaseIII => prop_assert!(rep.flexible),
            _ => {}
        }
    }

    #[test]
    fn f_profile_is_monotone(g in graph(6)) {
        prop_assume!(g.edge_count() > 0);
        let p = f_profile(&g).unwrap();
        let mut prev = None;
        for k in 1..=40 {
            if let Some(v) = p.eval(ratio(k, 40)) {
                prop_assert!(v >= int(0) && v < int(1));
                if let Some(q) = prev {
                    prop_assert!(v >= q);
                }
                prev = Some(v);
            }
        }
    }

    #[test]
    fn crit_chrom_formula(sizes in prop::collection::vec(1usize..6, 2..5)) {
        let b = CompleteMultipartite::new(sizes.clone()).unwrap();
        let n: usize = sizes.iter().sum();
        let s = *sizes.iter().min().unwrap();
        let expect = from_usize((sizes.len() - 1) * n) / from_usize(n - s);
        prop_assert_eq!(crit_chrom(&b).unwrap(), expect);
    }

    #[test]
    fn tiling_witnesses_verify(g in graph(10), which in 0usize..3) {
        let h = [
            OrderedGraph::new(2, [(1, 2)]).unwrap(),
            OrderedGraph::new(3, [(1, 3)]).unwrap(),
            OrderedGraph::new(4, [(1, 2), (3, 4)]).unwrap(),
        ][which].clone();
        let ans = max_tiling(&g, &h, None, Budget::default());
        prop_assert!(matches!(ans.status, TilingStatus::MaxCover(_)));
        prop_assert!(verify_tiling(&g, &h, ans.witness.as_ref().unwrap(), false));
    }
}

#[test]
fn orderings_are_distinct_permutations() {
    let b = CompleteMultipartite::new(vec![3, 3, 2, 1]).unwrap();
    let ords = distinct_orderings(&b);
    assert_eq!(ords.len(), 12);
    let mut seen: Vec<Vec<usize>> = ords.iter().map(|o| o.sizes().to_vec()).collect();
    seen.dedup();
    assert_eq!(seen.len(), 12);
}
