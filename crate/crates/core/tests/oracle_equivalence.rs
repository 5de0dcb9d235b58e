mod oracle;

use ordtile_core::colouring::chi_lt;
use ordtile_core::embed::count_copies;
use ordtile_core::structure::{find_local_barrier, fixed_prefix_indices, is_flexible};
use ordtile_core::tiling::{h_cover, max_tiling, perfect_tiling, verify_tiling};
use ordtile_core::{Budget, OrderedGraph, TilingStatus};

fn all_graphs(h: usize) -> impl Iterator<Item = OrderedGraph> {
    let pairs = h * (h - 1) / 2;
    (0..1u64 << pairs).map(move |m| OrderedGraph::from_edge_mask(h, m).unwrap())
}

#[test]
fn chi_matches_brute_force_up_to_five() {
    for h in 1..=5 {
        for g in all_graphs(h) {
            assert_eq!(chi_lt(&g), oracle::chi_lt(&g), "{g:?}");
        }
    }
}

#[test]
fn structure_matches_definitions_up_to_four() {
    for h in 2..=4 {
        for g in all_graphs(h).filter(|g| g.edge_count() > 0) {
            let barrier = find_local_barrier(&g).unwrap().witness().map(|w| (w.i, w.j));
            assert_eq!(barrier, oracle::local_barrier(&g), "{g:?}");
            let flex = is_flexible(&g).unwrap().is_flexible();
            assert_eq!(flex, oracle::flexible(&g), "{g:?}");
            assert_eq!(fixed_prefix_indices(&g).unwrap(), oracle::fixed_prefixes(&g), "{g:?}");
        }
    }
}

#[test]
fn copy_counts_match_nested_loops() {
    let hosts: Vec<OrderedGraph> = (0..40u64)
        .map(|k| OrderedGraph::from_edge_mask(7, k.wrapping_mul(0x9e37_79b9_7f4a_7c15) & ((1 << 21) - 1)).unwrap())
        .collect();
    for h in all_graphs(3) {
        for g in &hosts {
            assert_eq!(count_copies(g, &h, None), oracle::copies(g, &h).len());
        }
    }
}

#[test]
fn tilings_match_oracle_on_pseudo_random_hosts() {
    let patterns = [
        OrderedGraph::new(2, [(1, 2)]).unwrap(),
        OrderedGraph::new(3, [(1, 3)]).unwrap(),
        OrderedGraph::new(3, [(1, 2), (2, 3)]).unwrap(),
        OrderedGraph::complete(3).unwrap(),
    ];
    let mut seed = 0x2545_f491_4f6c_dd1du64;
    for _ in 0..60 {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        let g = OrderedGraph::from_edge_mask(9, seed & ((1 << 36) - 1)).unwrap();
        for h in &patterns {
            let best = oracle::max_disjoint(&g, h);
            let ans = max_tiling(&g, h, None, Budget::default());
            assert_eq!(ans.status, TilingStatus::MaxCover(best), "{g:?} {h:?}");
            assert!(verify_tiling(&g, h, ans.witness.as_ref().unwrap(), false));
            assert_eq!(ans.witness.unwrap().len(), best);
            let p = perfect_tiling(&g, h, Budget::default());
            let expect = if oracle::has_perfect(&g, h) { TilingStatus::PerfectFound } else { TilingStatus::NoPerfect };
            assert_eq!(p.status, expect, "{g:?} {h:?}");
            if let Some(w) = p.witness {
                assert!(verify_tiling(&g, h, &w, true));
            }
            let cov = oracle::covered(&g, h);
            let uncovered: Vec<usize> = (0..g.order()).filter(|v| !cov.contains(v)).collect();
            assert_eq!(h_cover(&g, h), uncovered);
        }
    }
}
