//! Interval colourings and the interval chromatic number.

use alloc::vec::Vec;
use core::ops::{ControlFlow, Range};

use crate::graph::OrderedGraph;
use crate::{Error, Result};

/// A composition of `[h]` into consecutive intervals; classes may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalColouring {
    lengths: Vec<usize>,
}

impl IntervalColouring {
    pub fn new(lengths: Vec<usize>, order: usize) -> Result<Self> {
        let sum: usize = lengths.iter().sum();
        if sum != order {
            return Err(Error::ColouringLength { sum, order });
        }
        Ok(IntervalColouring { lengths })
    }

    pub(crate) fn from_lengths(lengths: &[usize]) -> Self {
        IntervalColouring { lengths: lengths.to_vec() }
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn num_classes(&self) -> usize {
        self.lengths.len()
    }

    pub fn order(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// 0-based vertex range of class `k` (0-based).
    pub fn class_range(&self, k: usize) -> Range<usize> {
        let start: usize = self.lengths[..k].iter().sum();
        start..start + self.lengths[k]
    }

    pub fn classes(&self) -> impl Iterator<Item = Range<usize>> + '_ {
        let mut start = 0;
        self.lengths.iter().map(move |&l| {
            let r = start..start + l;
            start += l;
            r
        })
    }

    /// Class index (0-based) of vertex `v`.
    pub fn class_of(&self, v: usize) -> usize {
        let mut end = 0;
        for (k, &l) in self.lengths.iter().enumerate() {
            end += l;
            if v < end {
                return k;
            }
        }
        panic!("vertex {v} outside colouring of order {end}")
    }

    /// Every class is independent in `g` and the lengths cover `g` exactly.
    pub fn is_proper_for(&self, g: &OrderedGraph) -> bool {
        self.order() == g.order() && self.classes().all(|r| g.is_independent_interval(r.start, r.end))
    }
}

/// Greedy interval colouring with the fewest classes: a new interval starts
/// exactly when the next vertex has a neighbour in the current one.
pub fn greedy_colouring(g: &OrderedGraph) -> IntervalColouring {
    let mut lengths = Vec::new();
    let mut current = 0u64;
    let mut len = 0;
    for v in 0..g.order() {
        if g.neighbours(v) & current != 0 {
            lengths.push(len);
            current = 0;
            len = 0;
        }
        current |= 1 << v;
        len += 1;
    }
    lengths.push(len);
    IntervalColouring { lengths }
}

/// The interval chromatic number together with a witness colouring whose
/// classes are all nonempty.
pub fn interval_chromatic(g: &OrderedGraph) -> (usize, IntervalColouring) {
    let c = greedy_colouring(g);
    (c.num_classes(), c)
}

pub fn chi_lt(g: &OrderedGraph) -> usize {
    greedy_colouring(g).num_classes()
}

/// Shared state for the lexicographic composition walk.
struct Walk<'a, F> {
    runs: Vec<usize>,
    need: Vec<usize>,
    bounds: &'a [(usize, usize)],
    order: usize,
    lengths: Vec<usize>,
    visit: F,
}

impl<F: FnMut(&[usize]) -> ControlFlow<()>> Walk<'_, F> {
    fn go(&mut self, pos: usize) -> ControlFlow<()> {
        let k = self.lengths.len();
        let left = self.bounds.len() - k;
        if left == 0 {
            return if pos == self.order { (self.visit)(&self.lengths) } else { ControlFlow::Continue(()) };
        }
        let (lo, hi) = self.bounds[k];
        let rest_min: usize = self.bounds[k + 1..].iter().map(|b| b.0).sum();
        let remaining = self.order - pos;
        let hi = hi.min(self.runs[pos]).min(remaining.saturating_sub(rest_min));
        for len in lo..=hi {
            let next = pos + len;
            if self.need[next] > left - 1 {
                continue;
            }
            self.lengths.push(len);
            let flow = self.go(next);
            self.lengths.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Walks every proper interval colouring whose class `k` has length within
/// `bounds[k]` (inclusive), in lexicographic order of the length sequence.
/// Returns `Break` when the visitor stopped early.
pub fn for_each_bounded_colouring<F>(g: &OrderedGraph, bounds: &[(usize, usize)], visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = g.order();
    let runs = g.independent_runs();
    // need[p]: fewest intervals covering the suffix starting at p
    let mut need = alloc::vec![0usize; n + 1];
    for p in (0..n).rev() {
        need[p] = 1 + need[p + runs[p]];
    }
    let mut walk = Walk { runs, need, bounds, order: n, lengths: Vec::with_capacity(bounds.len()), visit };
    walk.go(0)
}

/// Walks every proper interval `r`-colouring in lexicographic order.
pub fn for_each_interval_colouring<F>(g: &OrderedGraph, r: usize, allow_empty: bool, visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let lo = usize::from(!allow_empty);
    let bounds = alloc::vec![(lo, g.order()); r];
    for_each_bounded_colouring(g, &bounds, visit)
}

/// All proper interval `r`-colourings in lexicographic order.
pub fn enumerate_interval_colourings(g: &OrderedGraph, r: usize, allow_empty: bool) -> Vec<IntervalColouring> {
    let mut out = Vec::new();
    let _ = for_each_interval_colouring(g, r, allow_empty, |l| {
        out.push(IntervalColouring::from_lengths(l));
        ControlFlow::Continue(())
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn fig2() -> OrderedGraph {
        OrderedGraph::new(7, [(1, 3), (3, 5), (5, 7)]).unwrap()
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chi_lt(&OrderedGraph::empty(5).unwrap()), 1);
        let fig1 = OrderedGraph::new(11, [(1, 11), (2, 5), (5, 8), (8, 11)]).unwrap();
        assert_eq!(chi_lt(&fig1), 4);
        let (r, c) = interval_chromatic(&fig2());
        assert_eq!(r, 4);
        assert!(c.is_proper_for(&fig2()));
        assert!(c.lengths().iter().all(|&l| l > 0));
    }

    #[test]
    fn enumeration_examples() {
        let edge = OrderedGraph::new(2, [(1, 2)]).unwrap();
        assert_eq!(enumerate_interval_colourings(&edge, 2, false), vec![IntervalColouring::from_lengths(&[1, 1])]);
        let e3 = OrderedGraph::empty(3).unwrap();
        let got: Vec<_> = enumerate_interval_colourings(&e3, 2, false).into_iter().map(|c| c.lengths).collect();
        assert_eq!(got, vec![vec![1, 2], vec![2, 1]]);
        let with_empty = enumerate_interval_colourings(&e3, 2, true);
        assert_eq!(with_empty.len(), 4);
    }

    #[test]
    fn fig2_four_colourings() {
        let got: Vec<_> = enumerate_interval_colourings(&fig2(), 4, false).into_iter().map(|c| c.lengths).collect();
        let expected = vec![
            vec![1, 2, 2, 2],
            vec![1, 2, 3, 1],
            vec![1, 3, 1, 2],
            vec![1, 3, 2, 1],
            vec![2, 1, 2, 2],
            vec![2, 1, 3, 1],
            vec![2, 2, 1, 2],
            vec![2, 2, 2, 1],
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn class_helpers() {
        let c = IntervalColouring::new(vec![2, 0, 3], 5).unwrap();
        assert_eq!(c.class_range(2), 2..5);
        assert_eq!(c.class_of(1), 0);
        assert_eq!(c.class_of(2), 2);
        assert!(IntervalColouring::new(vec![2, 2], 5).is_err());
    }

    fn arb_graph() -> impl Strategy<Value = OrderedGraph> {
        (1usize..=7)
            .prop_flat_map(|h| {
                let pairs = h * (h - 1) / 2;
                (Just(h), 0u64..(1u64 << pairs))
            })
            .prop_map(|(h, m)| OrderedGraph::from_edge_mask(h, m).unwrap())
    }

    proptest! {
        #[test]
        fn adding_an_edge_never_lowers_chi(g in arb_graph(), a in 0usize..7, b in 0usize..7) {
            let h = g.order();
            let (a, b) = (a % h, b % h);
            prop_assume!(a != b);
            prop_assert!(chi_lt(&g.with_edge(a.min(b), a.max(b))) >= chi_lt(&g));
        }

        #[test]
        fn below_chi_no_colouring(g in arb_graph()) {
            let r = chi_lt(&g);
            if r > 1 {
                prop_assert!(enumerate_interval_colourings(&g, r - 1, false).is_empty());
            }
            prop_assert!(!enumerate_interval_colourings(&g, r, false).is_empty());
        }

        #[test]
        fn enumerated_colourings_are_proper_and_sorted(g in arb_graph(), r in 1usize..5, empty in any::<bool>()) {
            let all = enumerate_interval_colourings(&g, r, empty);
            for c in &all {
                prop_assert!(c.is_proper_for(&g));
                prop_assert_eq!(c.num_classes(), r);
                prop_assert!(empty || c.lengths().iter().all(|&l| l > 0));
            }
            prop_assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
