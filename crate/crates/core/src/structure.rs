//! Local barriers and flexibility.

use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::colouring::{chi_lt, for_each_bounded_colouring, for_each_interval_colouring, IntervalColouring};
use crate::graph::{range_mask, OrderedGraph};
use crate::{Error, Result};

fn require_two(g: &OrderedGraph) -> Result<usize> {
    let r = chi_lt(g);
    if r < 2 {
        return Err(Error::ChromaticTooSmall { required: 2, actual: r });
    }
    Ok(r)
}

/// Classes `i != j` (1-based, in `[r+1]`) such that in every interval
/// `(r+1)`-colouring whose class `i` is a singleton `{v}`, `v` has a neighbour
/// in class `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BarrierWitness {
    pub i: usize,
    pub j: usize,
    /// No colouring has class `i` as a singleton, so the condition holds vacuously.
    pub vacuous: bool,
}

/// A colouring showing that `(i, j)` is not a local barrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refutation {
    pub i: usize,
    pub j: usize,
    pub colouring: IntervalColouring,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalBarrier {
    /// The lexicographically first barrier, with refutations of every earlier pair.
    Found { witness: BarrierWitness, refuted: Vec<Refutation> },
    /// One refutation for every candidate pair.
    None(Vec<Refutation>),
}

impl LocalBarrier {
    pub fn witness(&self) -> Option<BarrierWitness> {
        match self {
            LocalBarrier::Found { witness, .. } => Some(*witness),
            LocalBarrier::None(_) => None,
        }
    }
}

/// Result of examining one candidate pair: a refuting colouring, or whether
/// any singleton-`i` colouring exists at all.
enum PairCheck {
    Refuted(IntervalColouring),
    Holds { vacuous: bool },
}

fn check_pair(g: &OrderedGraph, r: usize, i: usize, j: usize) -> PairCheck {
    let n = g.order();
    let mut bounds = alloc::vec![(0, n); r + 1];
    bounds[i - 1] = (1, 1);
    let mut seen = false;
    let mut refuting = None;
    let _ = for_each_bounded_colouring(g, &bounds, |l| {
        seen = true;
        let v: usize = l[..i - 1].iter().sum();
        let start: usize = l[..j - 1].iter().sum();
        if g.neighbours(v) & range_mask(start, start + l[j - 1]) == 0 {
            refuting = Some(IntervalColouring::from_lengths(l));
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    match refuting {
        Some(c) => PairCheck::Refuted(c),
        None => PairCheck::Holds { vacuous: !seen },
    }
}

/// Scans pairs `(i, j)` in lexicographic order and returns the first barrier.
pub fn find_local_barrier(g: &OrderedGraph) -> Result<LocalBarrier> {
    let r = require_two(g)?;
    let mut refuted = Vec::new();
    for i in 1..=r + 1 {
        for j in (1..=r + 1).filter(|&j| j != i) {
            match check_pair(g, r, i, j) {
                PairCheck::Refuted(colouring) => refuted.push(Refutation { i, j, colouring }),
                PairCheck::Holds { vacuous } => {
                    return Ok(LocalBarrier::Found { witness: BarrierWitness { i, j, vacuous }, refuted })
                }
            }
        }
    }
    Ok(LocalBarrier::None(refuted))
}

/// For every boundary `i` in `[r-1]`, an interval `(r+1)`-colouring whose
/// class `i+1` is a singleton that can merge into either neighbour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlexWitness {
    pub r: usize,
    /// Entry `i-1` serves boundary `i`.
    pub colourings: Vec<IntervalColouring>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Flexibility {
    Flexible(FlexWitness),
    /// No movable singleton exists at this 1-based boundary.
    Blocked {
        i: usize,
    },
}

impl Flexibility {
    pub fn is_flexible(&self) -> bool {
        matches!(self, Flexibility::Flexible(_))
    }
}

fn flex_colouring(g: &OrderedGraph, r: usize, i: usize) -> Option<IntervalColouring> {
    let n = g.order();
    let mut bounds = alloc::vec![(0, n); r + 1];
    bounds[i] = (1, 1);
    let mut found = None;
    let _ = for_each_bounded_colouring(g, &bounds, |l| {
        let x: usize = l[..i].iter().sum();
        let left = x - l[i - 1];
        let right_end = x + 1 + l[i + 1];
        if g.is_independent_interval(left, x + 1) && g.is_independent_interval(x, right_end) {
            found = Some(IntervalColouring::from_lengths(l));
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    found
}

/// Decides flexibility, returning a witness colouring per boundary or the
/// first boundary that admits none.
pub fn is_flexible(g: &OrderedGraph) -> Result<Flexibility> {
    let r = require_two(g)?;
    let mut colourings = Vec::with_capacity(r - 1);
    for i in 1..r {
        match flex_colouring(g, r, i) {
            Some(c) => colourings.push(c),
            None => return Ok(Flexibility::Blocked { i }),
        }
    }
    Ok(Flexibility::Flexible(FlexWitness { r, colourings }))
}

impl FlexWitness {
    /// Checks every colouring: class `i+1` is a singleton and both merges are
    /// proper `r`-colourings with nonempty classes.
    pub fn verify(&self, g: &OrderedGraph) -> bool {
        self.colourings.len() + 1 == self.r
            && self.colourings.iter().enumerate().all(|(k, c)| {
                let i = k + 1;
                let l = c.lengths();
                if l.len() != self.r + 1 || l[i] != 1 || !c.is_proper_for(g) {
                    return false;
                }
                let merge = |side: usize| {
                    let mut m: Vec<usize> = l.to_vec();
                    m[side] += 1;
                    m.remove(i);
                    let m = IntervalColouring::from_lengths(&m);
                    m.is_proper_for(g) && m.lengths().iter().all(|&x| x > 0)
                };
                merge(i - 1) && merge(i + 1)
            })
    }
}

/// Boundaries `i` in `[r-1]` where the number of vertices in the first `i`
/// classes is the same for every interval `r`-colouring.
pub fn fixed_prefix_indices(g: &OrderedGraph) -> Result<Vec<usize>> {
    let r = require_two(g)?;
    let mut first: Option<Vec<usize>> = None;
    let mut fixed = alloc::vec![true; r - 1];
    let _ = for_each_interval_colouring(g, r, false, |l| {
        let prefix: Vec<usize> = l[..r - 1]
            .iter()
            .scan(0, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect();
        match &first {
            None => first = Some(prefix),
            Some(p) => {
                for k in 0..r - 1 {
                    fixed[k] &= p[k] == prefix[k];
                }
            }
        }
        ControlFlow::Continue(())
    });
    Ok((1..r).filter(|&i| fixed[i - 1]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn k22() -> OrderedGraph {
        OrderedGraph::new(4, [(1, 3), (1, 4), (2, 3), (2, 4)]).unwrap()
    }

    fn fig2() -> OrderedGraph {
        OrderedGraph::new(7, [(1, 3), (3, 5), (5, 7)]).unwrap()
    }

    fn k3() -> OrderedGraph {
        OrderedGraph::complete(3).unwrap()
    }

    #[test]
    fn barrier_examples() {
        assert_eq!(find_local_barrier(&k3()).unwrap().witness(), None);
        assert_eq!(find_local_barrier(&k22()).unwrap().witness(), Some(BarrierWitness { i: 1, j: 3, vacuous: false }));
        assert_eq!(find_local_barrier(&fig2()).unwrap().witness(), None);
        let ex2 = OrderedGraph::new(8, [(1, 8), (2, 5), (5, 8)]).unwrap();
        assert!(find_local_barrier(&ex2).unwrap().witness().is_some());
        assert!(find_local_barrier(&OrderedGraph::empty(3).unwrap()).is_err());
    }

    #[test]
    fn refutations_cover_all_pairs() {
        if let LocalBarrier::None(refs) = find_local_barrier(&k3()).unwrap() {
            assert_eq!(refs.len(), 4 * 3);
            assert!(refs.iter().all(|r| r.colouring.is_proper_for(&k3())));
        } else {
            panic!("K_3 has no barrier");
        }
    }

    #[test]
    fn flexibility_examples() {
        match is_flexible(&fig2()).unwrap() {
            Flexibility::Flexible(w) => assert!(w.verify(&fig2())),
            other => panic!("{other:?}"),
        }
        assert_eq!(is_flexible(&k3()).unwrap(), Flexibility::Blocked { i: 1 });
        assert_eq!(is_flexible(&k22()).unwrap(), Flexibility::Blocked { i: 1 });
    }

    #[test]
    fn fixed_prefixes() {
        assert_eq!(fixed_prefix_indices(&k3()).unwrap(), vec![1, 2]);
        assert_eq!(fixed_prefix_indices(&fig2()).unwrap(), Vec::<usize>::new());
        let edge = OrderedGraph::new(2, [(1, 2)]).unwrap();
        assert_eq!(fixed_prefix_indices(&edge).unwrap(), vec![1]);
    }
}
