//! Minimum-degree coefficients for perfect tilings, covers and almost
//! perfect tilings.

use core::fmt;

use crate::colouring::chi_lt;
use crate::critical::{ChiStarKind, ChiStarResult};
use crate::graph::OrderedGraph;
use crate::rational::{from_usize, int, Rational};
use crate::structure::{find_local_barrier, is_flexible, BarrierWitness};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PerfectCase {
    /// `chi*_cr >= chi_<`.
    CaseI,
    /// `chi*_cr < chi_<` with a local barrier.
    CaseII,
    /// `chi*_cr < chi_<` without a local barrier.
    CaseIII,
    /// `chi_< = 2`, not covered by the classification.
    BipartiteOutOfScope,
    /// The interval for `chi*_cr` straddles `chi_<`.
    UnresolvedChiStar,
    /// No edges; every host tiles once `h` divides its order.
    Edgeless,
}

impl fmt::Display for PerfectCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PerfectCase::CaseI => "CaseI",
            PerfectCase::CaseII => "CaseII",
            PerfectCase::CaseIII => "CaseIII",
            PerfectCase::BipartiteOutOfScope => "BipartiteOutOfScope",
            PerfectCase::UnresolvedChiStar => "UnresolvedChiStar",
            PerfectCase::Edgeless => "Edgeless",
        };
        f.write_str(s)
    }
}

/// A coefficient known exactly or only up to an interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coefficient {
    Exact(Rational),
    Range { lower: Rational, lower_strict: bool, upper: Rational },
}

impl Coefficient {
    pub fn exact(&self) -> Option<Rational> {
        match *self {
            Coefficient::Exact(v) => Some(v),
            Coefficient::Range { .. } => None,
        }
    }

    pub fn upper(&self) -> Rational {
        match *self {
            Coefficient::Exact(v) => v,
            Coefficient::Range { upper, .. } => upper,
        }
    }

    pub fn lower(&self) -> Rational {
        match *self {
            Coefficient::Exact(v) => v,
            Coefficient::Range { lower, .. } => lower,
        }
    }
}

/// `1 - 1/chi*` applied to the exact value or to both ends of the interval.
fn degree_coefficient(chi: &ChiStarResult) -> Coefficient {
    let f = |c: Rational| int(1) - c.recip();
    match chi.kind {
        ChiStarKind::Exact { value, .. } => Coefficient::Exact(f(value)),
        ChiStarKind::Interval { lower, lower_strict, upper } => {
            Coefficient::Range { lower: f(lower), lower_strict, upper: f(upper) }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdReport {
    pub chi_lt: usize,
    pub chi_star: ChiStarResult,
    pub barrier: Option<BarrierWitness>,
    pub flexible: bool,
    pub perfect_case: PerfectCase,
    pub perfect_coeff: Option<Coefficient>,
    pub cover_coeff: Rational,
    pub almost_perfect_coeff: Coefficient,
}

/// Combines `chi_<`, the local-barrier test and `chi*_cr` into the three
/// coefficients. `chi_star` must come from the same graph.
pub fn classify(g: &OrderedGraph, chi_star: &ChiStarResult) -> ThresholdReport {
    let r = chi_lt(g);
    let (barrier, flexible) = if r >= 2 {
        let barrier = find_local_barrier(g).ok().and_then(|b| b.witness());
        let flexible = is_flexible(g).map(|f| f.is_flexible()).unwrap_or(false);
        (barrier, flexible)
    } else {
        (None, false)
    };
    let rr = from_usize(r);
    let cover_coeff = match (r, barrier) {
        (0 | 1, _) => int(0),
        (_, None) => int(1) - from_usize(r - 1).recip(),
        (_, Some(_)) => int(1) - rr.recip(),
    };
    let almost = degree_coefficient(chi_star);
    let barrier_coeff = Coefficient::Exact(int(1) - rr.recip());

    let (perfect_case, perfect_coeff) = if r <= 1 {
        (PerfectCase::Edgeless, Some(Coefficient::Exact(int(0))))
    } else if r == 2 {
        (PerfectCase::BipartiteOutOfScope, None)
    } else {
        let (lower, upper) = chi_star.range();
        if lower >= rr {
            (PerfectCase::CaseI, Some(almost))
        } else if upper < rr {
            match barrier {
                Some(_) => (PerfectCase::CaseII, Some(barrier_coeff)),
                None => (PerfectCase::CaseIII, Some(almost)),
            }
        } else {
            (PerfectCase::UnresolvedChiStar, None)
        }
    };

    ThresholdReport {
        chi_lt: r,
        chi_star: chi_star.clone(),
        barrier,
        flexible,
        perfect_case,
        perfect_coeff,
        cover_coeff,
        almost_perfect_coeff: almost,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::critical::{chi_star_exact, SearchEffort};
    use crate::multipartite::OrderedMultipartite;
    use crate::rational::ratio;

    fn report(g: &OrderedGraph) -> ThresholdReport {
        classify(g, &chi_star_exact(g, &SearchEffort::default()).unwrap())
    }

    #[test]
    fn case_one() {
        let g = OrderedMultipartite::new(alloc::vec![2, 1, 2]).unwrap().to_graph().unwrap();
        let rep = report(&g);
        assert_eq!(rep.perfect_case, PerfectCase::CaseI);
        assert_eq!(rep.perfect_coeff, Some(Coefficient::Exact(ratio(11, 15))));
    }

    #[test]
    fn case_two() {
        let g = OrderedGraph::new(8, [(1, 8), (2, 5), (5, 8)]).unwrap();
        let rep = report(&g);
        assert_eq!(rep.chi_lt, 3);
        assert!(rep.barrier.is_some());
        assert_eq!(rep.perfect_case, PerfectCase::CaseII);
        assert_eq!(rep.perfect_coeff, Some(Coefficient::Exact(ratio(2, 3))));
        assert_eq!(rep.cover_coeff, ratio(2, 3));
    }

    #[test]
    fn case_three() {
        let g = OrderedGraph::new(5, [(1, 3), (3, 5)]).unwrap();
        let rep = report(&g);
        assert_eq!(rep.perfect_case, PerfectCase::CaseIII);
        assert!(rep.flexible);
        assert_eq!(rep.perfect_coeff, Some(Coefficient::Exact(ratio(3, 5))));
        assert_eq!(rep.cover_coeff, ratio(1, 2));
        assert_eq!(rep.almost_perfect_coeff, Coefficient::Exact(ratio(3, 5)));
    }

    #[test]
    fn bipartite_and_edgeless() {
        let edge = OrderedGraph::new(2, [(1, 2)]).unwrap();
        let rep = report(&edge);
        assert_eq!(rep.perfect_case, PerfectCase::BipartiteOutOfScope);
        assert_eq!(rep.chi_star.exact(), Some(int(2)));
        assert_eq!(rep.almost_perfect_coeff, Coefficient::Exact(ratio(1, 2)));
        let rep = report(&OrderedGraph::empty(3).unwrap());
        assert_eq!(rep.perfect_case, PerfectCase::Edgeless);
        assert_eq!(rep.cover_coeff, int(0));
    }
}
