//! Colouring statistics, bounds on the ordered critical chromatic number and
//! the cases where it is known exactly.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::ControlFlow;

use crate::colouring::{for_each_interval_colouring, greedy_colouring};
use crate::graph::{OrderedGraph, MAX_ORDER};
use crate::multipartite::{check_simple_bottlegraph, crit_chrom, BottleStatus, CompleteMultipartite};
use crate::rational::{from_usize, Rational};
use crate::tiling::Budget;
use crate::{Error, Result};

/// Extremal class sizes over all interval `r`-colourings, `r = chi_<(H)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColouringStats {
    pub h: usize,
    pub r: usize,
    /// Largest possible first class.
    pub ell_minus: usize,
    /// Largest possible last class.
    pub ell_minus_star: usize,
    /// Largest possible smallest class.
    pub ell_plus: usize,
    /// Lexicographically first colouring attaining `ell_plus`.
    pub ell_plus_colouring: Vec<usize>,
    /// Longest independent prefix.
    pub alpha_plus: usize,
    /// Longest independent suffix.
    pub alpha_minus: usize,
    pub alpha: usize,
    /// `max_i min_C |H_i|`.
    pub t: usize,
    /// `max_i max_C |H_i|`.
    pub j: usize,
}

pub fn colouring_statistics(g: &OrderedGraph) -> ColouringStats {
    let n = g.order();
    let r = greedy_colouring(g).num_classes();
    let mut ell_minus = 0;
    let mut ell_minus_star = 0;
    let mut ell_plus = 0;
    let mut ell_plus_colouring = Vec::new();
    let mut mins = alloc::vec![usize::MAX; r];
    let mut maxs = alloc::vec![0; r];
    let _ = for_each_interval_colouring(g, r, false, |l| {
        ell_minus = ell_minus.max(l[0]);
        ell_minus_star = ell_minus_star.max(l[r - 1]);
        let smallest = *l.iter().min().unwrap();
        if smallest > ell_plus {
            ell_plus = smallest;
            ell_plus_colouring = l.to_vec();
        }
        for k in 0..r {
            mins[k] = mins[k].min(l[k]);
            maxs[k] = maxs[k].max(l[k]);
        }
        ControlFlow::Continue(())
    });
    let alpha_plus = (0..=n).rev().find(|&t| g.is_independent_interval(0, t)).unwrap();
    let alpha_minus = (0..=n).rev().find(|&t| g.is_independent_interval(n - t, n)).unwrap();
    ColouringStats {
        h: n,
        r,
        ell_minus,
        ell_minus_star,
        ell_plus,
        ell_plus_colouring,
        alpha_plus,
        alpha_minus,
        alpha: alpha_plus.min(alpha_minus),
        t: mins.into_iter().max().unwrap(),
        j: maxs.into_iter().max().unwrap(),
    }
}

/// Where a bound on the ordered critical chromatic number comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundSource {
    /// `h / l-`.
    FirstClass,
    /// `h / l-*`.
    LastClass,
    /// `(r-1) + (r-1)/(h-1)`.
    StrongLower,
    /// `h / l+`.
    UpperColouring,
    /// A certified simple bottlegraph.
    Bottlegraph(CompleteMultipartite),
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundSource::FirstClass => write!(f, "h/l-"),
            BoundSource::LastClass => write!(f, "h/l-*"),
            BoundSource::StrongLower => write!(f, "(r-1)+(r-1)/(h-1)"),
            BoundSource::UpperColouring => write!(f, "h/l+"),
            BoundSource::Bottlegraph(b) => write!(f, "simple bottlegraph {b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiStarBounds {
    pub lower: Rational,
    pub lower_source: BoundSource,
    /// `r - 1`, which the value always exceeds strictly.
    pub strict_floor: Rational,
    pub upper: Rational,
    pub upper_source: BoundSource,
}

pub fn bounds_from_stats(s: &ColouringStats) -> ChiStarBounds {
    let h = from_usize(s.h);
    let mut lower = h / from_usize(s.ell_minus);
    let mut lower_source = BoundSource::FirstClass;
    let last = h / from_usize(s.ell_minus_star);
    if last > lower {
        lower = last;
        lower_source = BoundSource::LastClass;
    }
    if s.r >= 2 {
        let strong = from_usize(s.r - 1) + from_usize(s.r - 1) / from_usize(s.h - 1);
        if strong > lower {
            lower = strong;
            lower_source = BoundSource::StrongLower;
        }
    }
    ChiStarBounds {
        lower,
        lower_source,
        strict_floor: from_usize(s.r.saturating_sub(1)),
        upper: h / from_usize(s.ell_plus),
        upper_source: BoundSource::UpperColouring,
    }
}

pub fn chi_star_bounds(g: &OrderedGraph) -> ChiStarBounds {
    bounds_from_stats(&colouring_statistics(g))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactRule {
    /// `h / alpha` when `chi_< = 2`.
    BipartiteAlpha,
    /// Complete multipartite with a smallest part at either end.
    CompleteSmallestEnd,
    /// Complete 3-partite formula `g(H)`.
    CompleteThreePartite,
    BoundsCoincide,
    /// A simple bottlegraph meeting the lower bound.
    SimpleBottlegraph(CompleteMultipartite),
}

impl fmt::Display for ExactRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactRule::BipartiteAlpha => write!(f, "bipartite h/alpha"),
            ExactRule::CompleteSmallestEnd => write!(f, "complete multipartite, smallest part at an end"),
            ExactRule::CompleteThreePartite => write!(f, "complete 3-partite g(H)"),
            ExactRule::BoundsCoincide => write!(f, "bounds coincide"),
            ExactRule::SimpleBottlegraph(b) => write!(f, "simple bottlegraph {b} meets the lower bound"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChiStarKind {
    Exact { value: Rational, rule: ExactRule },
    Interval { lower: Rational, lower_strict: bool, upper: Rational },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiStarResult {
    pub kind: ChiStarKind,
    /// General bounds; the upper side may be tightened by a bottlegraph found
    /// during the scan.
    pub bounds: ChiStarBounds,
}

impl ChiStarResult {
    pub fn exact(&self) -> Option<Rational> {
        match self.kind {
            ChiStarKind::Exact { value, .. } => Some(value),
            ChiStarKind::Interval { .. } => None,
        }
    }

    /// `(lower, upper)`, equal when exact.
    pub fn range(&self) -> (Rational, Rational) {
        match self.kind {
            ChiStarKind::Exact { value, .. } => (value, value),
            ChiStarKind::Interval { lower, upper, .. } => (lower, upper),
        }
    }
}

/// Limits for the bottlegraph scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchEffort {
    /// Skip the scan entirely.
    pub scan: bool,
    /// Largest part size tried; `None` means `h^2`.
    pub m_max: Option<usize>,
    /// Largest bottlegraph order tried.
    pub max_order: usize,
    /// Search budget per ordering.
    pub budget: Budget,
}

impl Default for SearchEffort {
    fn default() -> Self {
        SearchEffort { scan: true, m_max: None, max_order: MAX_ORDER, budget: Budget(200_000) }
    }
}

impl SearchEffort {
    pub fn none() -> Self {
        SearchEffort { scan: false, ..Self::default() }
    }
}

/// Part sizes left to right when `g` is complete multipartite with respect
/// to its greedy colouring.
pub fn complete_multipartite_parts(g: &OrderedGraph) -> Option<Vec<usize>> {
    let c = greedy_colouring(g);
    let l = c.lengths();
    let mut expected = 0;
    for a in 0..l.len() {
        for b in a + 1..l.len() {
            expected += l[a] * l[b];
        }
    }
    (g.edge_count() == expected).then(|| l.to_vec())
}

/// `(2 - min{h1,h2,h3}/min{h1,h3}) * h / min{h1,h3}`.
pub fn g_three_partite(h1: usize, h2: usize, h3: usize) -> Rational {
    let end = from_usize(h1.min(h3));
    let least = from_usize(h1.min(h2).min(h3));
    (from_usize(2) - least / end) * from_usize(h1 + h2 + h3) / end
}

/// Candidate bottle shapes `(m, ..., m, s)` with critical chromatic number in
/// `[lower, upper)`, sorted by that number and then by shape.
fn bottle_candidates(s: &ColouringStats, b: &ChiStarBounds, effort: &SearchEffort) -> Vec<(Rational, Vec<usize>)> {
    let h = s.h;
    let m_max = effort.m_max.unwrap_or(h * h);
    let mut out = Vec::new();
    for k in s.r.max(2)..=h {
        for m in 1..=m_max {
            if (k - 1) * m + 1 > effort.max_order {
                break;
            }
            for small in 1..=m {
                let n = (k - 1) * m + small;
                if n > effort.max_order {
                    break;
                }
                if n % h != 0 {
                    continue;
                }
                let crit = from_usize((k - 1) * n) / from_usize(n - small);
                if crit < b.lower || crit >= b.upper {
                    continue;
                }
                let mut shape = alloc::vec![m; k - 1];
                shape.push(small);
                out.push((crit, shape));
            }
        }
    }
    out.sort();
    out
}

/// Exact value when one of the known rules applies, otherwise the bounds.
pub fn chi_star_exact(g: &OrderedGraph, effort: &SearchEffort) -> Result<ChiStarResult> {
    let stats = colouring_statistics(g);
    let mut bounds = bounds_from_stats(&stats);
    let h = from_usize(stats.h);
    let mut rule: Option<(Rational, ExactRule)> = None;

    if stats.r == 2 {
        rule = Some((h / from_usize(stats.alpha), ExactRule::BipartiteAlpha));
    }
    if rule.is_none() && stats.r >= 2 {
        if let Some(parts) = complete_multipartite_parts(g) {
            let least = *parts.iter().min().unwrap();
            if parts[0] == least || parts[parts.len() - 1] == least {
                rule = Some((h / from_usize(least), ExactRule::CompleteSmallestEnd));
            } else if parts.len() == 3 {
                rule = Some((g_three_partite(parts[0], parts[1], parts[2]), ExactRule::CompleteThreePartite));
            }
        }
    }
    if rule.is_none() && bounds.lower == bounds.upper {
        rule = Some((bounds.lower, ExactRule::BoundsCoincide));
    }
    if rule.is_none() && effort.scan {
        for (crit, shape) in bottle_candidates(&stats, &bounds, effort) {
            let b = CompleteMultipartite::new(shape)?;
            let v = check_simple_bottlegraph(&b, g, effort.budget)?;
            if v.status == BottleStatus::SimpleYes {
                debug_assert_eq!(crit_chrom(&b)?, crit);
                if crit == bounds.lower {
                    rule = Some((crit, ExactRule::SimpleBottlegraph(b)));
                } else {
                    bounds.upper = crit;
                    bounds.upper_source = BoundSource::Bottlegraph(b);
                }
                break;
            }
        }
    }

    let kind = match rule {
        Some((value, rule)) => {
            let floor_ok = stats.r < 2 || value > bounds.strict_floor;
            if value < bounds.lower || value > bounds.upper || !floor_ok {
                return Err(Error::Inconsistent(format!(
                    "rule '{rule}' gives {value}, outside bounds [{}, {}]",
                    bounds.lower, bounds.upper
                )));
            }
            ChiStarKind::Exact { value, rule }
        }
        None => ChiStarKind::Interval { lower: bounds.lower, lower_strict: false, upper: bounds.upper },
    };
    Ok(ChiStarResult { kind, bounds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipartite::OrderedMultipartite;
    use crate::rational::{int, ratio};

    fn complete(parts: &[usize]) -> OrderedGraph {
        OrderedMultipartite::new(parts.to_vec()).unwrap().to_graph().unwrap()
    }

    fn fig2() -> OrderedGraph {
        OrderedGraph::new(7, [(1, 3), (3, 5), (5, 7)]).unwrap()
    }

    #[test]
    fn statistics_examples() {
        let edge = OrderedGraph::new(2, [(1, 2)]).unwrap();
        let s = colouring_statistics(&edge);
        assert_eq!((s.ell_minus, s.ell_minus_star, s.ell_plus, s.alpha), (1, 1, 1, 1));
        let s = colouring_statistics(&complete(&[2, 2]));
        assert_eq!((s.alpha_plus, s.alpha_minus, s.ell_minus, s.ell_minus_star, s.ell_plus), (2, 2, 2, 2, 2));
        let s = colouring_statistics(&fig2());
        assert_eq!((s.ell_minus, s.ell_minus_star, s.ell_plus), (2, 2, 1));
        assert_eq!((s.t, s.j), (1, 3));
    }

    #[test]
    fn bounds_examples() {
        let b = chi_star_bounds(&fig2());
        assert_eq!(b.lower, ratio(7, 2));
        assert_eq!(b.upper, int(7));
        let b = chi_star_bounds(&OrderedGraph::complete(4).unwrap());
        assert_eq!((b.lower, b.upper), (int(4), int(4)));
        let b = chi_star_bounds(&complete(&[2, 1, 2]));
        assert_eq!(b.lower, ratio(5, 2));
        assert_eq!(b.upper, int(5));
    }

    #[test]
    fn exact_examples() {
        let e = SearchEffort::default();
        let r = chi_star_exact(&complete(&[2, 1, 2]), &e).unwrap();
        assert_eq!(r.kind, ChiStarKind::Exact { value: ratio(15, 4), rule: ExactRule::CompleteThreePartite });
        let r = chi_star_exact(&complete(&[2, 2]), &e).unwrap();
        assert_eq!(r.kind, ChiStarKind::Exact { value: int(2), rule: ExactRule::BipartiteAlpha });
        let r = chi_star_exact(&complete(&[1, 2, 2]), &e).unwrap();
        assert_eq!(r.kind, ChiStarKind::Exact { value: int(5), rule: ExactRule::CompleteSmallestEnd });
        let r = chi_star_exact(&fig2(), &e).unwrap();
        let b = CompleteMultipartite::new(alloc::vec![2, 2, 2, 1]).unwrap();
        assert_eq!(r.kind, ChiStarKind::Exact { value: ratio(7, 2), rule: ExactRule::SimpleBottlegraph(b) });
    }

    #[test]
    fn no_scan_gives_interval() {
        let r = chi_star_exact(&fig2(), &SearchEffort::none()).unwrap();
        assert_eq!(r.kind, ChiStarKind::Interval { lower: ratio(7, 2), lower_strict: false, upper: int(7) });
    }

    #[test]
    fn three_partite_formula_agrees_with_end_rule() {
        for a in 1..=4 {
            for b in 1..=4 {
                for c in 1..=4 {
                    let least = a.min(b).min(c);
                    let g = g_three_partite(a, b, c);
                    if a == least {
                        assert_eq!(g, ratio((a + b + c) as i128, a as i128));
                    }
                    if c == least {
                        assert_eq!(g, ratio((a + b + c) as i128, c as i128));
                    }
                }
            }
        }
    }

    #[test]
    fn detects_complete_multipartite() {
        assert_eq!(complete_multipartite_parts(&complete(&[2, 1, 2])), Some(alloc::vec![2, 1, 2]));
        assert_eq!(complete_multipartite_parts(&fig2()), None);
    }
}
