//! The three extremal constructions and checks of their obstructions.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::colouring::chi_lt;
use crate::embed::count_copies;
use crate::graph::OrderedGraph;
use crate::multipartite::{distinct_orderings, CompleteMultipartite, OrderedMultipartite};
use crate::rational::{floor, from_usize, int, Rational};
use crate::tiling::{h_cover, perfect_tiling, Budget, TilingStatus};
use crate::{Error, Result};

/// `total` split into `parts` sizes differing by at most one, larger sizes last.
fn balanced(total: usize, parts: usize) -> Vec<usize> {
    let (q, rem) = (total / parts, total % parts);
    (0..parts).map(|k| q + usize::from(k >= parts - rem)).collect()
}

/// Class sizes of `F1(n, r, i, j)`, left to right.
pub fn f1_classes(n: usize, r: usize, i: usize, j: usize) -> Result<Vec<usize>> {
    if r < 2 || i == j || i == 0 || j == 0 || i > r + 1 || j > r + 1 || n < r + 1 {
        return Err(Error::InvalidParameters(format!(
            "F1 needs r >= 2, distinct i, j in [r+1] and n >= r+1; got n={n}, r={r}, i={i}, j={j}"
        )));
    }
    let q = (n - 1) / r;
    let mut others = balanced(n - 1 - q, r - 1).into_iter();
    Ok((1..=r + 1)
        .map(|k| {
            if k == i {
                1
            } else if k == j {
                q
            } else {
                others.next().unwrap()
            }
        })
        .collect())
}

/// Classes `U_1 < ... < U_{r+1}` with `U_i = {u}`; all other classes form a
/// complete `r`-partite graph and `u` sees everything outside `U_j`.
pub fn build_f1(n: usize, r: usize, i: usize, j: usize) -> Result<OrderedGraph> {
    let sizes = f1_classes(n, r, i, j)?;
    let class: Vec<usize> = sizes.iter().enumerate().flat_map(|(k, &s)| core::iter::repeat_n(k + 1, s)).collect();
    OrderedGraph::from_fn(n, |a, b| {
        let (ca, cb) = (class[a], class[b]);
        if ca == cb {
            false
        } else if ca == i || cb == i {
            ca != j && cb != j
        } else {
            true
        }
    })
}

/// 0-based position of the singleton vertex `u` in `F1(n, r, i, j)`.
pub fn f1_singleton(n: usize, r: usize, i: usize, j: usize) -> Result<usize> {
    Ok(f1_classes(n, r, i, j)?[..i - 1].iter().sum())
}

/// `l = floor(n / chi* + 1)` and the complete multipartite graph with
/// `ceil(n / l)` parts, all of size `l` except possibly one smaller part.
pub fn build_f2(n: usize, chi_star: Rational) -> Result<CompleteMultipartite> {
    if chi_star <= int(1) || n == 0 {
        return Err(Error::InvalidParameters(format!("F2 needs n >= 1 and chi* > 1; got n={n}, chi*={chi_star}")));
    }
    let ell = floor(&(from_usize(n) / chi_star + int(1))) as usize;
    let ell = ell.min(n);
    let mut sizes = alloc::vec![ell; n / ell];
    if !n.is_multiple_of(ell) {
        sizes.push(n % ell);
    }
    CompleteMultipartite::new(sizes)
}

/// Complete `(chi_<(H) - 1)`-partite ordered graph on `n` vertices with parts
/// as equal as possible, larger parts last.
pub fn build_f3(h: &OrderedGraph, n: usize) -> Result<OrderedGraph> {
    let r = chi_lt(h);
    if r < 2 || n < r - 1 {
        return Err(Error::InvalidParameters(format!("F3 needs chi_< >= 2 and n >= chi_< - 1; got chi_<={r}, n={n}")));
    }
    OrderedMultipartite::new(balanced(n, r - 1))?.to_graph()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdversarialOrdering {
    pub ordering: OrderedMultipartite,
    /// Search nodes spent over all orderings tried.
    pub nodes: u64,
}

/// The first ordering of `b` (lexicographic in its size sequence) with no
/// perfect `h`-tiling.
pub fn adversarial_labelling(
    b: &CompleteMultipartite,
    h: &OrderedGraph,
    budget: Budget,
) -> Result<AdversarialOrdering> {
    if !b.order().is_multiple_of(h.order()) {
        return Err(Error::Indivisible { pattern: h.order(), host: b.order() });
    }
    let mut nodes = 0;
    for ord in distinct_orderings(b) {
        let ans = perfect_tiling(&ord.to_graph()?, h, budget);
        nodes += ans.nodes;
        match ans.status {
            TilingStatus::NoPerfect => return Ok(AdversarialOrdering { ordering: ord, nodes }),
            TilingStatus::Timeout => {
                return Err(Error::Inconclusive(format!("search budget exhausted on ordering {ord}")))
            }
            _ => {}
        }
    }
    Err(Error::Contradiction(format!("every ordering of {b} tiles perfectly; construction or chi* input is wrong")))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    /// No copy of the pattern contains this 0-based vertex.
    NoCoverAt {
        vertex: usize,
    },
    /// This ordering has no perfect tiling.
    NoPerfectTiling {
        ordering: Vec<usize>,
        nodes: u64,
    },
    NoCopyOfH,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalReport {
    pub graph: OrderedGraph,
    pub min_degree: usize,
    /// Value the minimum degree is compared against.
    pub claimed_bound: Rational,
    /// `">"` or `">="`.
    pub relation: &'static str,
    pub formula: &'static str,
    /// Verified obstruction, when a pattern was supplied.
    pub obstruction: Option<Obstruction>,
    pub notes: Vec<String>,
}

impl ExtremalReport {
    /// Whether the minimum degree satisfies the claimed relation.
    pub fn degree_claim_holds(&self) -> bool {
        let d = from_usize(self.min_degree);
        match self.relation {
            ">" => d > self.claimed_bound,
            _ => d >= self.claimed_bound,
        }
    }
}

pub fn f1_report(n: usize, r: usize, i: usize, j: usize, pattern: Option<&OrderedGraph>) -> Result<ExtremalReport> {
    let graph = build_f1(n, r, i, j)?;
    let u = f1_singleton(n, r, i, j)?;
    let obstruction = match pattern {
        None => None,
        Some(h) => {
            if !h_cover(&graph, h).contains(&u) {
                return Err(Error::Contradiction(format!("vertex {} of F1 lies in a copy of the pattern", u + 1)));
            }
            Some(Obstruction::NoCoverAt { vertex: u })
        }
    };
    Ok(ExtremalReport {
        min_degree: graph.min_degree(),
        graph,
        claimed_bound: (int(1) - Rational::new(1, r as i128)) * from_usize(n) - int(1),
        relation: ">",
        formula: "n-1-floor((n-1)/r) > (1-1/r)n-1",
        obstruction,
        notes: alloc::vec![String::from("classes other than U_i and U_j are balanced with larger classes last")],
    })
}

pub fn f2_report(h: &OrderedGraph, n: usize, chi_star: Rational, budget: Budget) -> Result<ExtremalReport> {
    let b = build_f2(n, chi_star)?;
    let adv = adversarial_labelling(&b, h, budget)?;
    let graph = adv.ordering.to_graph()?;
    Ok(ExtremalReport {
        min_degree: graph.min_degree(),
        graph,
        claimed_bound: (int(1) - chi_star.recip()) * from_usize(n) - int(1),
        relation: ">=",
        formula: "n-floor(n/chi*+1) >= (1-1/chi*)n-1",
        obstruction: Some(Obstruction::NoPerfectTiling { ordering: adv.ordering.sizes().to_vec(), nodes: adv.nodes }),
        notes: Vec::new(),
    })
}

pub fn f3_report(h: &OrderedGraph, n: usize) -> Result<ExtremalReport> {
    let graph = build_f3(h, n)?;
    if count_copies(&graph, h, None) != 0 {
        return Err(Error::Contradiction(String::from("F3 contains a copy of the pattern")));
    }
    let r = chi_lt(h);
    Ok(ExtremalReport {
        min_degree: graph.min_degree(),
        claimed_bound: (int(1) - Rational::new(1, (r - 1) as i128)) * from_usize(n) - int(1),
        graph,
        relation: ">",
        formula: "n-ceil(n/(r-1)) > (1-1/(r-1))n-1",
        obstruction: Some(Obstruction::NoCopyOfH),
        notes: alloc::vec![String::from("parts are balanced with larger parts last")],
    })
}
