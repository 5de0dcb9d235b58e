//! Exact search for perfect tilings, maximum tilings and covers.
//!
//! The search branches on the smallest vertex not yet decided and tries every
//! copy whose first image is that vertex. Runs of false twins in the host are
//! interchangeable, so copies are restricted to the lowest free members of
//! each run, and a vertex left uncovered takes the rest of its run with it.

use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::embed::{search_copies, Constraints, Pattern};
use crate::graph::{bit, bits, Host, OrderedGraph, TwinClasses};

/// Upper limit on search nodes before a search reports [`TilingStatus::Timeout`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(10_000_000)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TilingStatus {
    PerfectFound,
    /// The exhaustive search finished without a perfect tiling.
    NoPerfect,
    /// Exact maximum number of disjoint copies.
    MaxCover(usize),
    /// A tiling with at least the requested number of copies exists.
    TargetMet(usize),
    /// The exhaustive search proved the requested number unreachable.
    TargetMissed {
        best: usize,
    },
    Timeout,
}

/// Vertex sets of disjoint copies, each listed in increasing order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TilingWitness {
    pub copies: Vec<Vec<usize>>,
}

impl TilingWitness {
    pub fn len(&self) -> usize {
        self.copies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.copies.is_empty()
    }

    pub fn covered(&self) -> usize {
        self.copies.iter().map(Vec::len).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TilingAnswer {
    pub status: TilingStatus,
    pub witness: Option<TilingWitness>,
    pub nodes: u64,
}

struct OutOfBudget;

struct Tiler<'a> {
    g: &'a OrderedGraph,
    pat: Pattern,
    h: usize,
    twins: TwinClasses,
    budget: u64,
    nodes: u64,
    stack: Vec<Vec<usize>>,
}

impl<'a> Tiler<'a> {
    fn new(g: &'a OrderedGraph, h: &OrderedGraph, budget: Budget) -> Self {
        Tiler {
            g,
            pat: Pattern::new(h),
            h: h.order(),
            twins: TwinClasses::of(g),
            budget: budget.0,
            nodes: 0,
            stack: Vec::new(),
        }
    }

    fn tick(&mut self) -> Result<(), OutOfBudget> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(OutOfBudget)
        } else {
            Ok(())
        }
    }

    fn canonical(&self, allowed: u64, first: Option<usize>, anchor: Option<usize>) -> Constraints<'_> {
        Constraints { allowed, first, anchor, twins: Some(&self.twins) }
    }

    /// Vertices of `avail` lying in at least one copy inside `avail`. With
    /// `stop_on_gap`, returns as soon as some vertex is found to be uncoverable.
    fn coverable(&self, avail: u64, stop_on_gap: bool) -> u64 {
        let mut covered = 0u64;
        let mut todo = avail;
        while todo != 0 {
            let w = todo.trailing_zeros() as usize;
            let class = self.twins.class_mask(self.twins.class_of(w)) & avail;
            // the lowest free twin stands for the whole run
            let rep = class.trailing_zeros() as usize;
            let mut hit = 0u64;
            let c = self.canonical(avail, None, Some(rep));
            let _ = search_copies(self.g, &self.pat, &c, |im| {
                for &x in im {
                    hit |= bit(x);
                }
                ControlFlow::Break(())
            });
            if hit == 0 {
                if stop_on_gap {
                    return covered;
                }
                todo &= !class;
                continue;
            }
            let gained = self.twins.closure(hit) & avail;
            covered |= gained | class;
            todo &= !covered;
        }
        covered
    }

    fn copies_from(&self, avail: u64, v: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let c = self.canonical(avail, Some(v), None);
        let _ = search_copies(self.g, &self.pat, &c, |im| {
            out.push(im.to_vec());
            ControlFlow::Continue(())
        });
        out
    }

    fn perfect(&mut self, avail: u64) -> Result<bool, OutOfBudget> {
        if avail == 0 {
            return Ok(true);
        }
        self.tick()?;
        if self.coverable(avail, true) != avail {
            return Ok(false);
        }
        let v = avail.trailing_zeros() as usize;
        for copy in self.copies_from(avail, v) {
            let mask = copy.iter().fold(0u64, |m, &x| m | bit(x));
            self.stack.push(copy);
            if self.perfect(avail & !mask)? {
                return Ok(true);
            }
            self.stack.pop();
        }
        Ok(false)
    }
}

struct MaxState {
    best: usize,
    best_copies: Vec<Vec<usize>>,
    target: Option<usize>,
}

impl Tiler<'_> {
    fn maximum(&mut self, avail: u64, st: &mut MaxState) -> Result<ControlFlow<()>, OutOfBudget> {
        self.tick()?;
        let count = self.stack.len();
        if count > st.best || st.best_copies.is_empty() && count == st.best {
            st.best = count;
            st.best_copies = self.stack.clone();
        }
        if st.target.is_some_and(|t| count >= t) {
            return Ok(ControlFlow::Break(()));
        }
        let avail = self.coverable(avail, false);
        let bound = count + avail.count_ones() as usize / self.h;
        if avail == 0 || bound <= st.best {
            return Ok(ControlFlow::Continue(()));
        }
        let v = avail.trailing_zeros() as usize;
        for copy in self.copies_from(avail, v) {
            let mask = copy.iter().fold(0u64, |m, &x| m | bit(x));
            self.stack.push(copy);
            let flow = self.maximum(avail & !mask, st)?;
            self.stack.pop();
            if flow.is_break() {
                return Ok(flow);
            }
        }
        let run = self.twins.class_mask(self.twins.class_of(v));
        self.maximum(avail & !run, st)
    }
}

fn sorted_witness(mut copies: Vec<Vec<usize>>) -> TilingWitness {
    copies.sort();
    TilingWitness { copies }
}

/// Decides whether `g` has a perfect `h`-tiling.
pub fn perfect_tiling(g: &OrderedGraph, h: &OrderedGraph, budget: Budget) -> TilingAnswer {
    if !g.order().is_multiple_of(h.order()) {
        return TilingAnswer { status: TilingStatus::NoPerfect, witness: None, nodes: 0 };
    }
    let mut t = Tiler::new(g, h, budget);
    let res = t.perfect(g.all_vertices());
    let nodes = t.nodes;
    match res {
        Ok(true) => TilingAnswer { status: TilingStatus::PerfectFound, witness: Some(sorted_witness(t.stack)), nodes },
        Ok(false) => TilingAnswer { status: TilingStatus::NoPerfect, witness: None, nodes },
        Err(OutOfBudget) => TilingAnswer { status: TilingStatus::Timeout, witness: None, nodes },
    }
}

/// Maximum number of disjoint copies, or with `target` the decision whether
/// `target` disjoint copies exist. On timeout the best tiling seen so far is
/// attached.
pub fn max_tiling(g: &OrderedGraph, h: &OrderedGraph, target: Option<usize>, budget: Budget) -> TilingAnswer {
    let mut t = Tiler::new(g, h, budget);
    let mut st = MaxState { best: 0, best_copies: Vec::new(), target };
    let res = t.maximum(g.all_vertices(), &mut st);
    let witness = Some(sorted_witness(st.best_copies));
    let status = match (res, target) {
        (Err(OutOfBudget), _) => TilingStatus::Timeout,
        (Ok(_), None) => TilingStatus::MaxCover(st.best),
        (Ok(_), Some(k)) if st.best >= k => TilingStatus::TargetMet(st.best),
        (Ok(_), Some(_)) => TilingStatus::TargetMissed { best: st.best },
    };
    TilingAnswer { status, witness, nodes: t.nodes }
}

/// Vertices of `g` lying in no copy of `h`, in increasing order.
pub fn h_cover(g: &OrderedGraph, h: &OrderedGraph) -> Vec<usize> {
    let t = Tiler::new(g, h, Budget(u64::MAX));
    let covered = t.coverable(g.all_vertices(), false);
    bits(g.all_vertices() & !covered).collect()
}

/// Checks a witness against the definition: each copy is an increasing
/// edge-preserving image of `h`, copies are disjoint, and with
/// `require_perfect` every host vertex is covered.
pub fn verify_tiling(host: &impl Host, h: &OrderedGraph, w: &TilingWitness, require_perfect: bool) -> bool {
    let n = host.order();
    let mut seen = alloc::vec![false; n];
    let pattern_edges: Vec<(usize, usize)> = h.edges().collect();
    for copy in &w.copies {
        if copy.len() != h.order() {
            return false;
        }
        for k in 0..copy.len() {
            if copy[k] >= n || (k > 0 && copy[k - 1] >= copy[k]) {
                return false;
            }
            if seen[copy[k]] {
                return false;
            }
            seen[copy[k]] = true;
        }
        for &(a, b) in &pattern_edges {
            if !host.is_adjacent(copy[a], copy[b]) {
                return false;
            }
        }
    }
    !require_perfect || seen.iter().all(|&s| s)
}
