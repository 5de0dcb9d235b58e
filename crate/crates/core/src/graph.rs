//! Vertex-ordered graphs stored as one adjacency word per vertex.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Largest order an [`OrderedGraph`] may have, so that any vertex set fits a `u64`.
pub const MAX_ORDER: usize = 63;

/// Anything that can act as a host for copies of a pattern: an explicit
/// [`OrderedGraph`] or a symbolic complete multipartite ordered graph.
pub trait Host {
    fn order(&self) -> usize;
    /// Adjacency of two 0-based vertices.
    fn is_adjacent(&self, a: usize, b: usize) -> bool;
}

/// A graph on vertices `0..h`, where the vertex order is the labelling.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedGraph {
    order: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask of the half-open vertex range `start..end`.
#[inline]
pub(crate) fn range_mask(start: usize, end: usize) -> u64 {
    debug_assert!(start <= end && end <= 64);
    if start >= end {
        return 0;
    }
    let hi = if end == 64 { u64::MAX } else { (1u64 << end) - 1 };
    hi & !((1u64 << start) - 1)
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl OrderedGraph {
    /// Builds a graph from 1-based labelled edges `(u, v)` with `u < v`.
    pub fn new<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(order)?;
        for (u, v) in edges {
            if u == 0 || u >= v || v > order {
                return Err(Error::BadEdge { u, v, order });
            }
            if g.is_adjacent(u - 1, v - 1) {
                return Err(Error::DuplicateEdge { u, v });
            }
            g.add_edge(u - 1, v - 1);
        }
        Ok(g)
    }

    pub fn empty(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge { order, max: MAX_ORDER });
        }
        Ok(OrderedGraph { order, adj: alloc::vec![0; order] })
    }

    /// The ordered complete graph `K_h`.
    pub fn complete(order: usize) -> Result<Self> {
        let mut g = Self::empty(order)?;
        for a in 0..order {
            g.adj[a] = range_mask(0, order) & !bit(a);
        }
        Ok(g)
    }

    /// Builds a graph from a 0-based adjacency predicate.
    pub fn from_fn(order: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut g = Self::empty(order)?;
        for a in 0..order {
            for b in a + 1..order {
                if adjacent(a, b) {
                    g.add_edge(a, b);
                }
            }
        }
        Ok(g)
    }

    /// Decodes the `e`-th edge subset of `K_h`, with bit `k` of `mask` standing
    /// for the `k`-th pair in lexicographic order.
    pub fn from_edge_mask(order: usize, mask: u64) -> Result<Self> {
        let mut g = Self::empty(order)?;
        let mut k = 0;
        for a in 0..order {
            for b in a + 1..order {
                if mask >> k & 1 == 1 {
                    g.add_edge(a, b);
                }
                k += 1;
            }
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, a: usize, b: usize) {
        self.adj[a] |= bit(b);
        self.adj[b] |= bit(a);
    }

    /// Returns a copy with the 0-based edge `a-b` added.
    pub fn with_edge(&self, a: usize, b: usize) -> Self {
        let mut g = self.clone();
        g.add_edge(a, b);
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a] & bit(b) != 0
    }

    /// Neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as 0-based pairs `(a, b)`, `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |a| bits(self.adj[a] & !range_mask(0, a + 1)).map(move |b| (a, b)))
    }

    pub fn all_vertices(&self) -> u64 {
        range_mask(0, self.order)
    }

    /// True when no edge has both endpoints in `mask`.
    pub fn is_independent(&self, mask: u64) -> bool {
        bits(mask).all(|v| self.adj[v] & mask == 0)
    }

    /// True when the vertex interval `start..end` is independent.
    pub fn is_independent_interval(&self, start: usize, end: usize) -> bool {
        self.is_independent(range_mask(start, end))
    }

    /// Length of the longest independent interval beginning at each vertex.
    pub(crate) fn independent_runs(&self) -> Vec<usize> {
        let n = self.order;
        let mut runs = alloc::vec![0; n + 1];
        for (s, run) in runs.iter_mut().enumerate().take(n) {
            let mut e = s;
            let mut cur = 0u64;
            while e < n && self.adj[e] & cur == 0 {
                cur |= bit(e);
                e += 1;
            }
            *run = e - s;
        }
        runs
    }

    /// Induced subgraph on the vertices of `mask`, relabelled in order.
    pub fn induced(&self, mask: u64) -> Result<Self> {
        let verts: Vec<usize> = bits(mask & self.all_vertices()).collect();
        Self::from_fn(verts.len(), |a, b| self.is_adjacent(verts[a], verts[b]))
    }
}

impl Host for OrderedGraph {
    fn order(&self) -> usize {
        self.order
    }

    fn is_adjacent(&self, a: usize, b: usize) -> bool {
        OrderedGraph::is_adjacent(self, a, b)
    }
}

impl fmt::Debug for OrderedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderedGraph({}; ", self.order)?;
        let mut first = true;
        for (a, b) in self.edges() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{}-{}", a + 1, b + 1)?;
        }
        write!(f, ")")
    }
}

/// Maximal runs of consecutive, pairwise non-adjacent vertices with identical
/// neighbourhoods. Any permutation inside such a run is an automorphism of the
/// host that also preserves order relative to every vertex outside the run.
#[derive(Debug, Clone)]
pub struct TwinClasses {
    class_of: Vec<usize>,
    masks: Vec<u64>,
}

impl TwinClasses {
    pub fn of(g: &OrderedGraph) -> Self {
        let mut class_of = Vec::with_capacity(g.order());
        let mut masks: Vec<u64> = Vec::new();
        for v in 0..g.order() {
            let joins = v > 0 && {
                let u = v - 1;
                !g.is_adjacent(u, v) && g.neighbours(u) == g.neighbours(v)
            };
            if joins {
                *masks.last_mut().unwrap() |= bit(v);
            } else {
                masks.push(bit(v));
            }
            class_of.push(masks.len() - 1);
        }
        TwinClasses { class_of, masks }
    }

    /// Every vertex in a class of its own.
    pub fn trivial(order: usize) -> Self {
        TwinClasses { class_of: (0..order).collect(), masks: (0..order).map(bit).collect() }
    }

    #[inline]
    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    #[inline]
    pub fn class_mask(&self, class: usize) -> u64 {
        self.masks[class]
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    /// Union of the classes that meet `mask`.
    pub fn closure(&self, mask: u64) -> u64 {
        let mut out = 0;
        for v in bits(mask) {
            out |= self.masks[self.class_of[v]];
        }
        out
    }
}
