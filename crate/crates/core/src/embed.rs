//! Order-preserving, edge-preserving copies of a pattern inside a host.

use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::graph::{bit, range_mask, Host, OrderedGraph, TwinClasses};

/// Images of the pattern vertices `0..h`, strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Embedding {
    pub images: Vec<usize>,
}

/// Pattern vertex `p` together with its earlier neighbours as a mask over
/// pattern vertices.
pub(crate) struct Pattern {
    order: usize,
    back: Vec<u64>,
}

impl Pattern {
    pub(crate) fn new(h: &OrderedGraph) -> Self {
        let back = (0..h.order()).map(|p| h.neighbours(p) & range_mask(0, p)).collect();
        Pattern { order: h.order(), back }
    }
}

/// Restrictions applied by the tiling search on top of plain containment.
pub(crate) struct Constraints<'a> {
    /// Host vertices the copy may use.
    pub allowed: u64,
    /// Vertex that must be the first image.
    pub first: Option<usize>,
    /// Vertex that must appear among the images.
    pub anchor: Option<usize>,
    /// Copies must use the lowest allowed members of every twin class they meet.
    pub twins: Option<&'a TwinClasses>,
}

impl Constraints<'_> {
    pub(crate) fn within(allowed: u64) -> Self {
        Constraints { allowed, first: None, anchor: None, twins: None }
    }
}

struct Search<'a, F> {
    g: &'a OrderedGraph,
    pat: &'a Pattern,
    c: &'a Constraints<'a>,
    images: Vec<usize>,
    used: u64,
    visit: F,
}

impl<F: FnMut(&[usize]) -> ControlFlow<()>> Search<'_, F> {
    fn go(&mut self, p: usize) -> ControlFlow<()> {
        let h = self.pat.order;
        if p == h {
            if let Some(a) = self.c.anchor {
                if self.used & bit(a) == 0 {
                    return ControlFlow::Continue(());
                }
            }
            return (self.visit)(&self.images);
        }
        let n = self.g.order();
        let lo = self.images.last().map_or(0, |&x| x + 1);
        // leave room for the remaining h - p - 1 pattern vertices
        let hi = n + p + 1 - h;
        let mut cand = self.c.allowed & range_mask(lo, hi);
        if p == 0 {
            if let Some(f) = self.c.first {
                cand &= bit(f);
            }
        }
        if let Some(a) = self.c.anchor {
            if self.used & bit(a) == 0 {
                // images beyond the anchor would skip it for good
                cand &= range_mask(0, a + 1);
            }
        }
        let mut back = self.pat.back[p];
        while back != 0 {
            let q = back.trailing_zeros() as usize;
            back &= back - 1;
            cand &= self.g.neighbours(self.images[q]);
        }
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if let Some(t) = self.c.twins {
                let class = t.class_mask(t.class_of(v));
                if self.c.allowed & class & !self.used & range_mask(0, v) != 0 {
                    continue;
                }
            }
            self.images.push(v);
            self.used |= bit(v);
            let flow = self.go(p + 1);
            self.used &= !bit(v);
            self.images.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Depth-first copy search in pattern-label order. The visitor sees the
/// images of each copy found, in lexicographic order of the image sequence.
pub(crate) fn search_copies<F>(g: &OrderedGraph, pat: &Pattern, c: &Constraints<'_>, visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if pat.order > g.order() {
        return ControlFlow::Continue(());
    }
    let mut s = Search { g, pat, c, images: Vec::with_capacity(pat.order), used: 0, visit };
    s.go(0)
}

fn anchored(g: &OrderedGraph, anchor: Option<usize>) -> Constraints<'static> {
    Constraints { anchor, ..Constraints::within(g.all_vertices()) }
}

/// Streams every copy of `h` in `g`, optionally only those whose image
/// contains `anchor`. The visitor may stop the walk by returning `Break`.
pub fn for_each_copy<F>(g: &OrderedGraph, h: &OrderedGraph, anchor: Option<usize>, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&Embedding) -> ControlFlow<()>,
{
    let pat = Pattern::new(h);
    search_copies(g, &pat, &anchored(g, anchor), |im| visit(&Embedding { images: im.to_vec() }))
}

/// All copies of `h` in `g` in lexicographic order of their images.
pub fn enumerate_copies(g: &OrderedGraph, h: &OrderedGraph, anchor: Option<usize>) -> Vec<Embedding> {
    let mut out = Vec::new();
    let _ = for_each_copy(g, h, anchor, |e| {
        out.push(e.clone());
        ControlFlow::Continue(())
    });
    out
}

pub fn count_copies(g: &OrderedGraph, h: &OrderedGraph, anchor: Option<usize>) -> usize {
    let pat = Pattern::new(h);
    let mut n = 0;
    let _ = search_copies(g, &pat, &anchored(g, anchor), |_| {
        n += 1;
        ControlFlow::Continue(())
    });
    n
}

/// Returns the first copy found, if any.
pub fn find_copy(g: &OrderedGraph, h: &OrderedGraph, anchor: Option<usize>) -> Option<Embedding> {
    let pat = Pattern::new(h);
    let mut found = None;
    let _ = search_copies(g, &pat, &anchored(g, anchor), |im| {
        found = Some(Embedding { images: im.to_vec() });
        ControlFlow::Break(())
    });
    found
}

/// Checks an embedding directly against the definition.
pub fn is_embedding(host: &impl Host, h: &OrderedGraph, images: &[usize]) -> bool {
    images.len() == h.order()
        && images.windows(2).all(|w| w[0] < w[1])
        && images.last().is_none_or(|&x| x < host.order())
        && h.edges().all(|(a, b)| host.is_adjacent(images[a], images[b]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge() -> OrderedGraph {
        OrderedGraph::new(2, [(1, 2)]).unwrap()
    }

    #[test]
    fn counts() {
        let k4 = OrderedGraph::complete(4).unwrap();
        assert_eq!(count_copies(&k4, &edge(), None), 6);
        let fig2 = OrderedGraph::new(7, [(1, 3), (3, 5), (5, 7)]).unwrap();
        assert_eq!(count_copies(&fig2, &edge(), None), 3);
        assert_eq!(count_copies(&fig2, &edge(), Some(2)), 2);
        assert_eq!(count_copies(&fig2, &edge(), Some(1)), 0);
        assert!(find_copy(&fig2, &k4, None).is_none());
    }

    #[test]
    fn enumeration_is_lexicographic_and_verified() {
        let k4 = OrderedGraph::complete(4).unwrap();
        let p = OrderedGraph::new(3, [(1, 3)]).unwrap();
        let all = enumerate_copies(&k4, &p, None);
        assert_eq!(all.len(), 4);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|e| is_embedding(&k4, &p, &e.images)));
    }

    #[test]
    fn twin_constraint_keeps_lowest() {
        // K_{1,3} ordered with the centre first: leaves 1..3 are twins
        let g = OrderedGraph::new(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
        let t = TwinClasses::of(&g);
        let pat = Pattern::new(&edge());
        let c = Constraints { twins: Some(&t), ..Constraints::within(g.all_vertices()) };
        let mut seen = Vec::new();
        let _ = search_copies(&g, &pat, &c, |im| {
            seen.push(im.to_vec());
            ControlFlow::Continue(())
        });
        assert_eq!(seen, [[0, 1]]);
    }
}
