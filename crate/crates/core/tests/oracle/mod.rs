//! Brute-force reference implementations written straight from the
//! definitions. Shared by the integration and acceptance tests.
#![allow(dead_code)]

use ordtile_core::OrderedGraph;

/// All ways to cut `0..h` into `k` consecutive intervals, as length vectors.
/// Empty intervals appear only when `allow_empty` is set.
pub fn compositions(h: usize, k: usize, allow_empty: bool) -> Vec<Vec<usize>> {
    fn rec(left: usize, k: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            if left >= min {
                cur.push(left);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for a in min..=left {
            cur.push(a);
            rec(left - a, k - 1, min, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        rec(h, k, usize::from(!allow_empty), &mut Vec::new(), &mut out);
    }
    out
}

/// Whether every interval in `lengths` spans no edge.
pub fn proper(g: &OrderedGraph, lengths: &[usize]) -> bool {
    let mut start = 0;
    for &l in lengths {
        for a in start..start + l {
            for b in a + 1..start + l {
                if g.is_adjacent(a, b) {
                    return false;
                }
            }
        }
        start += l;
    }
    true
}

pub fn chi_lt(g: &OrderedGraph) -> usize {
    let h = g.order();
    (1..=h).find(|&r| compositions(h, r, false).iter().any(|c| proper(g, c))).unwrap()
}

/// First pair `(i, j)` in lexicographic order satisfying the local-barrier
/// definition.
pub fn local_barrier(g: &OrderedGraph) -> Option<(usize, usize)> {
    let r = chi_lt(g);
    let cols: Vec<Vec<usize>> = compositions(g.order(), r + 1, true).into_iter().filter(|c| proper(g, c)).collect();
    for i in 1..=r + 1 {
        for j in (1..=r + 1).filter(|&j| j != i) {
            let holds = cols.iter().filter(|c| c[i - 1] == 1).all(|c| {
                let v: usize = c[..i - 1].iter().sum();
                let s: usize = c[..j - 1].iter().sum();
                (s..s + c[j - 1]).any(|w| g.is_adjacent(v, w))
            });
            if holds {
                return Some((i, j));
            }
        }
    }
    None
}

/// Flexibility by the definition: each boundary `i < r` has an `(r+1)`-colouring
/// whose class `i+1` is a singleton that can join either neighbour, leaving a
/// proper `r`-colouring with nonempty classes.
pub fn flexible(g: &OrderedGraph) -> bool {
    let r = chi_lt(g);
    let cols: Vec<Vec<usize>> = compositions(g.order(), r + 1, true).into_iter().filter(|c| proper(g, c)).collect();
    (1..r).all(|i| {
        cols.iter().any(|c| {
            if c[i] != 1 {
                return false;
            }
            let merged = |side: usize| {
                let mut m = c.clone();
                m[side] += 1;
                m.remove(i);
                m.iter().all(|&x| x > 0) && proper(g, &m)
            };
            merged(i - 1) && merged(i + 1)
        })
    })
}

/// Boundaries whose prefix count is the same in every interval `r`-colouring.
pub fn fixed_prefixes(g: &OrderedGraph) -> Vec<usize> {
    let r = chi_lt(g);
    let cols: Vec<Vec<usize>> = compositions(g.order(), r, false).into_iter().filter(|c| proper(g, c)).collect();
    (1..r)
        .filter(|&i| {
            let p = |c: &Vec<usize>| c[..i].iter().sum::<usize>();
            cols.iter().all(|c| p(c) == p(&cols[0]))
        })
        .collect()
}

/// Every increasing `k`-subset of `0..n`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All order-preserving copies of `h` in `g`.
pub fn copies(g: &OrderedGraph, h: &OrderedGraph) -> Vec<Vec<usize>> {
    subsets(g.order(), h.order()).into_iter().filter(|s| h.edges().all(|(a, b)| g.is_adjacent(s[a], s[b]))).collect()
}

/// Vertices lying in some copy of `h`.
pub fn covered(g: &OrderedGraph, h: &OrderedGraph) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    for c in copies(g, h) {
        for v in c {
            seen[v] = true;
        }
    }
    (0..g.order()).filter(|&v| seen[v]).collect()
}

/// Largest number of vertex-disjoint copies, by branching on the lowest vertex
/// that is still undecided: either it stays uncovered or some copy through it
/// is taken.
pub fn max_disjoint(g: &OrderedGraph, h: &OrderedGraph) -> usize {
    fn rec(v: usize, used: u64, all: &[Vec<usize>], n: usize) -> usize {
        if v == n {
            return 0;
        }
        if used >> v & 1 == 1 {
            return rec(v + 1, used, all, n);
        }
        let mut best = rec(v + 1, used | 1 << v, all, n);
        for c in all.iter().filter(|c| c[0] == v) {
            let mask = c.iter().fold(0u64, |m, &w| m | 1 << w);
            if mask & used == 0 {
                best = best.max(1 + rec(v + 1, used | mask, all, n));
            }
        }
        best
    }
    rec(0, 0, &copies(g, h), g.order())
}

pub fn has_perfect(g: &OrderedGraph, h: &OrderedGraph) -> bool {
    g.order().is_multiple_of(h.order()) && max_disjoint(g, h) * h.order() == g.order()
}
