//! Complete multipartite graphs, their orderings, bottlegraph checks and the
//! explicit tilings behind the upper bound and the flexible frame.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::colouring::greedy_colouring;
use crate::critical::colouring_statistics;
use crate::graph::{Host, OrderedGraph, MAX_ORDER};
use crate::rational::{from_usize, Rational};
use crate::structure::{is_flexible, Flexibility};
use crate::tiling::{perfect_tiling, verify_tiling, Budget, TilingStatus, TilingWitness};
use crate::{Error, Result};

/// Part sizes of a complete multipartite graph, sorted in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompleteMultipartite {
    sizes: Vec<usize>,
}

impl CompleteMultipartite {
    pub fn new(mut sizes: Vec<usize>) -> Result<Self> {
        check_sizes(&sizes)?;
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CompleteMultipartite { sizes })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn parts(&self) -> usize {
        self.sizes.len()
    }

    pub fn order(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn smallest(&self) -> usize {
        *self.sizes.last().unwrap()
    }

    /// All parts but one share a size `m` and the remaining part is no larger.
    pub fn is_bottle_shaped(&self) -> bool {
        let m = self.sizes[0];
        self.sizes[..self.parts() - 1].iter().all(|&s| s == m)
    }

    pub fn crit_chrom(&self) -> Result<Rational> {
        crit_chrom(self)
    }
}

impl fmt::Display for CompleteMultipartite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sizes(f, &self.sizes)
    }
}

fn write_sizes(f: &mut fmt::Formatter<'_>, sizes: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (k, s) in sizes.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{s}")?;
    }
    write!(f, ")")
}

fn check_sizes(sizes: &[usize]) -> Result<()> {
    if sizes.is_empty() {
        return Err(Error::BadParts { needed: "at least one part", detail: String::from("no parts given") });
    }
    if sizes.contains(&0) {
        return Err(Error::BadParts { needed: "positive part sizes", detail: format!("{sizes:?}") });
    }
    Ok(())
}

/// A complete multipartite ordered graph whose parts are consecutive
/// intervals of the given sizes, left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedMultipartite {
    sizes: Vec<usize>,
    ends: Vec<usize>,
}

impl OrderedMultipartite {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        check_sizes(&sizes)?;
        let ends = sizes
            .iter()
            .scan(0, |acc, &s| {
                *acc += s;
                Some(*acc)
            })
            .collect();
        Ok(OrderedMultipartite { sizes, ends })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn parts(&self) -> usize {
        self.sizes.len()
    }

    /// 0-based index of the part containing vertex `v`.
    pub fn part_of(&self, v: usize) -> usize {
        self.ends.partition_point(|&e| e <= v)
    }

    /// First vertex of part `k`.
    pub fn part_start(&self, k: usize) -> usize {
        self.ends[k] - self.sizes[k]
    }

    pub fn blow_up(&self, t: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidParameters(String::from("blow-up factor must be positive")));
        }
        Self::new(self.sizes.iter().map(|s| s * t).collect())
    }

    pub fn unordered(&self) -> CompleteMultipartite {
        CompleteMultipartite::new(self.sizes.clone()).unwrap()
    }

    /// The explicit graph; fails above [`MAX_ORDER`] vertices.
    pub fn to_graph(&self) -> Result<OrderedGraph> {
        OrderedGraph::from_fn(Host::order(self), |a, b| self.part_of(a) != self.part_of(b))
    }
}

impl Host for OrderedMultipartite {
    fn order(&self) -> usize {
        *self.ends.last().unwrap()
    }

    fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.part_of(a) != self.part_of(b)
    }
}

impl fmt::Display for OrderedMultipartite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sizes(f, &self.sizes)
    }
}

/// `(k-1)|B| / (|B| - smallest part)`.
pub fn crit_chrom(b: &CompleteMultipartite) -> Result<Rational> {
    let k = b.parts();
    if k < 2 {
        return Err(Error::BadParts { needed: "at least two parts", detail: format!("{b}") });
    }
    let n = b.order();
    Ok(from_usize((k - 1) * n) / from_usize(n - b.smallest()))
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// One ordering per distinct size sequence, in lexicographic order.
pub fn distinct_orderings(b: &CompleteMultipartite) -> Vec<OrderedMultipartite> {
    let mut seq: Vec<usize> = b.sizes().iter().rev().copied().collect();
    let mut out = Vec::new();
    loop {
        out.push(OrderedMultipartite::new(seq.clone()).unwrap());
        if !next_permutation(&mut seq) {
            break;
        }
    }
    out
}

/// The equivalent bottle shape: one part of `(k-1)*min` and `k-1` parts of
/// `|B| - min`. The critical chromatic number is unchanged.
pub fn normalize_bottleshape(b: &CompleteMultipartite) -> Result<CompleteMultipartite> {
    let k = b.parts();
    if k < 2 {
        return Err(Error::BadParts { needed: "at least two parts", detail: format!("{b}") });
    }
    let (n, s) = (b.order(), b.smallest());
    let mut sizes = alloc::vec![n - s; k - 1];
    sizes.push((k - 1) * s);
    CompleteMultipartite::new(sizes)
}

/// Analytic reasons why a complete multipartite graph is not a bottlegraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Fewer parts than the interval chromatic number.
    PartCount { parts: usize, chi_lt: usize },
    /// `crit < h / l-` where `l-` is the largest possible first class.
    CountingFirstPart { crit: Rational, h: usize, ell_minus: usize },
    /// `crit < h / l-*` where `l-*` is the largest possible last class.
    CountingLastPart { crit: Rational, h: usize, ell_minus_star: usize },
    /// Exactly `r` parts and `crit < (r-1) + (r-1)/(h-1)`.
    StrongLower { crit: Rational, r: usize, h: usize },
}

impl Certificate {
    pub fn name(&self) -> &'static str {
        match self {
            Certificate::PartCount { .. } => "PartCount",
            Certificate::CountingFirstPart { .. } => "CountingFirstPart",
            Certificate::CountingLastPart { .. } => "CountingLastPart",
            Certificate::StrongLower { .. } => "StrongLower",
        }
    }

    /// Re-evaluates the certificate's inequality.
    pub fn holds(&self) -> bool {
        match *self {
            Certificate::PartCount { parts, chi_lt } => parts < chi_lt,
            Certificate::CountingFirstPart { crit, h, ell_minus } => crit < from_usize(h) / from_usize(ell_minus),
            Certificate::CountingLastPart { crit, h, ell_minus_star } => {
                crit < from_usize(h) / from_usize(ell_minus_star)
            }
            Certificate::StrongLower { crit, r, h } => {
                h >= 2 && crit < from_usize(r - 1) + from_usize(r - 1) / from_usize(h - 1)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BottleStatus {
    /// Every ordering tiles perfectly without blowing up.
    SimpleYes,
    /// This ordering has no perfect tiling, so the graph is not a simple bottlegraph.
    NotSimple {
        ordering: Vec<usize>,
    },
    /// Every ordering tiles perfectly after some blow-up within the bound.
    BoundedYes,
    No(Certificate),
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingOutcome {
    pub ordering: Vec<usize>,
    /// Blow-up factor that tiled, if any.
    pub t: Option<usize>,
    pub witness: Option<TilingWitness>,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BottleVerdict {
    pub status: BottleStatus,
    pub orderings: Vec<OrderingOutcome>,
}

/// Checks every distinct ordering of `b` for a perfect `h`-tiling, stopping
/// at the first ordering that fails.
pub fn check_simple_bottlegraph(b: &CompleteMultipartite, h: &OrderedGraph, budget: Budget) -> Result<BottleVerdict> {
    if !b.order().is_multiple_of(h.order()) {
        return Err(Error::Indivisible { pattern: h.order(), host: b.order() });
    }
    if b.order() > MAX_ORDER {
        return Err(Error::OrderTooLarge { order: b.order(), max: MAX_ORDER });
    }
    let mut orderings = Vec::new();
    for ord in distinct_orderings(b) {
        let g = ord.to_graph()?;
        let ans = perfect_tiling(&g, h, budget);
        let seq = ord.sizes().to_vec();
        let found = ans.status == TilingStatus::PerfectFound;
        orderings.push(OrderingOutcome {
            ordering: seq.clone(),
            t: found.then_some(1),
            witness: ans.witness,
            nodes: ans.nodes,
        });
        match ans.status {
            TilingStatus::PerfectFound => {}
            TilingStatus::Timeout => return Ok(BottleVerdict { status: BottleStatus::Unknown, orderings }),
            _ => return Ok(BottleVerdict { status: BottleStatus::NotSimple { ordering: seq }, orderings }),
        }
    }
    Ok(BottleVerdict { status: BottleStatus::SimpleYes, orderings })
}

/// The first analytic obstruction that applies to `b` as a bottlegraph of `h`.
pub fn bottle_certificate(b: &CompleteMultipartite, h: &OrderedGraph) -> Option<Certificate> {
    let stats = colouring_statistics(h);
    let r = stats.r;
    if b.parts() < r {
        return Some(Certificate::PartCount { parts: b.parts(), chi_lt: r });
    }
    let crit = crit_chrom(b).ok()?;
    let n = h.order();
    let candidates = [
        Certificate::CountingFirstPart { crit, h: n, ell_minus: stats.ell_minus },
        Certificate::CountingLastPart { crit, h: n, ell_minus_star: stats.ell_minus_star },
    ];
    if let Some(c) = candidates.into_iter().find(Certificate::holds) {
        return Some(c);
    }
    let strong = Certificate::StrongLower { crit, r, h: n };
    (b.parts() == r && strong.holds()).then_some(strong)
}

/// Looks for the least blow-up `t <= t_max` of every ordering that tiles
/// perfectly, after first trying the analytic certificates.
pub fn check_bottlegraph_bounded(
    b: &CompleteMultipartite,
    h: &OrderedGraph,
    t_max: usize,
    budget: Budget,
) -> Result<BottleVerdict> {
    if let Some(c) = bottle_certificate(b, h) {
        return Ok(BottleVerdict { status: BottleStatus::No(c), orderings: Vec::new() });
    }
    // failed blow-ups keyed by the blown-up size sequence
    let mut failed: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
    let mut orderings = Vec::new();
    let mut all = true;
    for ord in distinct_orderings(b) {
        let mut outcome = OrderingOutcome { ordering: ord.sizes().to_vec(), t: None, witness: None, nodes: 0 };
        let mut timed_out = false;
        for t in 1..=t_max {
            let big = ord.blow_up(t)?;
            let n = Host::order(&big);
            if n > MAX_ORDER {
                break;
            }
            if n % h.order() != 0 || failed.contains_key(big.sizes()) {
                continue;
            }
            let ans = perfect_tiling(&big.to_graph()?, h, budget);
            outcome.nodes += ans.nodes;
            match ans.status {
                TilingStatus::PerfectFound => {
                    outcome.t = Some(t);
                    outcome.witness = ans.witness;
                    break;
                }
                TilingStatus::Timeout => timed_out = true,
                _ => {
                    failed.insert(big.sizes().to_vec(), ());
                }
            }
        }
        let ok = outcome.t.is_some();
        orderings.push(outcome);
        if !ok {
            all = false;
            if !timed_out {
                break;
            }
        }
    }
    let status = if all { BottleStatus::BoundedYes } else { BottleStatus::Unknown };
    Ok(BottleVerdict { status, orderings })
}

/// Cuts each part of an ordered multipartite host into consecutive blocks,
/// one per copy, following the per-part class sizes of each copy type.
/// `types` lists `(class sizes, number of copies)`; the copy types must be
/// length vectors of proper interval colourings of the pattern.
pub fn assemble_tiling(host: &OrderedMultipartite, types: &[(Vec<usize>, usize)]) -> Result<TilingWitness> {
    let k = host.parts();
    let mut cursor: Vec<usize> = (0..k).map(|p| host.part_start(p)).collect();
    let mut copies = Vec::new();
    for (sizes, count) in types {
        if sizes.len() != k {
            return Err(Error::InvalidParameters(format!("copy type {sizes:?} does not have {k} classes")));
        }
        for _ in 0..*count {
            let mut copy = Vec::with_capacity(sizes.iter().sum());
            for (p, &s) in sizes.iter().enumerate() {
                let end = host.part_start(p) + host.sizes()[p];
                if cursor[p] + s > end {
                    return Err(Error::InvalidParameters(format!("part {} overflows", p + 1)));
                }
                copy.extend(cursor[p]..cursor[p] + s);
                cursor[p] += s;
            }
            copies.push(copy);
        }
    }
    Ok(TilingWitness { copies })
}

/// The bottlegraph behind the upper bound `h / l+`, with an explicit perfect
/// tiling of each of its orderings.
#[derive(Debug, Clone)]
pub struct UpperBoundConstruction {
    pub bottle: CompleteMultipartite,
    /// Interval colouring of the pattern whose smallest class is `l+`.
    pub colouring: Vec<usize>,
    pub ell_plus: usize,
    scale: usize,
}

/// Largest pattern order accepted by [`upperbound_construction`]; the host
/// has `h * h!` vertices.
pub const UPPERBOUND_MAX_PATTERN: usize = 7;

pub fn upperbound_construction(h: &OrderedGraph) -> Result<UpperBoundConstruction> {
    let n = h.order();
    if n > UPPERBOUND_MAX_PATTERN {
        return Err(Error::Unsupported(format!(
            "explicit construction needs h! copies; h = {n} exceeds {UPPERBOUND_MAX_PATTERN}"
        )));
    }
    let stats = colouring_statistics(h);
    let ell = stats.ell_plus;
    let scale: usize = (1..=n).product();
    let k = n / ell;
    let mut sizes = alloc::vec![ell * scale; k];
    let rest = (n - k * ell) * scale;
    if rest > 0 {
        sizes.push(rest);
    }
    Ok(UpperBoundConstruction {
        bottle: CompleteMultipartite::new(sizes)?,
        colouring: stats.ell_plus_colouring,
        ell_plus: ell,
        scale,
    })
}

impl UpperBoundConstruction {
    /// The tiling `T_1, ..., T_{h!}`: copy `j` takes the `j`-th block of
    /// `|H_i|` vertices from the `i`-th stretch of `|H_i| * h!` vertices.
    /// Works for any arrangement of the parts, which only matters for the
    /// check performed by [`Self::tile_and_verify`].
    pub fn tiling(&self) -> TilingWitness {
        let mut starts = Vec::with_capacity(self.colouring.len());
        let mut t = 0;
        for &c in &self.colouring {
            starts.push(t);
            t += c * self.scale;
        }
        let copies = (0..self.scale)
            .map(|j| self.colouring.iter().zip(&starts).flat_map(|(&c, &s)| s + j * c..s + (j + 1) * c).collect())
            .collect();
        TilingWitness { copies }
    }

    /// Builds the tiling and checks it against `ordering`, which must be an
    /// arrangement of [`Self::bottle`].
    pub fn tile_and_verify(&self, h: &OrderedGraph, ordering: &OrderedMultipartite) -> Result<TilingWitness> {
        if ordering.unordered() != self.bottle {
            return Err(Error::InvalidParameters(format!("{ordering} is not an arrangement of {}", self.bottle)));
        }
        let w = self.tiling();
        if !verify_tiling(ordering, h, &w, true) {
            return Err(Error::Inconsistent(format!("upper-bound tiling fails on {ordering}")));
        }
        Ok(w)
    }
}

/// A perturbed flexible frame together with its perfect tiling.
#[derive(Debug, Clone)]
pub struct FlexibleFrame {
    pub frame: OrderedMultipartite,
    pub witness: TilingWitness,
    /// Unperturbed part sizes `|F_1|, ..., |F_r|`.
    pub base: Vec<usize>,
}

/// Copy types of the unperturbed frame, adjusted by prefix sums of `s`.
fn frame_types(flex: &[Vec<usize>], r: usize, h: usize, s: &[i64]) -> Vec<(Vec<usize>, usize)> {
    let rh = r * h;
    let mut types = Vec::new();
    let mut prefix = 0i64;
    for (i, v) in flex.iter().enumerate() {
        prefix += s.get(i).copied().unwrap_or(0);
        let mut left = v.clone();
        left[i] += 1;
        let mut right = v.clone();
        right[i + 1] += 1;
        // moving t vertices from part i+1 to part i turns t right-merged copies into left-merged ones
        let shift = prefix.unsigned_abs() as usize;
        let (nl, nr) = if prefix >= 0 { (rh + shift, rh - shift) } else { (rh - shift, rh + shift) };
        types.push((left, nl));
        types.push((right, nr));
    }
    types
}

/// Builds the frame with parts `t|F_k| + s_k` and its perfect tiling.
///
/// Either `sum(s) = 0` with `|s_k| <= h`, or every `s_k >= 0` with
/// `sum(s) = l*h` and `l <= t`.
pub fn flexible_frame(h: &OrderedGraph, s: &[i64], t: usize) -> Result<FlexibleFrame> {
    let wit = match is_flexible(h)? {
        Flexibility::Flexible(w) => w,
        Flexibility::Blocked { i } => {
            return Err(Error::Unsupported(format!("pattern is not flexible (boundary {i} is fixed)")))
        }
    };
    let n = h.order();
    let r = wit.r;
    if s.len() != r {
        return Err(Error::InvalidParameters(format!("perturbation needs {r} entries, got {}", s.len())));
    }
    if t == 0 {
        return Err(Error::InvalidParameters(String::from("t must be positive")));
    }
    // class sizes of V^i with the singleton x_i removed
    let flex: Vec<Vec<usize>> = wit
        .colourings
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let l = c.lengths();
            l[..=i].iter().chain(&l[i + 2..]).copied().collect()
        })
        .collect();
    let plain = frame_types(&flex, r, n, &[]);
    let base: Vec<usize> = (0..r).map(|k| plain.iter().map(|(v, c)| v[k] * c).sum()).collect();

    let sum: i64 = s.iter().sum();
    let hh = n as i64;
    let mut types: Vec<(Vec<usize>, usize)> = Vec::new();
    if sum == 0 && s.iter().all(|x| x.abs() <= hh) {
        if t > 1 {
            types.extend(plain.iter().map(|(v, c)| (v.clone(), c * (t - 1))));
        }
        types.extend(frame_types(&flex, r, n, s));
    } else if s.iter().all(|&x| x >= 0) && sum % hh == 0 && (sum / hh) as usize <= t {
        let rounds = (sum / hh) as usize;
        if t > rounds {
            types.extend(plain.iter().map(|(v, c)| (v.clone(), c * (t - rounds))));
        }
        let q = greedy_colouring(h);
        let q = q.lengths();
        let mut rest: Vec<i64> = s.to_vec();
        for _ in 0..rounds {
            // take h of the surplus, greedily from the left
            let mut need = hh;
            let mut part = alloc::vec![0i64; r];
            for k in 0..r {
                let d = rest[k].min(need);
                part[k] = d;
                rest[k] -= d;
                need -= d;
            }
            types.push((q.to_vec(), 1));
            let shift: Vec<i64> = (0..r).map(|k| part[k] - q[k] as i64).collect();
            types.extend(frame_types(&flex, r, n, &shift));
        }
    } else {
        return Err(Error::InvalidParameters(format!(
            "perturbation {s:?} must sum to 0 with entries within {n}, or be non-negative summing to a multiple of {n} no larger than {t}*{n}"
        )));
    }
    let sizes: Vec<usize> = (0..r)
        .map(|k| usize::try_from(t as i64 * base[k] as i64 + s[k]))
        .collect::<core::result::Result<_, _>>()
        .map_err(|_| Error::InvalidParameters(String::from("perturbation empties a part")))?;
    let frame = OrderedMultipartite::new(sizes)?;
    let witness = assemble_tiling(&frame, &types)?;
    if !verify_tiling(&frame, h, &witness, true) {
        return Err(Error::Inconsistent(format!("flexible frame tiling fails on {frame}")));
    }
    Ok(FlexibleFrame { frame, witness, base })
}
