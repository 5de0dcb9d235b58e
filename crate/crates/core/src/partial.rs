//! Partial tilings: the threshold profile `f(x, H)` on the classes where it is
//! known exactly, and desk-scale checks of `x`-bottlegraphs.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::critical::{
    chi_star_exact, colouring_statistics, complete_multipartite_parts, ChiStarResult, ColouringStats, SearchEffort,
};
use crate::graph::{OrderedGraph, MAX_ORDER};
use crate::multipartite::{distinct_orderings, CompleteMultipartite, OrderedMultipartite};
use crate::rational::{ceil, floor, from_usize, int, Affine, Rational};
use crate::tiling::{max_tiling, Budget, TilingStatus, TilingWitness};
use crate::{Error, Result};

/// `T = max_i min_C |H_i|`, `J = max_i max_C |H_i|` and `x0 = h / ((r-1)J + T)`.
pub fn tj_x0(g: &OrderedGraph) -> Result<(usize, usize, Rational)> {
    let s = colouring_statistics(g);
    if s.r < 2 {
        return Err(Error::ChromaticTooSmall { required: 2, actual: s.r });
    }
    Ok((s.t, s.j, x0_of(&s)))
}

fn x0_of(s: &ColouringStats) -> Rational {
    from_usize(s.h) / from_usize((s.r - 1) * s.j + s.t)
}

/// `1 - (h - xT) / (h(r-1))`, valid for `x <= x0`, `x < 1`.
pub fn linearresult_value(h: usize, r: usize, t: usize, x: Rational) -> Rational {
    int(1) - (from_usize(h) - x * from_usize(t)) / from_usize(h * (r - 1))
}

fn linearresult_affine(h: usize, r: usize, t: usize) -> Affine {
    let d = from_usize(h * (r - 1));
    Affine::new(int(1) - from_usize(h) / d, from_usize(t) / d)
}

/// `f(x, H)` for complete multipartite `H` with non-decreasing part sizes,
/// evaluated directly from the case split on `(1-x)h/x`.
pub fn pwlinear_value(parts: &[usize], x: Rational) -> Rational {
    let r = parts.len();
    let h: usize = parts.iter().sum();
    let hr = from_usize(h);
    let y = (int(1) - x) * hr / x;
    let c = |t: usize| from_usize(t * parts[t - 1]) - from_usize(parts[..t].iter().sum());
    if y >= c(r) {
        return int(1) - (hr - x * from_usize(parts[r - 1])) / from_usize(h * (r - 1));
    }
    let t = (1..r).find(|&t| c(t) <= y && y < c(t + 1)).expect("some case applies for x in (0, 1]");
    let s_t = from_usize(parts[..t].iter().sum());
    int(1) - ((int(1) - x) * hr + x * s_t) / from_usize(h * t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieceSource {
    /// No edges: nothing needs to be avoided.
    Edgeless,
    /// `x(h - alpha)/h` for `chi_< = 2`.
    Linear,
    /// `1 - (h - xT)/(h(r-1))` for `x <= x0`.
    LinearResult,
    /// Sorted complete multipartite, case `t`.
    PwLinear { t: usize },
    /// Sorted complete multipartite, the small-`x` case.
    PwLinearSmallX,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Piece {
    pub from: Rational,
    pub to: Rational,
    pub to_closed: bool,
    pub f: Affine,
    pub source: PieceSource,
}

/// A range of `x` where only bounds on `f` are known.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gap {
    pub from: Rational,
    pub to: Rational,
    pub to_closed: bool,
    /// `f` is at least this on the gap.
    pub lower: Rational,
    /// `f` is at most this on the gap.
    pub upper: Rational,
}

/// Pieces and gaps are left-open intervals sorted by `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FProfile {
    pub pieces: Vec<Piece>,
    pub gaps: Vec<Gap>,
}

impl FProfile {
    /// The exact value at `x`, when `x` falls in a piece.
    pub fn eval(&self, x: Rational) -> Option<Rational> {
        self.pieces.iter().find(|p| p.from < x && (x < p.to || p.to_closed && x == p.to)).map(|p| p.f.eval(&x))
    }

    /// Limit of `f` as `x` tends to 0 from above.
    pub fn limit_at_zero(&self) -> Option<Rational> {
        self.pieces.first().filter(|p| p.from == int(0)).map(|p| p.f.constant)
    }
}

/// Pieces of the sorted complete multipartite case, merged where formulas agree.
fn pwlinear_pieces(parts: &[usize]) -> Vec<Piece> {
    let r = parts.len();
    let h: usize = parts.iter().sum();
    let hr = from_usize(h);
    let prefix = |t: usize| -> usize { parts[..t].iter().sum() };
    let c = |t: usize| from_usize(t * parts[t - 1] - prefix(t));
    let at = |ct: Rational| hr / (hr + ct);
    let mut raw = Vec::new();
    raw.push(Piece {
        from: int(0),
        to: at(c(r)),
        to_closed: true,
        f: linearresult_affine(h, r, parts[r - 1]),
        source: PieceSource::PwLinearSmallX,
    });
    for t in (1..r).rev() {
        let (from, to) = (at(c(t + 1)), at(c(t)));
        if from >= to {
            continue;
        }
        let tt = from_usize(t);
        let f = Affine::new(int(1) - int(1) / tt, from_usize(h - prefix(t)) / (hr * tt));
        raw.push(Piece { from, to, to_closed: true, f, source: PieceSource::PwLinear { t } });
    }
    let mut out: Vec<Piece> = Vec::new();
    for p in raw {
        match out.last_mut() {
            Some(last) if last.f == p.f && last.to == p.from => {
                last.to = p.to;
                last.source = p.source;
            }
            _ => out.push(p),
        }
    }
    out
}

/// Assembles `f(x, H)` from the exact results that apply to `g`, leaving a
/// gap with bounds where none does. Gap bounds use only the cheap rules for
/// `chi*_cr`; see [`f_profile_with`].
pub fn f_profile(g: &OrderedGraph) -> Result<FProfile> {
    f_profile_with(g, &chi_star_exact(g, &SearchEffort::none())?)
}

/// As [`f_profile`], taking the upper end of the gap from `chi_star`, which
/// must describe `g`.
pub fn f_profile_with(g: &OrderedGraph, chi_star: &ChiStarResult) -> Result<FProfile> {
    let s = colouring_statistics(g);
    let (h, r) = (s.h, s.r);
    let hr = from_usize(h);
    if r == 1 {
        let f = Affine::new(int(0), int(0));
        let piece = Piece { from: int(0), to: int(1), to_closed: true, f, source: PieceSource::Edgeless };
        return Ok(FProfile { pieces: alloc::vec![piece], gaps: Vec::new() });
    }
    if r == 2 {
        let f = Affine::new(int(0), from_usize(h - s.alpha) / hr);
        let piece = Piece { from: int(0), to: int(1), to_closed: false, f, source: PieceSource::Linear };
        return Ok(FProfile { pieces: alloc::vec![piece], gaps: Vec::new() });
    }
    if let Some(parts) = complete_multipartite_parts(g) {
        if parts.windows(2).all(|w| w[0] <= w[1]) {
            return Ok(FProfile { pieces: pwlinear_pieces(&parts), gaps: Vec::new() });
        }
    }
    let x0 = x0_of(&s);
    let f = linearresult_affine(h, r, s.t);
    let mut pieces = Vec::new();
    let mut gaps = Vec::new();
    if x0 >= int(1) {
        pieces.push(Piece { from: int(0), to: int(1), to_closed: false, f, source: PieceSource::LinearResult });
    } else {
        pieces.push(Piece { from: int(0), to: x0, to_closed: true, f, source: PieceSource::LinearResult });
    }
    if x0 < int(1) {
        let upper = int(1) - chi_star.range().1.recip();
        gaps.push(Gap { from: x0, to: int(1), to_closed: true, lower: f.eval(&x0), upper });
    }
    Ok(FProfile { pieces, gaps })
}

/// Outcome of checking one ordering for an `(x, H)`-tiling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XOrderingOutcome {
    pub ordering: Vec<usize>,
    pub status: TilingStatus,
    pub witness: Option<TilingWitness>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XVerdict {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XBottleVerdict {
    pub verdict: XVerdict,
    /// Copies needed per ordering: `ceil(x|B| / h)`.
    pub target: usize,
    pub orderings: Vec<XOrderingOutcome>,
}

/// Whether every ordering of the bottle-shaped `b` has an `h`-tiling covering
/// at least `x|B|` vertices.
pub fn check_x_bottlegraph(
    b: &CompleteMultipartite,
    x: Rational,
    h: &OrderedGraph,
    budget: Budget,
) -> Result<XBottleVerdict> {
    if !b.is_bottle_shaped() {
        return Err(Error::BadParts { needed: "bottle shape (m, ..., m, s) with s <= m", detail: format!("{b}") });
    }
    if x <= int(0) || x > int(1) {
        return Err(Error::InvalidParameters(format!("x must lie in (0, 1], got {x}")));
    }
    if b.order() > MAX_ORDER {
        return Err(Error::OrderTooLarge { order: b.order(), max: MAX_ORDER });
    }
    let target = ceil(&(x * from_usize(b.order()) / from_usize(h.order()))) as usize;
    let mut orderings = Vec::new();
    let mut verdict = XVerdict::Yes;
    for ord in distinct_orderings(b) {
        let ans = max_tiling(&ord.to_graph()?, h, Some(target), budget);
        let status = ans.status;
        orderings.push(XOrderingOutcome { ordering: ord.sizes().to_vec(), status, witness: ans.witness });
        match status {
            TilingStatus::TargetMet(_) => {}
            TilingStatus::Timeout => verdict = XVerdict::Unknown,
            _ => {
                verdict = XVerdict::No;
                break;
            }
        }
    }
    Ok(XBottleVerdict { verdict, target, orderings })
}

/// The host used for the upper bound in the sorted complete multipartite
/// case `t`: parts `i <= t` of size `floor(N/t ((1-x)h/x + S_t))` and parts
/// `i > t` of size `N l_i`. It holds `N` disjoint copies covering at least `x`
/// of its vertices.
pub fn pwlinear_host(parts: &[usize], x: Rational, n: usize) -> Result<OrderedMultipartite> {
    let r = parts.len();
    if r < 2 || !parts.windows(2).all(|w| w[0] <= w[1]) {
        return Err(Error::InvalidParameters(format!(
            "parts {parts:?} must be non-decreasing with at least two parts"
        )));
    }
    let h: usize = parts.iter().sum();
    let y = (int(1) - x) * from_usize(h) / x;
    let c = |t: usize| from_usize(t * parts[t - 1]) - from_usize(parts[..t].iter().sum());
    let t = (1..r)
        .find(|&t| c(t) <= y && y < c(t + 1))
        .ok_or_else(|| Error::InvalidParameters(format!("x = {x} lies in the small-x case")))?;
    let wide = floor(&(from_usize(n) / from_usize(t) * (y + from_usize(parts[..t].iter().sum())))) as usize;
    let sizes = (0..r).map(|i| if i < t { wide } else { n * parts[i] }).collect();
    OrderedMultipartite::new(sizes)
}

/// The host showing `f(x, H) >= x(h - alpha)/h` for `chi_<(H) = 2`: a complete
/// bipartite graph whose larger side is oversized and whose smaller side is
/// a clique. It has no `(x, H)`-tiling, so at most `N - 1` disjoint copies.
pub fn linear_lower_host(g: &OrderedGraph, x: Rational, n: usize) -> Result<OrderedGraph> {
    let s = colouring_statistics(g);
    if s.r != 2 {
        return Err(Error::InvalidParameters(format!("needs chi_< = 2, got {}", s.r)));
    }
    let h = s.h;
    let extra = ceil(&((int(1) - x) / x * from_usize(n * h))) as usize;
    let (alpha, prefix_side) =
        if s.alpha_plus <= s.alpha_minus { (s.alpha_plus, true) } else { (s.alpha_minus, false) };
    let u = n * alpha + extra + 1;
    let v =
        (n * (h - alpha)).checked_sub(1).ok_or_else(|| Error::InvalidParameters(String::from("N must be positive")))?;
    // prefix_side: independent U first, then the clique V; otherwise mirrored
    let (first, total) = if prefix_side { (u, u + v) } else { (v, u + v) };
    OrderedGraph::from_fn(total, |a, b| {
        let side = |w: usize| w < first;
        if side(a) != side(b) {
            return true;
        }
        // the clique side is V
        side(a) != prefix_side
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use alloc::vec;

    fn complete(parts: &[usize]) -> OrderedGraph {
        OrderedMultipartite::new(parts.to_vec()).unwrap().to_graph().unwrap()
    }

    #[test]
    fn tj_examples() {
        assert_eq!(tj_x0(&complete(&[1, 1, 2])).unwrap(), (2, 2, ratio(2, 3)));
        let edge = OrderedGraph::new(2, [(1, 2)]).unwrap();
        assert_eq!(tj_x0(&edge).unwrap(), (1, 1, int(1)));
        let fig2 = OrderedGraph::new(7, [(1, 3), (3, 5), (5, 7)]).unwrap();
        assert_eq!(tj_x0(&fig2).unwrap(), (1, 3, ratio(7, 10)));
    }

    #[test]
    fn edge_profile() {
        let edge = OrderedGraph::new(2, [(1, 2)]).unwrap();
        let p = f_profile(&edge).unwrap();
        assert_eq!(p.pieces.len(), 1);
        assert_eq!(p.pieces[0].f, Affine::new(int(0), ratio(1, 2)));
        assert_eq!(p.eval(ratio(1, 2)), Some(ratio(1, 4)));
        assert_eq!(p.eval(int(1)), None);
    }

    #[test]
    fn sorted_complete_profile() {
        let p = f_profile(&complete(&[1, 1, 2])).unwrap();
        assert_eq!(p.pieces.len(), 1);
        assert_eq!(p.pieces[0].f, Affine::new(ratio(1, 2), ratio(1, 4)));
        assert_eq!((p.pieces[0].from, p.pieces[0].to), (int(0), int(1)));
        assert_eq!(p.eval(int(1)), Some(ratio(3, 4)));
        assert!(p.gaps.is_empty());
        // (1,2,3): two distinct slopes
        let p = f_profile(&complete(&[1, 2, 3])).unwrap();
        assert_eq!(p.pieces.len(), 2);
        assert_eq!(p.eval(int(1)), Some(ratio(5, 6)));
    }

    #[test]
    fn fig2_profile_has_gap() {
        let fig2 = OrderedGraph::new(7, [(1, 3), (3, 5), (5, 7)]).unwrap();
        let p = f_profile(&fig2).unwrap();
        assert_eq!(p.pieces.len(), 1);
        assert_eq!(p.pieces[0].to, ratio(7, 10));
        assert_eq!(p.pieces[0].f, Affine::new(ratio(2, 3), ratio(1, 21)));
        assert_eq!(p.gaps.len(), 1);
        assert_eq!(p.gaps[0].lower, p.pieces[0].f.eval(&ratio(7, 10)));
    }

    #[test]
    fn pwlinear_direct_matches_profile() {
        for parts in [vec![1, 1, 2], vec![1, 2, 3], vec![2, 2, 3], vec![1, 3, 3]] {
            let p = f_profile(&complete(&parts)).unwrap();
            for k in 1..=20 {
                let x = ratio(k, 20);
                assert_eq!(p.eval(x), Some(pwlinear_value(&parts, x)), "{parts:?} at {x}");
            }
        }
    }

    #[test]
    fn x_bottlegraphs() {
        let edge = OrderedGraph::new(2, [(1, 2)]).unwrap();
        let b = CompleteMultipartite::new(vec![2, 2]).unwrap();
        assert_eq!(check_x_bottlegraph(&b, int(1), &edge, Budget::default()).unwrap().verdict, XVerdict::Yes);
        let k3 = OrderedGraph::complete(3).unwrap();
        let b3 = CompleteMultipartite::new(vec![2, 2, 2]).unwrap();
        assert_eq!(check_x_bottlegraph(&b3, int(1), &k3, Budget::default()).unwrap().verdict, XVerdict::Yes);
        // (2,2) has 4 vertices, not divisible by 3: target ceil(4/3) = 2 copies, and there are none
        assert_eq!(check_x_bottlegraph(&b, int(1), &k3, Budget::default()).unwrap().verdict, XVerdict::No);
        let bad = CompleteMultipartite::new(vec![3, 2, 2]).unwrap();
        assert!(check_x_bottlegraph(&bad, int(1), &edge, Budget::default()).is_err());
    }

    #[test]
    fn pwlinear_hosts() {
        let o = pwlinear_host(&[1, 1, 2], ratio(3, 4), 1).unwrap();
        assert_eq!(o.sizes(), [1, 1, 2]);
        let o = pwlinear_host(&[1, 1, 2], ratio(3, 4), 2).unwrap();
        assert_eq!(o.sizes(), [3, 3, 4]);
        assert!(pwlinear_host(&[1, 1, 2], ratio(1, 2), 1).is_err());
    }

    #[test]
    fn linear_lower_host_blocks() {
        let edge = OrderedGraph::new(2, [(1, 2)]).unwrap();
        let g = linear_lower_host(&edge, ratio(1, 2), 2).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(max_tiling(&g, &edge, None, Budget::default()).status, TilingStatus::MaxCover(1));
    }
}
