//! JSON renderings of library results. Objects use sorted keys and contain no
//! timing information, so equal inputs give byte-identical output.

use serde_json::{json, Value};

use ordtile_core::critical::{ChiStarKind, ColouringStats};
use ordtile_core::extremal::{ExtremalReport, Obstruction};
use ordtile_core::multipartite::{BottleStatus, BottleVerdict, Certificate};
use ordtile_core::partial::{FProfile, PieceSource, XBottleVerdict, XVerdict};
use ordtile_core::structure::LocalBarrier;
use ordtile_core::thresholds::{Coefficient, ThresholdReport};
use ordtile_core::{ChiStarResult, OrderedGraph, Rational, TilingAnswer, TilingStatus, TilingWitness};

use crate::format::write_graph;

pub fn rational(r: Rational) -> Value {
    Value::String(r.to_string())
}

pub fn graph(g: &OrderedGraph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().map(|(a, b)| [a + 1, b + 1]).collect();
    json!({ "order": g.order(), "edges": edges })
}

/// Copies with 1-based vertex labels.
pub fn copies(w: Option<&TilingWitness>) -> Value {
    match w {
        Some(w) => w.copies.iter().map(|c| c.iter().map(|v| v + 1).collect::<Vec<_>>()).collect(),
        None => Value::Null,
    }
}

pub fn status_name(s: TilingStatus) -> &'static str {
    match s {
        TilingStatus::PerfectFound => "PerfectFound",
        TilingStatus::NoPerfect => "NoPerfect",
        TilingStatus::MaxCover(_) => "MaxCover",
        TilingStatus::TargetMet(_) => "TargetMet",
        TilingStatus::TargetMissed { .. } => "TargetMissed",
        TilingStatus::Timeout => "Timeout",
    }
}

pub fn tiling(ans: &TilingAnswer) -> Value {
    let mut v = json!({
        "status": status_name(ans.status),
        "copies": copies(ans.witness.as_ref()),
        "nodes": ans.nodes,
    });
    match ans.status {
        TilingStatus::MaxCover(k) | TilingStatus::TargetMet(k) => v["count"] = json!(k),
        TilingStatus::TargetMissed { best } => v["best"] = json!(best),
        _ => {}
    }
    v
}

pub fn statistics(s: &ColouringStats) -> Value {
    let mut v = json!({
        "h": s.h,
        "r": s.r,
        "ell_minus": s.ell_minus,
        "ell_minus_star": s.ell_minus_star,
        "ell_plus": s.ell_plus,
        "ell_plus_colouring": s.ell_plus_colouring,
        "alpha_plus": s.alpha_plus,
        "alpha_minus": s.alpha_minus,
        "alpha": s.alpha,
        "t": s.t,
        "j": s.j,
    });
    if s.r >= 2 {
        let x0 = Rational::new(s.h as i128, ((s.r - 1) * s.j + s.t) as i128);
        v["x0"] = rational(x0);
    }
    v
}

pub fn barrier(b: Option<&LocalBarrier>) -> Value {
    match b.and_then(|b| b.witness()) {
        Some(w) => json!({ "i": w.i, "j": w.j, "vacuous": w.vacuous }),
        None => Value::Null,
    }
}

pub fn chi_star(c: &ChiStarResult) -> Value {
    let b = &c.bounds;
    let bounds = json!({
        "lower": rational(b.lower),
        "lower_source": b.lower_source.to_string(),
        "strict_floor": rational(b.strict_floor),
        "upper": rational(b.upper),
        "upper_source": b.upper_source.to_string(),
    });
    match &c.kind {
        ChiStarKind::Exact { value, rule } => json!({
            "kind": "exact",
            "value": rational(*value),
            "rule": rule.to_string(),
            "bounds": bounds,
        }),
        ChiStarKind::Interval { lower, lower_strict, upper } => json!({
            "kind": "interval",
            "lower": rational(*lower),
            "lower_strict": lower_strict,
            "upper": rational(*upper),
            "bounds": bounds,
        }),
    }
}

pub fn coefficient(c: Option<&Coefficient>) -> Value {
    match c {
        None => Value::Null,
        Some(Coefficient::Exact(v)) => rational(*v),
        Some(Coefficient::Range { lower, lower_strict, upper }) => json!({
            "lower": rational(*lower),
            "lower_strict": lower_strict,
            "upper": rational(*upper),
        }),
    }
}

fn source_name(s: PieceSource) -> String {
    match s {
        PieceSource::Edgeless => "edgeless".into(),
        PieceSource::Linear => "linear".into(),
        PieceSource::LinearResult => "linearresult".into(),
        PieceSource::PwLinear { t } => format!("pwlinear t={t}"),
        PieceSource::PwLinearSmallX => "pwlinear small x".into(),
    }
}

/// Pieces and gaps in one list sorted by `x`; gaps carry `"bounds_only": true`.
pub fn f_profile(p: &FProfile) -> Value {
    let mut entries: Vec<(Rational, Value)> = p
        .pieces
        .iter()
        .map(|q| {
            let v = json!({
                "x_from": rational(q.from),
                "x_to": rational(q.to),
                "x_to_closed": q.to_closed,
                "f": q.f.to_string(),
                "source": source_name(q.source),
                "bounds_only": false,
            });
            (q.from, v)
        })
        .collect();
    entries.extend(p.gaps.iter().map(|g| {
        let v = json!({
            "x_from": rational(g.from),
            "x_to": rational(g.to),
            "x_to_closed": g.to_closed,
            "f_at_least": rational(g.lower),
            "f_at_most": rational(g.upper),
            "source": "bounds",
            "bounds_only": true,
        });
        (g.from, v)
    }));
    entries.sort_by_key(|a| a.0);
    Value::Array(entries.into_iter().map(|e| e.1).collect())
}

pub struct Analysis<'a> {
    pub graph: &'a OrderedGraph,
    pub colouring: &'a [usize],
    pub stats: &'a ColouringStats,
    pub barrier: Option<&'a LocalBarrier>,
    pub fixed_prefix: &'a [usize],
    pub thresholds: &'a ThresholdReport,
    pub profile: &'a FProfile,
}

pub fn analysis(a: &Analysis<'_>) -> Value {
    let t = a.thresholds;
    json!({
        "graph": graph(a.graph),
        "chi_lt": t.chi_lt,
        "interval_colouring": a.colouring,
        "statistics": statistics(a.stats),
        "local_barrier": barrier(a.barrier),
        "flexible": t.flexible,
        "fixed_prefix": a.fixed_prefix,
        "chi_star": chi_star(&t.chi_star),
        "perfect_case": t.perfect_case.to_string(),
        "perfect_coeff": coefficient(t.perfect_coeff.as_ref()),
        "cover_coeff": rational(t.cover_coeff),
        "almost_perfect_coeff": coefficient(Some(&t.almost_perfect_coeff)),
        "f_profile": f_profile(a.profile),
    })
}

pub fn certificate(c: &Certificate) -> Value {
    let mut v = match *c {
        Certificate::PartCount { parts, chi_lt } => json!({ "parts": parts, "chi_lt": chi_lt }),
        Certificate::CountingFirstPart { crit, h, ell_minus } => {
            json!({ "crit": rational(crit), "h": h, "ell_minus": ell_minus })
        }
        Certificate::CountingLastPart { crit, h, ell_minus_star } => {
            json!({ "crit": rational(crit), "h": h, "ell_minus_star": ell_minus_star })
        }
        Certificate::StrongLower { crit, r, h } => json!({ "crit": rational(crit), "r": r, "h": h }),
    };
    v["name"] = json!(c.name());
    v["holds"] = json!(c.holds());
    v
}

pub fn bottle_verdict(parts: &[usize], crit: Option<Rational>, v: &BottleVerdict) -> Value {
    let (status, extra) = match &v.status {
        BottleStatus::SimpleYes => ("SimpleYes", Value::Null),
        BottleStatus::NotSimple { ordering } => ("NotSimple", json!(ordering)),
        BottleStatus::BoundedYes => ("BoundedYes", Value::Null),
        BottleStatus::No(c) => ("No", certificate(c)),
        BottleStatus::Unknown => ("Unknown", Value::Null),
    };
    let orderings: Vec<Value> = v
        .orderings
        .iter()
        .map(|o| {
            json!({
                "ordering": o.ordering,
                "t": o.t,
                "copies": copies(o.witness.as_ref()),
                "nodes": o.nodes,
            })
        })
        .collect();
    let mut out = json!({
        "parts": parts,
        "crit_chrom": crit.map(rational),
        "status": status,
        "orderings": orderings,
    });
    match &v.status {
        BottleStatus::NotSimple { .. } => out["failing_ordering"] = extra,
        BottleStatus::No(_) => out["certificate"] = extra,
        _ => {}
    }
    out
}

pub fn x_bottle_verdict(parts: &[usize], x: Rational, v: &XBottleVerdict) -> Value {
    let verdict = match v.verdict {
        XVerdict::Yes => "Yes",
        XVerdict::No => "No",
        XVerdict::Unknown => "Unknown",
    };
    let orderings: Vec<Value> = v
        .orderings
        .iter()
        .map(|o| json!({ "ordering": o.ordering, "status": status_name(o.status), "copies": copies(o.witness.as_ref()) }))
        .collect();
    json!({ "parts": parts, "x": rational(x), "target_copies": v.target, "status": verdict, "orderings": orderings })
}

pub fn extremal(name: &str, r: &ExtremalReport) -> Value {
    let obstruction = match &r.obstruction {
        None => Value::Null,
        Some(Obstruction::NoCoverAt { vertex }) => json!({ "kind": "NoCoverAt", "vertex": vertex + 1 }),
        Some(Obstruction::NoPerfectTiling { ordering, nodes }) => {
            json!({ "kind": "NoPerfectTiling", "ordering": ordering, "nodes": nodes })
        }
        Some(Obstruction::NoCopyOfH) => json!({ "kind": "NoCopyOfH" }),
    };
    json!({
        "construction": name,
        "order": r.graph.order(),
        "graph_text": write_graph(&r.graph),
        "min_degree": r.min_degree,
        "claimed_bound": rational(r.claimed_bound),
        "relation": r.relation,
        "formula": r.formula,
        "degree_claim_holds": r.degree_claim_holds(),
        "obstruction": obstruction,
        "notes": r.notes,
    })
}

/// Indented `key: value` text; rational strings gain a decimal approximation.
pub fn human(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(match ordtile_core::rational::parse(s) {
            Ok(r) if s.contains('/') => format!("{s} (≈ {:.6})", ordtile_core::rational::approx(&r)),
            _ => s.clone(),
        }),
        Value::Array(a) if a.iter().all(|x| x.is_number()) => {
            Some(format!("[{}]", a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if k == "graph_text" {
                    continue;
                }
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render(x, depth + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}
