//! The `ordtile` command line.
//!
//! Exit codes: 0 success, 1 negative verdict to a yes/no question, 2 input
//! errors, 3 search budget exhausted.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use ordtile_core::critical::{chi_star_exact, colouring_statistics, SearchEffort};
use ordtile_core::extremal::{f1_report, f2_report, f3_report};
use ordtile_core::multipartite::{check_bottlegraph_bounded, check_simple_bottlegraph, crit_chrom, BottleStatus};
use ordtile_core::partial::{check_x_bottlegraph, f_profile_with, XVerdict};
use ordtile_core::rational::{ceil, from_usize, parse as parse_rational};
use ordtile_core::structure::{find_local_barrier, fixed_prefix_indices};
use ordtile_core::thresholds::classify;
use ordtile_core::tiling::{h_cover, max_tiling, perfect_tiling};
use ordtile_core::{interval_chromatic, Budget, CompleteMultipartite, Error, OrderedGraph, Rational, TilingStatus};

use crate::format::{parse_any_graph, parse_unordered_parts, read_text, write_graph, FormatError};
use crate::report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "ordtile", version, about = "Tiling thresholds of vertex-ordered graphs")]
struct Cli {
    /// Readable text with decimal approximations instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    human: bool,
    /// JSON output (the default).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Interval chromatic number, structure, chi*_cr and all coefficients.
    Analyze {
        graph: PathBuf,
        /// Largest part size in the bottlegraph scan (default h^2).
        #[arg(long)]
        m_max: Option<usize>,
        /// Search nodes per ordering in the bottlegraph scan.
        #[arg(long, default_value_t = 200_000)]
        scan_budget: u64,
        /// Skip the bottlegraph scan.
        #[arg(long)]
        no_scan: bool,
    },
    /// Perfect tilings, covers, maximum tilings and (x, H)-tilings.
    Tile {
        host: PathBuf,
        pattern: PathBuf,
        #[command(flatten)]
        mode: TileMode,
        #[arg(long, default_value_t = Budget::default().0)]
        budget: u64,
    },
    /// Checks a complete multipartite graph given as `parts: ...` (a file or the literal line).
    Bottlegraph {
        parts: String,
        pattern: PathBuf,
        #[command(flatten)]
        mode: BottleMode,
        #[arg(long, default_value_t = Budget::default().0)]
        budget: u64,
    },
    /// Builds an extremal construction and checks its obstruction.
    Extremal {
        #[command(subcommand)]
        which: Extremal,
    },
    /// The piecewise profile of f(x, H).
    Fxh { pattern: PathBuf },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct TileMode {
    #[arg(long)]
    perfect: bool,
    #[arg(long)]
    cover: bool,
    #[arg(long)]
    max: bool,
    /// Fraction of host vertices to cover, as p/q.
    #[arg(long, value_name = "P/Q")]
    x: Option<String>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct BottleMode {
    #[arg(long)]
    simple: bool,
    /// Largest blow-up factor to try.
    #[arg(long, value_name = "T")]
    tmax: Option<usize>,
    /// Check for an x-bottlegraph instead, with x given as p/q.
    #[arg(long, value_name = "P/Q")]
    x: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Extremal {
    /// Complete r-partite graph plus a vertex u that no copy of H covers.
    F1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        /// Pattern whose cover the construction should block.
        #[arg(long = "H")]
        pattern: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Complete multipartite host in the adversarial ordering with no perfect H-tiling.
    F2 {
        #[arg(long = "H")]
        pattern: PathBuf,
        #[arg(long)]
        n: usize,
        /// Exact chi*_cr; computed when omitted.
        #[arg(long, value_name = "P/Q")]
        chi_star: Option<String>,
        #[arg(long, default_value_t = Budget::default().0)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Balanced ordered complete (chi_< - 1)-partite host with no copy of H.
    F3 {
        #[arg(long = "H")]
        pattern: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Format(#[from] FormatError),
    #[error("{0}")]
    Library(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Library(Error::Inconclusive(_)) => EXIT_UNKNOWN,
            CliError::Library(Error::Contradiction(_) | Error::Inconsistent(_)) => EXIT_NO,
            _ => EXIT_INPUT,
        }
    }
}

/// A graph file, or a literal `parts: ...` line.
fn load_graph(path: &Path) -> Result<OrderedGraph, CliError> {
    match path.to_str().filter(|s| s.trim_start().starts_with("parts:")) {
        Some(line) => Ok(parse_any_graph(line)?),
        None => Ok(parse_any_graph(&read_text(path)?)?),
    }
}

fn load_parts(arg: &str) -> Result<CompleteMultipartite, CliError> {
    let text = if arg.trim_start().starts_with("parts:") { arg.to_string() } else { read_text(Path::new(arg))? };
    Ok(parse_unordered_parts(&text)?)
}

fn rational_arg(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::Usage(format!("bad rational '{s}': {}", e.0)))
}

fn write_out(path: &Option<PathBuf>, g: &OrderedGraph) -> Result<(), CliError> {
    if let Some(p) = path {
        std::fs::write(p, write_graph(g))
            .map_err(|source| CliError::Write { path: p.display().to_string(), source })?;
    }
    Ok(())
}

/// Parses arguments, runs the command and writes its report to `out`.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ =
                write!(if e.use_stderr() { err as &mut dyn Write } else { out as &mut dyn Write }, "{}", e.render());
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((value, code)) => {
            let text = if cli.human {
                report::human(&value)
            } else {
                let mut s = serde_json::to_string_pretty(&value).expect("JSON values serialize");
                s.push('\n');
                s
            };
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cmd: &Command) -> Result<(Value, i32), CliError> {
    match cmd {
        Command::Analyze { graph, m_max, scan_budget, no_scan } => {
            let g = load_graph(graph)?;
            let effort =
                SearchEffort { scan: !no_scan, m_max: *m_max, budget: Budget(*scan_budget), ..SearchEffort::default() };
            Ok((analyze(&g, &effort)?, EXIT_OK))
        }
        Command::Tile { host, pattern, mode, budget } => {
            let (g, h) = (load_graph(host)?, load_graph(pattern)?);
            tile(&g, &h, mode, Budget(*budget))
        }
        Command::Bottlegraph { parts, pattern, mode, budget } => {
            let (b, h) = (load_parts(parts)?, load_graph(pattern)?);
            bottlegraph(&b, &h, mode, Budget(*budget))
        }
        Command::Extremal { which } => extremal(which).map(|v| (v, EXIT_OK)),
        Command::Fxh { pattern } => {
            let h = load_graph(pattern)?;
            let profile = f_profile_with(&h, &chi_star_exact(&h, &SearchEffort::default())?)?;
            Ok((json!({ "graph": report::graph(&h), "f_profile": report::f_profile(&profile) }), EXIT_OK))
        }
    }
}

/// The full analysis document for `g`.
pub fn analyze(g: &OrderedGraph, effort: &SearchEffort) -> Result<Value, Error> {
    let (_, colouring) = interval_chromatic(g);
    let stats = colouring_statistics(g);
    let (barrier, fixed) =
        if stats.r >= 2 { (Some(find_local_barrier(g)?), fixed_prefix_indices(g)?) } else { (None, Vec::new()) };
    let chi = chi_star_exact(g, effort)?;
    let thresholds = classify(g, &chi);
    let profile = f_profile_with(g, &chi)?;
    Ok(report::analysis(&report::Analysis {
        graph: g,
        colouring: colouring.lengths(),
        stats: &stats,
        barrier: barrier.as_ref(),
        fixed_prefix: &fixed,
        thresholds: &thresholds,
        profile: &profile,
    }))
}

fn tile(g: &OrderedGraph, h: &OrderedGraph, mode: &TileMode, budget: Budget) -> Result<(Value, i32), CliError> {
    if mode.cover {
        let uncovered: Vec<usize> = h_cover(g, h).into_iter().map(|v| v + 1).collect();
        let code = if uncovered.is_empty() { EXIT_OK } else { EXIT_NO };
        let status = if uncovered.is_empty() { "Covered" } else { "Uncovered" };
        return Ok((json!({ "status": status, "uncovered": uncovered }), code));
    }
    let ans = if mode.perfect {
        perfect_tiling(g, h, budget)
    } else if let Some(x) = &mode.x {
        let x = rational_arg(x)?;
        if x <= Rational::from_integer(0) || x > Rational::from_integer(1) {
            return Err(CliError::Usage(format!("x must lie in (0, 1], got {x}")));
        }
        let target = ceil(&(x * from_usize(g.order()) / from_usize(h.order()))) as usize;
        max_tiling(g, h, Some(target), budget)
    } else {
        max_tiling(g, h, None, budget)
    };
    let code = match ans.status {
        TilingStatus::NoPerfect | TilingStatus::TargetMissed { .. } => EXIT_NO,
        TilingStatus::Timeout => EXIT_UNKNOWN,
        _ => EXIT_OK,
    };
    Ok((report::tiling(&ans), code))
}

fn bottlegraph(
    b: &CompleteMultipartite,
    h: &OrderedGraph,
    mode: &BottleMode,
    budget: Budget,
) -> Result<(Value, i32), CliError> {
    let crit = crit_chrom(b).ok();
    if let Some(x) = &mode.x {
        let x = rational_arg(x)?;
        let v = check_x_bottlegraph(b, x, h, budget)?;
        let code = match v.verdict {
            XVerdict::Yes => EXIT_OK,
            XVerdict::No => EXIT_NO,
            XVerdict::Unknown => EXIT_UNKNOWN,
        };
        return Ok((report::x_bottle_verdict(b.sizes(), x, &v), code));
    }
    let v = match mode.tmax {
        Some(t) => check_bottlegraph_bounded(b, h, t, budget)?,
        None => check_simple_bottlegraph(b, h, budget)?,
    };
    let code = match v.status {
        BottleStatus::SimpleYes | BottleStatus::BoundedYes => EXIT_OK,
        BottleStatus::NotSimple { .. } | BottleStatus::No(_) => EXIT_NO,
        BottleStatus::Unknown => EXIT_UNKNOWN,
    };
    Ok((report::bottle_verdict(b.sizes(), crit, &v), code))
}

fn extremal(which: &Extremal) -> Result<Value, CliError> {
    match which {
        Extremal::F1 { n, r, i, j, pattern, out } => {
            let h = pattern.as_deref().map(load_graph).transpose()?;
            let rep = f1_report(*n, *r, *i, *j, h.as_ref())?;
            write_out(out, &rep.graph)?;
            Ok(report::extremal("F1", &rep))
        }
        Extremal::F2 { pattern, n, chi_star, budget, out } => {
            let h = load_graph(pattern)?;
            let chi = match chi_star {
                Some(s) => rational_arg(s)?,
                None => chi_star_exact(&h, &SearchEffort::default())?.exact().ok_or_else(|| {
                    CliError::Usage("chi*_cr is not known exactly for this pattern; pass --chi-star".into())
                })?,
            };
            let rep = f2_report(&h, *n, chi, Budget(*budget))?;
            write_out(out, &rep.graph)?;
            let mut v = report::extremal("F2", &rep);
            v["chi_star"] = report::rational(chi);
            Ok(v)
        }
        Extremal::F3 { pattern, n, out } => {
            let h = load_graph(pattern)?;
            let rep = f3_report(&h, *n)?;
            write_out(out, &rep.graph)?;
            Ok(report::extremal("F3", &rep))
        }
    }
}
