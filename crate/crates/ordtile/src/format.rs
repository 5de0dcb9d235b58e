//! The ordered-graph text format and the `parts:` multipartite format.
//!
//! Graph files hold the order on the first line and one edge `u v` with
//! `1 <= u < v <= h` per following line. `#` starts a comment; blank lines
//! are ignored. [`write_graph`] emits the canonical form (edges in
//! lexicographic order, no comments), which parses back to the same graph and
//! is a fixed point of parse-then-write.

use std::fmt::Write as _;
use std::path::Path;

use ordtile_core::{CompleteMultipartite, OrderedGraph, OrderedMultipartite};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{0}")]
    Graph(#[from] ordtile_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((k + 1, l))
    })
}

fn parse_number(line: usize, tok: &str) -> Result<usize, FormatError> {
    tok.parse().map_err(|_| syntax(line, format!("expected a non-negative integer, found '{tok}'")))
}

pub fn parse_graph(text: &str) -> Result<OrderedGraph, FormatError> {
    let mut lines = content_lines(text);
    let (first, head) = lines.next().ok_or_else(|| syntax(1, "missing the order line"))?;
    let mut toks = head.split_whitespace();
    let order = parse_number(first, toks.next().unwrap())?;
    if toks.next().is_some() {
        return Err(syntax(first, "the first line must hold only the order"));
    }
    let mut edges = Vec::new();
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(syntax(line, format!("expected 'u v', found '{l}'")));
        }
        let (u, v) = (parse_number(line, toks[0])?, parse_number(line, toks[1])?);
        if !(1 <= u && u < v && v <= order) {
            return Err(syntax(line, format!("edge {u} {v} needs 1 <= u < v <= {order}")));
        }
        edges.push((u, v));
    }
    Ok(OrderedGraph::new(order, edges)?)
}

pub fn write_graph(g: &OrderedGraph) -> String {
    let mut out = format!("{}\n", g.order());
    for (a, b) in g.edges() {
        writeln!(out, "{} {}", a + 1, b + 1).unwrap();
    }
    out
}

/// Part sizes from a `parts: s1 s2 ... sk` line, in the given order.
pub fn parse_parts(text: &str) -> Result<Vec<usize>, FormatError> {
    let mut lines = content_lines(text);
    let (line, l) = lines.next().ok_or_else(|| syntax(1, "missing the parts line"))?;
    let rest = l.strip_prefix("parts:").ok_or_else(|| syntax(line, "expected 'parts: s1 s2 ...'"))?;
    let sizes = rest.split_whitespace().map(|t| parse_number(line, t)).collect::<Result<Vec<_>, _>>()?;
    if let Some((line, _)) = lines.next() {
        return Err(syntax(line, "unexpected content after the parts line"));
    }
    Ok(sizes)
}

pub fn parse_ordered_parts(text: &str) -> Result<OrderedMultipartite, FormatError> {
    Ok(OrderedMultipartite::new(parse_parts(text)?)?)
}

pub fn parse_unordered_parts(text: &str) -> Result<CompleteMultipartite, FormatError> {
    Ok(CompleteMultipartite::new(parse_parts(text)?)?)
}

pub fn write_parts(sizes: &[usize]) -> String {
    let body: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
    format!("parts: {}\n", body.join(" "))
}

/// Whether the first content line starts with `parts:`.
pub fn is_parts(text: &str) -> bool {
    content_lines(text).next().is_some_and(|(_, l)| l.starts_with("parts:"))
}

/// A graph file in either format; `parts:` files give the complete
/// multipartite ordered graph with parts in the listed order.
pub fn parse_any_graph(text: &str) -> Result<OrderedGraph, FormatError> {
    if is_parts(text) {
        Ok(parse_ordered_parts(text)?.to_graph()?)
    } else {
        parse_graph(text)
    }
}

pub fn read_text(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# figure 2\n7\n5 7\n1 3   # first\n\n3 5\n";
        let g = parse_graph(text).unwrap();
        let canon = write_graph(&g);
        assert_eq!(canon, "7\n1 3\n3 5\n5 7\n");
        assert_eq!(parse_graph(&canon).unwrap(), g);
        assert_eq!(write_graph(&parse_graph(&canon).unwrap()), canon);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_graph(""), Err(FormatError::Syntax { .. })));
        assert!(matches!(parse_graph("3\n2 1\n"), Err(FormatError::Syntax { line: 2, .. })));
        assert!(matches!(parse_graph("3\n1 4\n"), Err(FormatError::Syntax { .. })));
        assert!(matches!(parse_graph("3\n1 2 3\n"), Err(FormatError::Syntax { .. })));
        assert!(matches!(parse_graph("3\n1 2\n1 2\n"), Err(FormatError::Graph(_))));
        assert!(matches!(parse_graph("x\n"), Err(FormatError::Syntax { .. })));
    }

    #[test]
    fn parts() {
        assert_eq!(parse_parts("parts: 2 1 2\n").unwrap(), vec![2, 1, 2]);
        assert_eq!(parse_unordered_parts("parts: 2 1 2").unwrap().sizes(), [2, 2, 1]);
        assert_eq!(write_parts(&[4, 4, 3]), "parts: 4 4 3\n");
        assert!(parse_parts("parts: 2 x").is_err());
        let g = parse_any_graph("# K_{1,1,2}\nparts: 1 1 2\n").unwrap();
        assert_eq!(g.edge_count(), 5);
    }
}
