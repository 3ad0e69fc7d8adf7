//! Edge-list and canon text formats.
//!
//! Edge lists: a first line `n m`, then `m` lines `u v` with 0-based
//! vertices, then optional `c v k` lines giving vertex `v` color `k`.
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write;

use thiserror::Error;

use crate::canonizer::{Canon, RESERVED_COLOR};
use crate::graph_model::Graph;

pub const CANON_MAGIC: &str = "planar-canon v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("input is empty")]
    Empty,
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: vertex {vertex} out of range (n = {n})")]
    OutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: color {color} is reserved")]
    ReservedColor { line: usize, color: u32 },
    #[error("header announces {expected} edges but {got} were given")]
    EdgeCount { expected: usize, got: usize },
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

/// Non-empty, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers<T: std::str::FromStr>(line: usize, fields: &[&str]) -> Result<Vec<T>, ParseError> {
    fields
        .iter()
        .map(|f| {
            f.parse::<T>().map_err(|_| {
                syntax(
                    line,
                    format!("expected a non-negative integer, found `{f}`"),
                )
            })
        })
        .collect()
}

fn check_vertex(line: usize, vertex: usize, n: usize) -> Result<(), ParseError> {
    if vertex >= n {
        return Err(ParseError::OutOfRange { line, vertex, n });
    }
    Ok(())
}

fn check_color(line: usize, color: u32) -> Result<u32, ParseError> {
    if color == RESERVED_COLOR {
        return Err(ParseError::ReservedColor { line, color });
    }
    Ok(color)
}

/// Parses an edge-list file. Duplicate edges are dropped with a warning.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(ParseError::Empty)?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(syntax(hline, "header must be `n m`"));
    }
    let nm: Vec<usize> = numbers(hline, &fields)?;
    let (n, m) = (nm[0], nm[1]);
    let mut g = Graph::new(n);
    let mut colors = vec![0u32; n];
    let mut edges = 0;
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        match fields.as_slice() {
            ["c", rest @ ..] => {
                if rest.len() != 2 {
                    return Err(syntax(line, "color line must be `c v k`"));
                }
                let v: usize = numbers(line, &rest[..1])?[0];
                check_vertex(line, v, n)?;
                colors[v] = check_color(line, numbers(line, &rest[1..])?[0])?;
            }
            [_, _] => {
                let uv: Vec<usize> = numbers(line, &fields)?;
                let (u, v) = (uv[0], uv[1]);
                check_vertex(line, u, n)?;
                check_vertex(line, v, n)?;
                if u == v {
                    return Err(ParseError::SelfLoop { line, vertex: u });
                }
                edges += 1;
                if !g.add_edge(u, v).expect("checked above") {
                    log::warn!("line {line}: duplicate edge {u} {v} ignored");
                }
            }
            _ => return Err(syntax(line, "expected `u v` or `c v k`")),
        }
    }
    if edges != m {
        return Err(ParseError::EdgeCount {
            expected: m,
            got: edges,
        });
    }
    g.set_colors(colors).expect("one color per vertex");
    Ok(g)
}

/// Normalized edge-list text: edges with `u < v` in sorted order, then
/// colors of the vertices with a nonzero color.
pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    for v in 0..g.vertex_count() {
        if g.color(v) != 0 {
            writeln!(s, "c {v} {}", g.color(v)).unwrap();
        }
    }
    s
}

fn header_field(line: usize, field: Option<&str>, key: &str) -> Result<usize, ParseError> {
    field
        .and_then(|f| f.strip_prefix(key))
        .and_then(|f| f.strip_prefix('='))
        .and_then(|f| f.parse().ok())
        .ok_or_else(|| syntax(line, format!("expected `{key}=<count>` in the header")))
}

/// Parses the text form written by [`Canon::to_text`].
pub fn parse_canon(text: &str) -> Result<Canon, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(ParseError::Empty)?;
    let rest = header
        .strip_prefix(CANON_MAGIC)
        .ok_or_else(|| syntax(hline, format!("header must start with `{CANON_MAGIC}`")))?;
    let mut fields = rest.split_whitespace();
    let n = header_field(hline, fields.next(), "n")?;
    let m = header_field(hline, fields.next(), "m")?;
    if fields.next().is_some() {
        return Err(syntax(hline, "trailing header fields"));
    }
    let mut canon = Canon {
        vertex_count: n,
        colors: vec![0; n],
        ..Canon::default()
    };
    let label = |line: usize, v: usize| -> Result<usize, ParseError> {
        if v == 0 || v > n {
            return Err(ParseError::OutOfRange { line, vertex: v, n });
        }
        Ok(v)
    };
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        match fields.as_slice() {
            ["--"] => canon.separators.push(canon.edges.len()),
            ["c", rest @ ..] if rest.len() == 2 => {
                let v = label(line, numbers::<usize>(line, &rest[..1])?[0])?;
                canon.colors[v - 1] = check_color(line, numbers(line, &rest[1..])?[0])?;
            }
            [_, _] => {
                let uv: Vec<usize> = numbers(line, &fields)?;
                let (u, v) = (label(line, uv[0])?, label(line, uv[1])?);
                if u == v {
                    return Err(ParseError::SelfLoop { line, vertex: u });
                }
                canon.edges.push((u as u32, v as u32));
            }
            _ => return Err(syntax(line, "expected `u v`, `--` or `c v k`")),
        }
    }
    if canon.edges.len() != m {
        return Err(ParseError::EdgeCount {
            expected: m,
            got: canon.edges.len(),
        });
    }
    Ok(canon)
}
