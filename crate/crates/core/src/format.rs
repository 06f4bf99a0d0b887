//! Text formats.
//!
//! Instance files are DIMACS edge files extended with list lines:
//!
//! ```text
//! c optional comment
//! p edge <n> <m>
//! e <u> <v>
//! l <v> <c1> <c2> ...
//! ```
//!
//! The `p` line declares vertices `1..=n`; it must precede every `e` and `l`
//! line. The edge count `m` is informational. Coloring files hold one
//! `v <id> <color>` line per vertex, plus optional `c` comments.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::{Color, Coloring, ListAssignment};
use crate::graph::{Graph, GraphError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: unknown vertex {vertex}")]
    UnknownVertex { line: usize, vertex: Vertex },
    #[error("line {line}: second list for vertex {vertex}")]
    DuplicateListLine { line: usize, vertex: Vertex },
    #[error("graph vertices are not 1..=n and cannot be written as DIMACS")]
    NonContiguousIds,
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

/// A parsed instance: a graph and, if any `l` lines were present, lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub lists: Option<ListAssignment>,
}

fn number<T: std::str::FromStr>(token: Option<&str>, line: usize, what: &str) -> Result<T, FormatError> {
    let token = token.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| parse_err(line, format!("invalid {what} '{token}'")))
}

pub fn parse_instance(text: &str) -> Result<Instance, FormatError> {
    let mut vertex_count: Option<u32> = None;
    let mut edges = Vec::new();
    let mut lists = ListAssignment::new();
    let mut saw_lists = false;

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let mut tokens = raw.split_whitespace();
        let Some(kind) = tokens.next() else { continue };
        match kind {
            "c" => continue,
            "p" => {
                if vertex_count.is_some() {
                    return Err(parse_err(line, "duplicate problem line"));
                }
                match tokens.next() {
                    Some("edge" | "col") => {}
                    other => {
                        return Err(parse_err(line, format!("unsupported problem type {other:?}")));
                    }
                }
                vertex_count = Some(number(tokens.next(), line, "vertex count")?);
                let _edge_count: usize = number(tokens.next(), line, "edge count")?;
            }
            "e" | "l" => {
                let n = vertex_count.ok_or_else(|| parse_err(line, "line before problem line"))?;
                let known = |v: Vertex| {
                    if (1..=n).contains(&v) {
                        Ok(v)
                    } else {
                        Err(FormatError::UnknownVertex { line, vertex: v })
                    }
                };
                if kind == "e" {
                    let u = known(number(tokens.next(), line, "vertex")?)?;
                    let v = known(number(tokens.next(), line, "vertex")?)?;
                    if u == v {
                        return Err(parse_err(line, format!("self-loop at vertex {u}")));
                    }
                    edges.push((u, v));
                } else {
                    let v = known(number(tokens.next(), line, "vertex")?)?;
                    let colors = tokens
                        .by_ref()
                        .map(|t| number::<Color>(Some(t), line, "color"))
                        .collect::<Result<BTreeSet<_>, _>>()?;
                    if lists.get(v).is_some() {
                        return Err(FormatError::DuplicateListLine { line, vertex: v });
                    }
                    lists.set(v, colors);
                    saw_lists = true;
                }
                if tokens.next().is_some() {
                    return Err(parse_err(line, "trailing tokens"));
                }
            }
            other => return Err(parse_err(line, format!("unknown line type '{other}'"))),
        }
    }
    let n = vertex_count.ok_or_else(|| parse_err(text.lines().count().max(1), "missing problem line"))?;
    let graph = Graph::with_vertex_count(n, edges).map_err(|e| match e {
        GraphError::SelfLoop(v) => parse_err(0, format!("self-loop at vertex {v}")),
        other => parse_err(0, other.to_string()),
    })?;
    Ok(Instance {
        graph,
        lists: saw_lists.then_some(lists),
    })
}

/// Writes `graph` and `lists` in the instance format. Comments, if any, go
/// first, one `c` line each.
pub fn emit_instance(
    graph: &Graph,
    lists: Option<&ListAssignment>,
    comments: &[String],
) -> Result<String, FormatError> {
    let n = graph.vertex_count();
    if graph.vertices().iter().enumerate().any(|(i, &v)| v as usize != i + 1) {
        return Err(FormatError::NonContiguousIds);
    }
    let mut out = String::new();
    for comment in comments {
        writeln!(out, "c {comment}").expect("write to string");
    }
    writeln!(out, "p edge {n} {}", graph.edge_count()).expect("write to string");
    for (u, v) in graph.edges() {
        writeln!(out, "e {u} {v}").expect("write to string");
    }
    if let Some(lists) = lists {
        for (v, colors) in lists.iter() {
            if !graph.contains(*v) {
                continue;
            }
            write!(out, "l {v}").expect("write to string");
            for c in colors {
                write!(out, " {c}").expect("write to string");
            }
            out.push('\n');
        }
    }
    Ok(out)
}

pub fn parse_coloring(text: &str) -> Result<Coloring, FormatError> {
    let mut coloring = Coloring::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let mut tokens = raw.split_whitespace();
        match tokens.next() {
            None | Some("c") => continue,
            Some("v") => {
                let v: Vertex = number(tokens.next(), line, "vertex")?;
                let color: Color = number(tokens.next(), line, "color")?;
                if tokens.next().is_some() {
                    return Err(parse_err(line, "trailing tokens"));
                }
                if coloring.insert(v, color).is_some() {
                    return Err(parse_err(line, format!("vertex {v} colored twice")));
                }
            }
            Some(other) => return Err(parse_err(line, format!("unknown line type '{other}'"))),
        }
    }
    Ok(coloring)
}

pub fn emit_coloring(coloring: &Coloring) -> String {
    let mut out = String::new();
    for (v, c) in coloring.iter() {
        writeln!(out, "v {v} {c}").expect("write to string");
    }
    out
}
