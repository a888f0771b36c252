//! Plain-text edge lists.
//!
//! ```text
//! # comments start with '#'
//! n m
//! u v        (undirected, m lines)
//! u -> v     (oriented, m lines)
//! ```
//!
//! Vertices are 0-based. Blank lines are ignored.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orientation::OrientedGraph;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_index(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a non-negative integer, got {tok:?}"),
    })
}

fn parse_body(text: &str, oriented: bool) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing \"n m\" header".into(),
    })?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(Error::Parse {
            line: hline,
            message: format!("header must be \"n m\", got {header:?}"),
        });
    }
    let n = parse_index(hline, head[0])?;
    let m = parse_index(hline, head[1])?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, body) in lines {
        last_line = line;
        let (a, b) = if oriented {
            body.split_once("->").ok_or_else(|| Error::Parse {
                line,
                message: format!("expected \"u -> v\", got {body:?}"),
            })?
        } else {
            let toks: Vec<&str> = body.split_whitespace().collect();
            if toks.len() != 2 || body.contains("->") {
                return Err(Error::Parse {
                    line,
                    message: format!("expected \"u v\", got {body:?}"),
                });
            }
            (toks[0], toks[1])
        };
        edges.push((parse_index(line, a.trim())?, parse_index(line, b.trim())?));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: last_line,
            message: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Ok((n, edges))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let (n, edges) = parse_body(text, false)?;
    Graph::new(n, edges)
}

pub fn parse_oriented_edge_list(text: &str) -> Result<OrientedGraph> {
    let (n, arcs) = parse_body(text, true)?;
    let base = Graph::new(n, arcs.iter().copied())?;
    OrientedGraph::new(base, arcs)
}

fn header(out: &mut String, comments: &[String], n: usize, m: usize) {
    for c in comments {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "{n} {m}");
}

pub fn write_edge_list(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    header(&mut out, comments, g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_oriented_edge_list(d: &OrientedGraph, comments: &[String]) -> String {
    let mut out = String::new();
    header(&mut out, comments, d.vertex_count(), d.arc_count());
    for (u, v) in d.arcs() {
        let _ = writeln!(out, "{u} -> {v}");
    }
    out
}
