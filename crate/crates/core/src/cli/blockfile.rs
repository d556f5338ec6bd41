//! The `.blk` text format.
//!
//! ```text
//! # directed 3-cycle
//! vertices 3
//! edge 0 1
//! edge 1 2
//! edge 2 0
//! ```
//!
//! `vertices N` comes first, `undirected` may follow before any edge and
//! makes every edge two-way. Tokens are separated by single spaces.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::digraph::DiGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct ParseError {
    /// 1-based; 0 when the error concerns the whole file.
    pub line: usize,
    pub reason: String,
}

fn fail<T>(line: usize, reason: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        reason: reason.into(),
    })
}

fn number(token: &str, line: usize) -> Result<usize, ParseError> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return fail(line, format!("expected a number, found {token:?}"));
    }
    token
        .parse()
        .or_else(|_| fail(line, format!("number {token} too large")))
}

pub fn parse_block_file(text: &str) -> Result<DiGraph, ParseError> {
    let mut n: Option<usize> = None;
    let mut undirected = false;
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut listed: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (i, raw) in text.split('\n').enumerate() {
        let line = i + 1;
        if raw.is_empty() || raw.starts_with('#') {
            continue;
        }
        if raw.contains('\r') {
            return fail(line, "carriage return; use LF line endings");
        }
        let tokens: Vec<&str> = raw.split(' ').collect();
        match tokens.as_slice() {
            ["vertices", count] => {
                if n.is_some() {
                    return fail(line, "repeated vertices line");
                }
                n = Some(number(count, line)?);
            }
            ["undirected"] => {
                if n.is_none() {
                    return fail(line, "undirected before vertices");
                }
                if !listed.is_empty() {
                    return fail(line, "undirected after an edge");
                }
                if undirected {
                    return fail(line, "repeated undirected line");
                }
                undirected = true;
            }
            ["edge", u, v] => {
                let Some(count) = n else {
                    return fail(line, "edge before vertices");
                };
                let (u, v) = (number(u, line)?, number(v, line)?);
                if u >= count || v >= count {
                    return fail(line, format!("vertex out of range 0..{count}"));
                }
                if u == v {
                    return fail(line, "loop");
                }
                let key = if undirected {
                    (u.min(v), u.max(v))
                } else {
                    (u, v)
                };
                if !listed.insert(key) {
                    return fail(line, "duplicate edge");
                }
                edges.insert((u, v));
                if undirected {
                    edges.insert((v, u));
                }
            }
            _ => return fail(line, format!("malformed line {raw:?}")),
        }
    }
    let Some(count) = n else {
        return fail(0, "missing vertices line");
    };
    Ok(DiGraph::new(count, edges).expect("edges validated"))
}

/// Canonical text for `g`: `undirected` with `u < v` pairs when `g` is
/// symmetric, every ordered edge otherwise.
pub fn serialize(g: &DiGraph) -> String {
    let mut out = format!("vertices {}\n", g.vertex_count());
    let symmetric = g.is_symmetric() && g.edge_count() > 0;
    if symmetric {
        out.push_str("undirected\n");
    }
    for (u, v) in g.edges() {
        if !symmetric || u < v {
            writeln!(out, "edge {u} {v}").expect("string write");
        }
    }
    out
}
