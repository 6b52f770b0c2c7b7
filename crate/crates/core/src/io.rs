//! Text formats: sequence strings, the `otg` edge list, and dot export.
//!
//! Edge list grammar:
//!
//! ```text
//! # comment
//! otg 5
//! 0 1
//! 4 0
//! ```
//!
//! The header `otg <n>` is the first line that is neither blank nor a
//! comment; every following such line holds one arc `u v`.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use crate::sequence::{TernarySequence, TernarySymbol};

/// Parses `[+-0]*` optionally followed by a final `*`.
pub fn parse_sequence(text: &str) -> Result<TernarySequence> {
    let mut symbols = Vec::with_capacity(text.len());
    let mut star_at = None;
    for (offset, c) in text.char_indices() {
        if star_at.is_some() {
            return Err(Error::SequenceSyntax {
                offset,
                message: "'*' must be the last character".into(),
            });
        }
        match c {
            '*' => star_at = Some(offset),
            c => match TernarySymbol::from_char(c) {
                Some(s) => symbols.push(s),
                None => {
                    return Err(Error::SequenceSyntax {
                        offset,
                        message: format!("unexpected character {c:?}"),
                    })
                }
            },
        }
    }
    Ok(TernarySequence::new(symbols))
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::EdgeListSyntax {
        line,
        message: message.into(),
    }
}

pub fn parse_edge_list(text: &str) -> Result<OrientedGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "missing 'otg <n>' header"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["otg", count] => count
            .parse::<usize>()
            .map_err(|_| syntax(hline, format!("bad vertex count {count:?}")))?,
        _ => return Err(syntax(hline, "expected header 'otg <n>'")),
    };
    if n == 0 {
        return Err(syntax(hline, "a graph needs at least one vertex"));
    }

    let mut g = OrientedGraph::empty(n)?;
    let mut seen = HashSet::new();
    for (line, body) in lines {
        let (u, v) = match body.split_whitespace().collect::<Vec<_>>()[..] {
            [a, b] => {
                let idx = |t: &str| {
                    t.parse::<usize>()
                        .map_err(|_| syntax(line, format!("bad vertex index {t:?}")))
                };
                (idx(a)?, idx(b)?)
            }
            _ => return Err(syntax(line, "expected an arc 'u v'")),
        };
        for w in [u, v] {
            if w >= n {
                return Err(syntax(line, format!("vertex {w} out of range 0..{n}")));
            }
        }
        if u == v {
            return Err(syntax(line, format!("loop at vertex {u}")));
        }
        if !seen.insert((u, v)) {
            return Err(syntax(line, format!("duplicate arc {u} {v}")));
        }
        if seen.contains(&(v, u)) {
            return Err(syntax(line, format!("2-cycle between {u} and {v}")));
        }
        g.insert_arc_unchecked(u, v);
    }
    Ok(g)
}

/// Header plus arcs in lexicographic order, newline-terminated.
pub fn emit_edge_list(g: &OrientedGraph) -> String {
    let mut out = format!("otg {}\n", g.n());
    for (u, v) in g.arcs() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// A `digraph { ... }` document with one node statement per vertex and one
/// edge statement per arc.
pub fn export_dot(g: &OrientedGraph, labels: Option<&[String]>) -> Result<String> {
    if let Some(l) = labels {
        if l.len() != g.n() {
            return Err(Error::LabelCount {
                expected: g.n(),
                got: l.len(),
            });
        }
    }
    let mut out = String::from("digraph {\n");
    for v in 0..g.n() {
        match labels {
            Some(l) => {
                let escaped = l[v].replace('\\', "\\\\").replace('"', "\\\"");
                let _ = writeln!(out, "  {v} [label=\"{escaped}\"];");
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (u, v) in g.arcs() {
        let _ = writeln!(out, "  {u} -> {v};");
    }
    out.push_str("}\n");
    Ok(out)
}
