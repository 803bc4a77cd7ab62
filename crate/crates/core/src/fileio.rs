//! Text formats: the graph file, DOT export, and sequence arguments.
//!
//! A graph file is line based. The first content line is the header `n r`
//! (both positive). Every further content line is an arc `u v m` with
//! 0-based vertices, `u != v` and `m >= 1`; repeated `(u, v)` lines add up.
//! Lines starting with `#` are comments; blank lines are ignored. The
//! serializer emits the canonical form — header, then one line per nonzero
//! ordered pair sorted by `(u, v)` — so parsing and serializing a canonical
//! file is the identity.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::RGraph;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_graph(text: &str) -> Result<RGraph> {
    let mut graph: Option<RGraph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match graph {
            None => {
                if fields.len() != 2 {
                    return Err(parse_err(line_no, "header must be `n r`"));
                }
                let n: usize = fields[0]
                    .parse()
                    .map_err(|_| parse_err(line_no, "bad vertex count in header"))?;
                let r: u32 = fields[1]
                    .parse()
                    .map_err(|_| parse_err(line_no, "bad capacity in header"))?;
                graph = Some(RGraph::new(n, r).map_err(|e| parse_err(line_no, e.to_string()))?);
            }
            Some(ref mut g) => {
                if fields.len() != 3 {
                    return Err(parse_err(line_no, "arc line must be `u v m`"));
                }
                let u: usize = fields[0]
                    .parse()
                    .map_err(|_| parse_err(line_no, "bad source vertex"))?;
                let v: usize = fields[1]
                    .parse()
                    .map_err(|_| parse_err(line_no, "bad target vertex"))?;
                let m: u32 = fields[2]
                    .parse()
                    .map_err(|_| parse_err(line_no, "bad multiplicity"))?;
                g.add_arcs(u, v, m)
                    .map_err(|e| parse_err(line_no, e.to_string()))?;
            }
        }
    }
    graph.ok_or_else(|| parse_err(text.lines().count().max(1), "missing header line"))
}

/// Canonical text form: header, then sorted nonzero arcs.
pub fn serialize_graph(g: &RGraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.capacity());
    for (u, v, m) in g.arcs() {
        writeln!(out, "{u} {v} {m}").expect("string write");
    }
    out
}

/// DOT form with nodes `v0..v(n-1)` and one labeled edge per nonzero ordered
/// pair, in `(u, v)` order.
pub fn to_dot(g: &RGraph) -> String {
    let mut out = String::from("digraph g {\n");
    for v in 0..g.vertex_count() {
        writeln!(out, "  v{v};").expect("string write");
    }
    for (u, v, m) in g.arcs() {
        writeln!(out, "  v{u} -> v{v} [label=\"×{m}\"];").expect("string write");
    }
    out.push_str("}\n");
    out
}

/// Parses a comma-separated integer list such as `-2,-2,4`.
pub fn parse_sequence(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidParameter(format!("bad integer `{}`", part.trim())))
        })
        .collect()
}
