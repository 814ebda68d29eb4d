//! Text formats: graph6, DOT and a plain adjacency list.
//!
//! Vertex indices in DOT and adjacency-list output are 1-based.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::{GraphError, LabeledGraph};

/// Largest order the 4-byte graph6 size prefix can express.
pub const GRAPH6_LONG_FORM_MAX: usize = 258_047;
const GRAPH6_HEADER: &str = ">>graph6<<";

fn g6_err(msg: impl Into<String>) -> GraphError {
    GraphError::Graph6(msg.into())
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= GRAPH6_LONG_FORM_MAX {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// graph6 string without header or trailing newline.
pub fn to_graph6(g: &LabeledGraph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut word = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            word = (word << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(word + 63);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses one graph6 line, with or without the `>>graph6<<` header.
pub fn from_graph6(text: &str, name: &str) -> Result<LabeledGraph, GraphError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let bytes = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text).as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(g6_err(format!("byte {b} outside 63..=126")));
    }
    let digits = |slice: &[u8]| slice.iter().fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
    let (n, body) = match bytes {
        [] => return Err(g6_err("empty input")),
        [126, 126, rest @ ..] if rest.len() >= 6 => (digits(&rest[..6]), &rest[6..]),
        [126, rest @ ..] if rest.len() >= 3 => (digits(&rest[..3]), &rest[3..]),
        [126, ..] => return Err(g6_err("truncated size prefix")),
        [b, rest @ ..] => (usize::from(b - 63), rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(g6_err(format!("expected {expected} data bytes for {n} vertices, got {}", body.len())));
    }
    let bit = |idx: usize| (body[idx / 6] - 63) >> (5 - idx % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(g6_err("non-zero padding bits"));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(idx) {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    LabeledGraph::from_edges(name, n, &edges)
}

/// Undirected DOT with subset labels rendered as `{1,2}`.
pub fn to_dot(g: &LabeledGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", g.name().replace('"', "\\\""));
    for v in 0..g.vertex_count() {
        match g.label(v) {
            Some(label) => {
                let _ = writeln!(out, "  {} [label=\"{}\"];", v + 1, label);
            }
            None => {
                let _ = writeln!(out, "  {};", v + 1);
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", u + 1, v + 1);
    }
    out.push_str("}\n");
    out
}

/// One line per vertex: `v: n1 n2 ...`.
pub fn to_adjacency_list(g: &LabeledGraph) -> String {
    let mut out = String::new();
    for v in 0..g.vertex_count() {
        let _ = write!(out, "{}:", v + 1);
        for &u in g.neighbors(v) {
            let _ = write!(out, " {}", u + 1);
        }
        out.push('\n');
    }
    out
}

/// Inverse of [`to_adjacency_list`]. Blank lines and `#` comments are
/// skipped; an edge listed from either endpoint is enough.
pub fn from_adjacency_list(text: &str, name: &str) -> Result<LabeledGraph, GraphError> {
    let err = |line: usize, msg: &str| GraphError::AdjacencyList(format!("line {line}: {msg}"));
    let mut edges = BTreeSet::new();
    let mut n = 0;
    for (lineno, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, rest) = line.split_once(':').ok_or_else(|| err(lineno, "missing ':'"))?;
        let parse = |tok: &str| -> Result<usize, GraphError> {
            match tok.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(err(lineno, &format!("bad vertex {tok:?}"))),
            }
        };
        let v = parse(head.trim())?;
        n = n.max(v + 1);
        for tok in rest.split_whitespace() {
            let u = parse(tok)?;
            n = n.max(u + 1);
            if u == v {
                return Err(err(lineno, "self-loop"));
            }
            edges.insert((u.min(v), u.max(v)));
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    LabeledGraph::from_edges(name, n, &edges)
}
