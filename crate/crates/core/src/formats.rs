//! Edge-list, graph6 and DOT text formats.

use std::fmt::Write as _;

use crate::error::{GraphError, ParseError};
use crate::graph::Graph;

/// Parses `n` on the first line, then one `u v` pair per line (0-indexed).
/// Blank lines and lines starting with `#` are skipped.
pub fn from_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first, header) = lines.next().ok_or(ParseError::EdgeList {
        line: 0,
        msg: "empty input".into(),
    })?;
    let n: usize = header.parse().map_err(|_| ParseError::EdgeList {
        line: first,
        msg: format!("expected vertex count, got {header:?}"),
    })?;
    let mut g = Graph::try_empty(n)?;
    for (line, l) in lines {
        let bad = |msg: String| ParseError::EdgeList { line, msg };
        let mut parts = l.split_whitespace();
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(bad(format!("expected two vertex indices, got {l:?}")));
        };
        let u: usize = a.parse().map_err(|_| bad(format!("not an index: {a:?}")))?;
        let v: usize = b.parse().map_err(|_| bad(format!("not an index: {b:?}")))?;
        if u >= n || v >= n {
            return Err(bad(GraphError::VertexOutOfRange {
                vertex: u.max(v),
                n,
            }
            .to_string()));
        }
        if u == v {
            return Err(bad(GraphError::Loop(u).to_string()));
        }
        if g.has_edge(u, v) {
            return Err(bad(
                GraphError::DuplicateEdge(u.min(v), u.max(v)).to_string()
            ));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// graph6 encoding; only the one-byte size form (n <= 62) is supported.
pub fn to_graph6(g: &Graph) -> Result<String, ParseError> {
    let n = g.order();
    if n > 62 {
        return Err(ParseError::Graph6(format!(
            "{n} vertices needs the multi-byte size form"
        )));
    }
    let mut out = vec![n as u8 + 63];
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ascii"))
}

pub fn from_graph6(text: &str) -> Result<Graph, ParseError> {
    let t = text.trim();
    let t = t.strip_prefix(">>graph6<<").unwrap_or(t);
    let bytes = t.as_bytes();
    let bad = |m: &str| ParseError::Graph6(m.to_string());
    let (&first, body) = bytes.split_first().ok_or_else(|| bad("empty string"))?;
    if first == 126 {
        return Err(bad("multi-byte size form (n > 62) is not supported"));
    }
    if !(63..=125).contains(&first) {
        return Err(bad("invalid size byte"));
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(ParseError::Graph6(format!(
            "expected {} data bytes for n = {n}, got {}",
            nbits.div_ceil(6),
            body.len()
        )));
    }
    if body.iter().any(|b| !(63..=126).contains(b)) {
        return Err(bad("data byte outside 63..=126"));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if (nbits..body.len() * 6).any(bit) {
        return Err(bad("nonzero padding bits"));
    }
    Ok(g)
}

/// DOT text; `labels[v]` replaces the numeric label of `v` when given.
pub fn to_dot(g: &Graph, name: &str, labels: Option<&[String]>) -> String {
    let mut s = format!("graph {} {{\n", dot_id(name));
    for v in 0..g.order() {
        match labels.and_then(|l| l.get(v)) {
            Some(l) => {
                let _ = writeln!(s, "  {v} [label={}];", dot_id(l));
            }
            None => {
                let _ = writeln!(s, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

pub(crate) fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}
