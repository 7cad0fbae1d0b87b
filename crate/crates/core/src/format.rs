//! graph6 and edge-list text formats.
//!
//! graph6 follows the nauty definition: a size header `N(n)` followed by the
//! upper triangle of the adjacency matrix in column-major order
//! (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits per byte, each byte
//! offset by 63. Padding bits in the last byte must be zero.

use std::collections::HashMap;

use crate::bits::bit;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;

/// Decodes one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` prefix are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedGraph6("empty input".into()));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::MalformedGraph6(format!(
            "byte {} at offset {pos} is outside the printable range 63..=126",
            bytes[pos]
        )));
    }
    let (n, body) = decode_size(bytes)?;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(Error::MalformedGraph6(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }

    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - OFFSET;
            if byte & (0b10_0000 >> (k % 6)) != 0 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = body[body.len() - 1] - OFFSET;
        let padding = 6 - pairs % 6;
        if last & ((1u8 << padding) - 1) != 0 {
            return Err(Error::MalformedGraph6("nonzero padding bits".into()));
        }
    }
    Graph::from_adjacency(adj)
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let short = |what: &str| Error::MalformedGraph6(format!("truncated {what} size header"));
    if bytes[0] != 126 {
        return Ok(((bytes[0] - OFFSET) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(short("8-byte"));
        }
        let n = bytes[2..8]
            .iter()
            .fold(0usize, |acc, b| (acc << 6) | (b - OFFSET) as usize);
        return Ok((n, &bytes[8..]));
    }
    if bytes.len() < 4 {
        return Err(short("4-byte"));
    }
    let n = bytes[1..4]
        .iter()
        .fold(0usize, |acc, b| (acc << 6) | (b - OFFSET) as usize);
    Ok((n, &bytes[4..]))
}

/// Encodes a graph as one graph6 line (no trailing newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(2 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses the edge-list text format.
///
/// Each non-blank line is either a comment (`#...`), a `u v` pair of vertex
/// names, or (before the first edge) a `vertices: a,b,c` header. Vertices are
/// indexed in header order, then in order of first appearance. Duplicate
/// edges collapse; self-loops are rejected.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();

    let mut intern = |name: &str, names: &mut Vec<String>| -> usize {
        *index.entry(name.to_string()).or_insert_with(|| {
            names.push(name.to_string());
            names.len() - 1
        })
    };

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let line_no = lineno + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vertices:") {
            if !edges.is_empty() {
                return Err(Error::MalformedEdgeList {
                    line: line_no,
                    reason: "vertices header must precede all edges".into(),
                });
            }
            for name in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                if names.iter().any(|n| n == name) {
                    return Err(Error::DuplicateLabel(name.to_string()));
                }
                intern(name, &mut names);
            }
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::MalformedEdgeList {
                line: line_no,
                reason: format!("expected two vertex names, found {}", tokens.len()),
            });
        }
        if tokens[0] == tokens[1] {
            return Err(Error::SelfLoop(tokens[0].to_string()));
        }
        let u = intern(tokens[0], &mut names);
        let v = intern(tokens[1], &mut names);
        edges.push((u, v));
    }

    if names.is_empty() {
        return Err(Error::EmptyInput);
    }
    if names.len() > MAX_VERTICES {
        return Err(Error::TooManyVertices(names.len()));
    }
    Graph::from_edges(names.len(), edges)?.with_labels(names)
}

/// Renders the edge-list format. The `vertices:` header is always written so
/// that isolated vertices and the vertex order survive a round trip.
pub fn emit_edge_list(g: &Graph) -> String {
    let names: Vec<String> = (0..g.n()).map(|v| g.label(v)).collect();
    let mut out = format!("vertices: {}\n", names.join(","));
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", names[u], names[v]));
    }
    out
}

/// Reads a graph in either supported format.
pub fn parse_graph(text: &str, format: InputFormat) -> Result<Graph> {
    match format {
        InputFormat::Graph6 => parse_graph6(text),
        InputFormat::EdgeList => parse_edge_list(text),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    Graph6,
    EdgeList,
}
