//! graph6 and edge-list text formats.
//!
//! graph6 follows McKay's format without the `>>graph6<<` header. The
//! upper triangle is read column by column: `(0,1), (0,2), (1,2), (0,3), ...`,
//! packed six bits per byte, most significant bit first, each byte offset
//! by 63.

use super::{Graph, MAX_VERTICES};
use crate::{Error, Result};

const OFFSET: u8 = 63;

fn size_prefix(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + OFFSET]
    } else {
        vec![
            126,
            (n >> 12 & 0x3f) as u8 + OFFSET,
            (n >> 6 & 0x3f) as u8 + OFFSET,
            (n & 0x3f) as u8 + OFFSET,
        ]
    }
}

/// Encodes a graph as a graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = size_prefix(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses one graph6 record. Surrounding whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim().as_bytes();
    let bad = |msg: &str| Error::Graph6(msg.to_string());
    if bytes.is_empty() {
        return Err(bad("empty record"));
    }
    if bytes.starts_with(b">>") {
        return Err(bad("header lines are not supported"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!(
            "byte {b:#04x} outside the printable range 63..=126"
        )));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(bad("eight-byte size form exceeds the 64-vertex limit"));
        }
        if bytes.len() < 4 {
            return Err(bad("truncated size field"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - OFFSET) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - OFFSET) as usize, &bytes[1..])
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - OFFSET;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let pad = (body[expected - 1] - OFFSET) & ((1u8 << (6 - k % 6)) - 1);
        if pad != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    Graph::from_adjacency(adj)
}

/// Parses the edge-list format: a first line holding `n`, then one `u v`
/// pair per line (0-indexed). Blank lines are skipped; duplicate edges are
/// collapsed.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, header) = lines.next().ok_or(Error::EdgeList {
        line: 1,
        reason: "missing vertex count".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::EdgeList {
        line: first,
        reason: format!("expected a vertex count, found `{header}`"),
    })?;
    let mut g = Graph::empty(n)?;
    for (line, l) in lines {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::EdgeList {
                line,
                reason: format!("`{s}` is not a vertex index"),
            })
        };
        let [a, b] = fields[..] else {
            return Err(Error::EdgeList {
                line,
                reason: format!("expected two fields, found {}", fields.len()),
            });
        };
        let (u, v) = (parse(a)?, parse(b)?);
        if u >= n || v >= n {
            return Err(Error::EdgeList {
                line,
                reason: format!("vertex out of range 0..{n}"),
            });
        }
        if u == v {
            return Err(Error::EdgeList {
                line,
                reason: format!("self-loop at {u}"),
            });
        }
        g.set(u, v);
    }
    Ok(g)
}

/// Serializes to the edge-list format accepted by [`parse_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
