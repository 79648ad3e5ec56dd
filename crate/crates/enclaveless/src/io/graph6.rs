//! Bit-exact graph6 encoding and decoding.
//!
//! Format: an order header, then the upper triangle of the adjacency matrix
//! in column-major order (`x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...`), packed
//! big-endian into 6-bit groups, each emitted as `value + 63`, zero-padded
//! at the end. Orders up to 62 use the single byte `n + 63`; larger orders
//! use `'~'` followed by three bytes carrying 18 bits. Only the undirected
//! graph6 variant is supported; streams hold one token per line.

use thiserror::Error;

use crate::graph::{Graph, VertexSet, MAX_ORDER};

const OPTIONAL_HEADER: &str = ">>graph6<<";

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 token")]
    Empty,
    #[error("byte {byte:#x} at position {pos} outside the printable graph6 range 63..=126")]
    NonPrintable { pos: usize, byte: u8 },
    #[error("truncated token: expected {expected} body bytes, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("trailing bytes after the encoded body: expected {expected} body bytes, got {got}")]
    TrailingBytes { expected: usize, got: usize },
    #[error("padding bits are not zero")]
    NonzeroPadding,
    #[error("decoded order {n} exceeds the supported width {MAX_ORDER}")]
    OrderAboveCap { n: usize },
    #[error("token encodes the zero-order graph, which is unsupported")]
    ZeroOrder,
}

/// Parses a single graph6 token. A leading `>>graph6<<` header is tolerated.
pub fn parse_graph6(s: &str) -> Result<Graph, Graph6Error> {
    let s = s.strip_prefix(OPTIONAL_HEADER).unwrap_or(s).trim_end();
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::NonPrintable { pos, byte: b });
        }
    }

    // order header: one byte below '~', otherwise '~' + 18 bits
    let (n, body) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                expected: 4,
                got: bytes.len(),
            });
        }
        if bytes[1] == b'~' {
            // 8-byte form encodes n >= 258048, far over the cap
            let n = bytes[2..8.min(bytes.len())]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            return Err(Graph6Error::OrderAboveCap { n: n.max(258_048) });
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderAboveCap { n });
    }
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }

    let bit_count = n * (n - 1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            got: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingBytes {
            expected,
            got: body.len(),
        });
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut t = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = (body[t / 6] - 63) as usize;
            if group >> (5 - t % 6) & 1 != 0 {
                adj[i] = adj[i].with(j);
                adj[j] = adj[j].with(i);
            }
            t += 1;
        }
    }
    // all bits past the triangle must be zero
    while t < expected * 6 {
        if (body[t / 6] - 63) as usize >> (5 - t % 6) & 1 != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
        t += 1;
    }
    Ok(Graph::from_adjacency(adj))
}

/// Encodes a graph as a graph6 token. `parse_graph6(write_graph6(g)) == g`.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    debug_assert!(n <= MAX_ORDER);
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(b'~');
        out.push(63 + (n >> 12 & 63) as u8);
        out.push(63 + (n >> 6 & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable")
}

/// Parses a newline-separated stream of graph6 tokens, skipping blank lines.
pub fn parse_graph6_stream(text: &str) -> impl Iterator<Item = Result<Graph, Graph6Error>> + '_ {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
}
