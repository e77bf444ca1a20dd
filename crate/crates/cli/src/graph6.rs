//! graph6 encoding of labelled simple graphs.
//!
//! Layout: a size header `N(n)` followed by the upper triangle of the adjacency
//! matrix in column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six
//! bits per byte, most significant first, each byte offset by 63 and padded
//! with zero bits. `N(n)` is the single byte `n + 63` for `n <= 62`, and
//! `126` followed by three 6-bit bytes for `63 <= n <= 258047`.

use bipminor_core::Graph;
use thiserror::Error;

const MAX_VERTICES: usize = 258_047;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    BadCharacter { offset: usize, byte: u8 },
    #[error("malformed size header")]
    BadHeader,
    #[error("expected {expected} data bytes for {n} vertices, found {found}")]
    WrongLength { n: usize, expected: usize, found: usize },
    #[error("padding bits of the last byte are not zero")]
    NonZeroPadding,
    #[error("graph has {0} vertices; graph6 supports at most 258047")]
    TooLarge(usize),
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let body = text.strip_prefix(">>graph6<<").unwrap_or(text).as_bytes();
    if body.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((offset, &byte)) = body.iter().enumerate().find(|(_, b)| !(63..=126).contains(*b)) {
        return Err(Graph6Error::BadCharacter { offset, byte });
    }
    let (n, data) = if body[0] != 126 {
        (usize::from(body[0] - 63), &body[1..])
    } else {
        if body.len() < 4 || body[1] == 126 {
            return Err(Graph6Error::BadHeader);
        }
        let n = body[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
        if n < 63 {
            return Err(Graph6Error::BadHeader);
        }
        (n, &body[4..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::WrongLength { n, expected, found: data.len() });
    }
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Graph6Error::NonZeroPadding);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, &edges).expect("column-order bits describe a simple graph"))
}

pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([12, 6, 0].map(|s| ((n >> s) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
