//! The graph6 text encoding of simple undirected graphs.
//!
//! A graph on `n` vertices is written as the order prefix `N(n)` followed by
//! the upper triangle of its adjacency matrix, column by column
//! (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits per byte with 63
//! added to each byte. `N(n)` is one byte for `n ≤ 62`, `~` plus three bytes
//! for `n ≤ 258047` and `~~` plus six bytes above that.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

const HEADER: &str = ">>graph6<<";
const MAX_ORDER: usize = (1 << 36) - 1;

fn bad(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend_from_slice(b"~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Strict parser: no surrounding whitespace, no trailing bytes, zero padding.
/// An optional `>>graph6<<` header is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let mut pos = if text.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let next = |pos: &mut usize| -> Result<u8> {
        let b = *bytes
            .get(*pos)
            .ok_or_else(|| bad(*pos, "unexpected end of input"))?;
        if !(63..=126).contains(&b) {
            return Err(bad(*pos, format!("byte 0x{b:02x} outside graph6 range")));
        }
        *pos += 1;
        Ok(b - 63)
    };

    let n = if bytes.get(pos) == Some(&b'~') {
        pos += 1;
        if bytes.get(pos) == Some(&b'~') {
            pos += 1;
            let mut n = 0usize;
            for _ in 0..6 {
                n = (n << 6) | next(&mut pos)? as usize;
            }
            n
        } else {
            let mut n = 0usize;
            for _ in 0..3 {
                n = (n << 6) | next(&mut pos)? as usize;
            }
            n
        }
    } else {
        next(&mut pos)? as usize
    };
    if n > MAX_ORDER {
        return Err(bad(0, "order too large"));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let body_len = bits.div_ceil(6);
    let mut edges = Vec::new();
    let mut bit = 0usize;
    let body_start = pos;
    for _ in 0..body_len {
        let offset = pos;
        let chunk = next(&mut pos)?;
        for k in (0..6).rev() {
            let set = chunk >> k & 1 == 1;
            if bit < bits {
                if set {
                    let (i, j) = pair_of_bit(bit);
                    edges.push(Edge::new(i, j));
                }
            } else if set {
                return Err(bad(offset, "nonzero padding bit"));
            }
            bit += 1;
        }
    }
    debug_assert_eq!(pos, body_start + body_len);
    if pos != bytes.len() {
        return Err(bad(pos, "trailing bytes after graph"));
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}

/// Inverse of the column-major upper-triangle bit index.
fn pair_of_bit(bit: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= bit {
        start += j;
        j += 1;
    }
    (bit - start, j)
}
