//! The graph6 text format for labeled simple graphs.
//!
//! A graph6 string is a header encoding the order followed by the upper
//! adjacency triangle packed column-major: bit `(i, j)` with `i < j` comes
//! before `(i', j')` iff `j < j'` or (`j = j'` and `i < i'`). Six bits per
//! printable character, each character offset by 63; padding bits in the
//! last character must be zero.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("graph6 character {0:#x} out of range 63..=126")]
    CharOutOfRange(u8),
    #[error("graph6 body has {got} characters, expected {expected}")]
    BadLength { expected: usize, got: usize },
    #[error("nonzero padding bits in final graph6 character")]
    NonzeroPadding,
    #[error("graph6 order {0} beyond supported range")]
    TooLarge(u64),
}

const MAX_LONG_FORM_ORDER: usize = 258_047; // 2^18 - 1 minus the short range

/// Encodes a graph as a graph6 string with identical labeling on decode.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        debug_assert!(n <= MAX_LONG_FORM_ORDER);
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut acc: u8 = 0;
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

/// Decodes a graph6 string (short form for n <= 62 or the three-character
/// extended-length form). The input must be exactly one encoded graph.
pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::CharOutOfRange(b));
        }
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // Eight-byte length form: beyond desk scale by design.
            return Err(Graph6Error::TooLarge(u64::MAX));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::BadLength {
                expected: 4,
                got: bytes.len(),
            });
        }
        let n =
            ((bytes[1] as u64 - 63) << 12) | ((bytes[2] as u64 - 63) << 6) | (bytes[3] as u64 - 63);
        if n > MAX_LONG_FORM_ORDER as u64 {
            return Err(Graph6Error::TooLarge(n));
        }
        (n as usize, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };

    let nbits = n * (n.saturating_sub(1)) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::BadLength {
            expected,
            got: body.len(),
        });
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    if nbits % 6 != 0 {
        let last = body[expected - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("triangle bits give a valid simple graph"))
}
