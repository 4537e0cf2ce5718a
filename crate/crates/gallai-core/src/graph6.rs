//! graph6 text encoding of undirected simple graphs.
//!
//! Format, short form only: first byte is `order + 63` (order 0..=62), then
//! the upper triangle of the adjacency matrix in column-major order
//! (`x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...`), packed 6 bits per byte, most
//! significant bit first, zero-padded to a byte boundary, each byte offset
//! by 63 so the printable range is 63..=126. Long-form headers (orders above
//! 62) are rejected.

use crate::graph::Graph;
use thiserror::Error;

/// Largest order representable by the short-form size byte.
pub const MAX_GRAPH6_ORDER: usize = 62;

const OPTIONAL_HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("malformed graph6 size byte{}", detail_suffix(.detail))]
    MalformedHeader { detail: &'static str },
    #[error("truncated graph6 body: expected {expected} data bytes, found {found}")]
    TruncatedBody { expected: usize, found: usize },
    #[error("invalid graph6 byte 0x{byte:02x} at offset {offset}")]
    InvalidByte { byte: u8, offset: usize },
    #[error("trailing data after graph6 body: expected {expected} bytes, line has {found}")]
    TrailingBytes { expected: usize, found: usize },
    #[error("graph order {order} exceeds graph6 short-form maximum {MAX_GRAPH6_ORDER}")]
    OrderTooLarge { order: usize },
}

fn detail_suffix(detail: &str) -> String {
    if detail.is_empty() {
        String::new()
    } else {
        format!(" ({detail})")
    }
}

/// Number of data bytes encoding the upper triangle for `order` vertices.
fn body_len(order: usize) -> usize {
    (order * (order.saturating_sub(1)) / 2).div_ceil(6)
}

/// Parses one graph6 line (optionally prefixed with `>>graph6<<`).
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.trim_end_matches(['\r', '\n']);
    let line = line.strip_prefix(OPTIONAL_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();

    let &first = bytes.first().ok_or(Graph6Error::MalformedHeader {
        detail: "empty line",
    })?;
    if !(63..=126).contains(&first) {
        return Err(Graph6Error::InvalidByte { byte: first, offset: 0 });
    }
    if first == 126 {
        // Multi-byte size prefix: valid graph6, but past the supported range.
        return Err(Graph6Error::MalformedHeader {
            detail: "long-form size (order > 62) not supported",
        });
    }
    let order = (first - 63) as usize;

    let expected = body_len(order);
    let body = &bytes[1..];
    if body.len() < expected {
        return Err(Graph6Error::TruncatedBody {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingBytes {
            expected: expected + 1,
            found: bytes.len(),
        });
    }

    let mut g = Graph::empty(order).expect("order <= 62 always fits");
    let mut bit = 0usize;
    'outer: for col in 1..order {
        for row in 0..col {
            let byte = body[bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(Graph6Error::InvalidByte {
                    byte,
                    offset: 1 + bit / 6,
                });
            }
            if (byte - 63) >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(row, col).expect("indices in range by construction");
            }
            bit += 1;
            if bit == order * (order - 1) / 2 {
                break 'outer;
            }
        }
    }
    // Bytes holding only padding still need to be in range.
    for (i, &byte) in body.iter().enumerate().skip(bit.div_ceil(6)) {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { byte, offset: 1 + i });
        }
    }
    Ok(g)
}

/// Encodes a graph as a canonical graph6 line: no header prefix, no trailing
/// whitespace, padding bits zero.
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let order = g.order();
    if order > MAX_GRAPH6_ORDER {
        return Err(Graph6Error::OrderTooLarge { order });
    }
    let mut out = Vec::with_capacity(1 + body_len(order));
    out.push(order as u8 + 63);

    let mut acc = 0u8;
    let mut used = 0u8;
    for col in 1..order {
        for row in 0..col {
            acc = (acc << 1) | u8::from(g.has_edge(row, col));
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    Ok(String::from_utf8(out).expect("all bytes printable"))
}
