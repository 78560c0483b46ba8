//! graph6 encoding (no header, one graph per line).
//!
//! The order is one byte `n + 63` for `n <= 62`, otherwise `126` followed by
//! three bytes carrying 18 bits. The upper triangle follows in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six bits per byte, offset by 63,
//! zero-padded.

use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("malformed length field at byte {offset}")]
    BadLength { offset: usize },
    #[error("non-printable byte {byte:#04x} at byte {offset}")]
    NonPrintable { offset: usize, byte: u8 },
    #[error("record truncated at byte {offset}")]
    Truncated { offset: usize },
    #[error("trailing garbage at byte {offset}")]
    TrailingGarbage { offset: usize },
    #[error("order {order} at byte {offset} exceeds {MAX_ORDER}")]
    TooLarge { offset: usize, order: usize },
}

impl Graph6Error {
    pub fn offset(&self) -> usize {
        match *self {
            Graph6Error::Empty => 0,
            Graph6Error::BadLength { offset }
            | Graph6Error::NonPrintable { offset, .. }
            | Graph6Error::Truncated { offset }
            | Graph6Error::TrailingGarbage { offset }
            | Graph6Error::TooLarge { offset, .. } => offset,
        }
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    match bytes.get(offset) {
        None => Err(Graph6Error::Truncated { offset }),
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(Graph6Error::NonPrintable { offset, byte: b }),
    }
}

/// Decodes one graph6 record. A single trailing `\n` is accepted.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.strip_suffix('\n').unwrap_or(line).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, mut pos) = match bytes[0] {
        126 => {
            if bytes.get(1) == Some(&126) {
                // eight-byte form, only needed for n >= 258048
                return Err(Graph6Error::TooLarge {
                    offset: 1,
                    order: usize::MAX,
                });
            }
            let mut n = 0usize;
            for i in 1..4 {
                n = n << 6 | sextet(bytes, i)? as usize;
            }
            if n < 63 {
                return Err(Graph6Error::BadLength { offset: 1 });
            }
            (n, 4)
        }
        b @ 63..=125 => ((b - 63) as usize, 1),
        b => return Err(Graph6Error::NonPrintable { offset: 0, byte: b }),
    };
    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge {
            offset: if pos == 1 { 0 } else { 1 },
            order: n,
        });
    }

    let mut rows = vec![0u64; n];
    let total_bits = n * n.saturating_sub(1) / 2;
    let mut current = 0u8;
    let mut left = 0u32;
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                current = sextet(bytes, pos)?;
                pos += 1;
                left = 6;
            }
            left -= 1;
            if current >> left & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    debug_assert_eq!(bit, total_bits);
    if pos < bytes.len() {
        return Err(Graph6Error::TrailingGarbage { offset: pos });
    }
    Ok(Graph::from_rows_unchecked(&rows))
}

/// Encodes `g` as a graph6 record without a newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(4 + (n * n / 12) + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let rows = g.rows();
    let mut current = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for row in rows.iter().take(j) {
            current = current << 1 | (row >> j & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(current + 63);
                current = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((current << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
