//! graph6 interchange (short form, `n <= 62`).
//!
//! A record is the byte `n + 63` followed by the upper triangle of the
//! adjacency matrix, column by column (`(0,1), (0,2), (1,2), (0,3), ...`),
//! packed six bits per byte, most significant bit first, each byte offset by
//! 63. The final byte is padded with zero bits.

use std::io::BufRead;

use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte} at offset {offset} is outside the printable range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("long-form graph6 (n > {MAX_ORDER}) is not supported")]
    TooLarge,
    #[error("graph6 records need at least one vertex")]
    NoVertices,
    #[error("graph6 record for n={n} must be {expected} bytes, found {found}")]
    Length { n: usize, expected: usize, found: usize },
    #[error("nonzero padding bits in final byte")]
    Padding,
    #[error("line {line}: {source}")]
    Line { line: usize, source: Box<Graph6Error> },
    #[error("line {line}: {message}")]
    Io { line: usize, message: String },
}

const HEADER: &str = ">>graph6<<";

fn triangle_len(n: usize) -> usize {
    n * (n - 1) / 2
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + triangle_len(n).div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    // all bytes are in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn decode_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (&first, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { offset, byte });
        }
    }
    if first == 126 {
        return Err(Graph6Error::TooLarge);
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::NoVertices);
    }
    let bits = triangle_len(n);
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::Length { n, expected: expected + 1, found: bytes.len() });
    }
    let pad = expected * 6 - bits;
    if pad > 0 && (body[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
        return Err(Graph6Error::Padding);
    }
    let mut g = Graph::empty(n).expect("1 <= n <= 62");
    let mut p = 0;
    for j in 1..n {
        for i in 0..j {
            let word = body[p / 6] - 63;
            if word >> (5 - p % 6) & 1 == 1 {
                g.add_edge(i, j).expect("in range");
            }
            p += 1;
        }
    }
    Ok(g)
}

/// Decodes one record per non-blank line, tagging errors with the 1-based
/// line number.
pub fn read_graph6<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph, Graph6Error>> {
    reader.lines().enumerate().filter_map(|(i, line)| {
        let line_no = i + 1;
        match line {
            Err(e) => Some(Err(Graph6Error::Io { line: line_no, message: e.to_string() })),
            Ok(l) if l.trim().is_empty() => None,
            Ok(l) => Some(
                decode_graph6(l.trim())
                    .map_err(|e| Graph6Error::Line { line: line_no, source: Box::new(e) }),
            ),
        }
    })
}
