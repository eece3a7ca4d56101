//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column order, packed six bits per printable byte
//! offset by 63.
//!
//! Reference: <https://users.cecs.anu.edu.au/~bdm/data/formats.txt>

use std::io::BufRead;

use thiserror::Error;

use crate::graph::{Graph, VertexSet, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("malformed size header")]
    MalformedHeader,
    #[error("graph on {0} vertices is too large (limit {MAX_VERTICES})")]
    TooLarge(u64),
    #[error("bit field truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{0} trailing bytes after the bit field")]
    TrailingBytes(usize),
}

fn data_bytes(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let mut vals = Vec::with_capacity(bytes.len());
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { offset, byte });
        }
        vals.push(byte - 63);
    }

    let (n, header_len) = if vals[0] != 63 {
        (vals[0] as u64, 1)
    } else if vals.len() >= 2 && vals[1] != 63 {
        if vals.len() < 4 {
            return Err(Graph6Error::MalformedHeader);
        }
        let n = vals[1..4].iter().fold(0u64, |acc, &b| acc << 6 | b as u64);
        (n, 4)
    } else {
        if vals.len() < 8 {
            return Err(Graph6Error::MalformedHeader);
        }
        let n = vals[2..8].iter().fold(0u64, |acc, &b| acc << 6 | b as u64);
        (n, 8)
    };
    if n > MAX_VERTICES as u64 {
        return Err(Graph6Error::TooLarge(n));
    }
    let n = n as usize;

    let body = &vals[header_len..];
    let expected = data_bytes(n);
    if body.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingBytes(body.len() - expected));
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            if body[bit / 6] >> (5 - bit % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            bit += 1;
        }
    }
    Ok(Graph::from_adjacency(adj).expect("decoded adjacency is simple"))
}

/// Encodes `g` as graph6 (no header, no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(4 + data_bytes(n));
    if n <= 62 {
        out.push(n as u8);
    } else {
        out.push(63);
        out.extend([(n >> 12) as u8 & 63, (n >> 6) as u8 & 63, n as u8 & 63]);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(acc << (6 - filled));
    }
    out.into_iter().map(|b| (b + 63) as char).collect()
}

/// One decoded line of a graph6 stream.
#[derive(Debug)]
pub struct Graph6Line {
    /// 1-based line number in the input.
    pub line: usize,
    pub text: String,
    pub graph: Result<Graph, Graph6Error>,
}

/// Reads a graph6 stream, one graph per line. Blank lines are skipped;
/// malformed lines are returned as errors so callers can report them and
/// keep going.
pub fn read_graph6_lines<R: BufRead>(reader: R) -> std::io::Result<Vec<Graph6Line>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim().to_string();
        if text.is_empty() {
            continue;
        }
        let graph = parse_graph6(&text);
        out.push(Graph6Line { line: i + 1, text, graph });
    }
    Ok(out)
}
