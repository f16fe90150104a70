//! graph6 encoding: a size prefix followed by the upper triangle of the
//! adjacency matrix, column by column, packed big-endian into 6-bit groups and
//! offset by 63 into printable ASCII.

use thiserror::Error;

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("truncated size prefix")]
    TruncatedSize,
    #[error("order {0} is not supported (at most 64 vertices)")]
    Unsupported(u64),
    #[error("expected {expected} bytes of edge data, found {found}")]
    Length { expected: usize, found: usize },
    #[error("padding bits after the last edge bit must be zero")]
    Padding,
}

fn bytes_for(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 line. A single trailing newline (`\n` or `\r\n`) is
/// accepted; any other trailing byte is an error.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.strip_suffix('\n').unwrap_or(line);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((offset, &byte)) = bytes.iter().enumerate().find(|(_, b)| !(63..=126).contains(*b)) {
        return Err(Graph6Error::BadByte { offset, byte });
    }

    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as u64, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::TruncatedSize);
        }
        let n = bytes[2..8].iter().fold(0u64, |acc, &b| acc << 6 | (b - 63) as u64);
        (n, &bytes[8..])
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::TruncatedSize);
        }
        let n = bytes[1..4].iter().fold(0u64, |acc, &b| acc << 6 | (b - 63) as u64);
        (n, &bytes[4..])
    };
    if n > Graph::MAX_ORDER as u64 {
        return Err(Graph6Error::Unsupported(n));
    }
    let n = n as usize;
    let expected = bytes_for(n);
    if body.len() != expected {
        return Err(Graph6Error::Length {
            expected,
            found: body.len(),
        });
    }

    let mut g = Graph::edgeless(n).expect("order checked above");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = (body[k / 6] - 63) >> (5 - k % 6) & 1;
            if group == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    // remaining bits of the last group are padding
    while k % 6 != 0 {
        if (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
            return Err(Graph6Error::Padding);
        }
        k += 1;
    }
    Ok(g)
}

/// Encodes a graph as graph6 with zero padding and no trailing newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(4 + bytes_for(n));
    if n < 63 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.extend((0..3).rev().map(|s| 63 + ((n >> (6 * s)) & 63) as u8));
    }
    let mut group = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(63 + group);
                group = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push(63 + (group << (6 - k % 6)));
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
