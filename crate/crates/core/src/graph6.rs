//! graph6 text format, short form only (n <= 62).
//!
//! One byte `n + 63`, then the upper triangle of the adjacency matrix in
//! column-major order (columns 1..n-1, rows 0..j-1), packed into 6-bit
//! groups most-significant-bit first, each group offset by 63. Padding
//! bits must be zero.

use crate::graph::Graph;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

const OFFSET: u8 = 63;

/// Number of upper-triangle bits for `n` vertices.
fn triangle_bits(n: usize) -> usize {
    n * (n - 1) / 2
}

pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > 62 {
        return Err(Graph6Error::TooLarge { n });
    }
    let mut out = Vec::with_capacity(1 + triangle_bits(n).div_ceil(6));
    out.push(OFFSET + n as u8);
    let mut group = 0u8;
    let mut filled = 0;
    for col in 1..n {
        for row in 0..col {
            group = (group << 1) | u8::from(g.has_edge(row, col));
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (group << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { pos, byte: b });
        }
    }
    if bytes[0] == 126 {
        // '~' starts the long form for n > 62, which we deliberately do
        // not support.
        return Err(Graph6Error::LongForm);
    }
    let n = (bytes[0] - OFFSET) as usize;
    let nbits = triangle_bits(n);
    let expected = 1 + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Graph6Error::BadLength { expected, actual: bytes.len() });
    }
    let bit_at = |i: usize| -> bool {
        let b = bytes[1 + i / 6] - OFFSET;
        (b >> (5 - i % 6)) & 1 != 0
    };
    for i in nbits..(expected - 1) * 6 {
        if bit_at(i) {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    let mut g = Graph::new(n);
    let mut i = 0;
    for col in 1..n {
        for row in 0..col {
            if bit_at(i) {
                g.add_edge(row, col);
            }
            i += 1;
        }
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Graph6Error {
    Empty,
    InvalidByte { pos: usize, byte: u8 },
    BadLength { expected: usize, actual: usize },
    NonzeroPadding,
    LongForm,
    TooLarge { n: usize },
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 string"),
            Graph6Error::InvalidByte { pos, byte } => {
                write!(f, "byte {byte:#x} at position {pos} is outside the graph6 range 63..=126")
            }
            Graph6Error::BadLength { expected, actual } => {
                write!(f, "bad graph6 length: expected {expected} bytes, got {actual}")
            }
            Graph6Error::NonzeroPadding => write!(f, "nonzero padding bits"),
            Graph6Error::LongForm => write!(f, "graph6 long form (n > 62) is not supported"),
            Graph6Error::TooLarge { n } => {
                write!(f, "{n} vertices does not fit the graph6 short form (n <= 62)")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec::Vec;

    /// Independent encoder, written directly from the format description:
    /// collect the column-major upper-triangle bits into a plain bit
    /// vector, then chunk. Kept separate from the production path on
    /// purpose.
    fn oracle_encode(g: &Graph) -> String {
        let mut bits: Vec<bool> = Vec::new();
        for col in 1..g.n() {
            for row in 0..col {
                bits.push(g.has_edge(row, col));
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(false);
        }
        let mut s = String::new();
        s.push((63 + g.n() as u8) as char);
        for chunk in bits.chunks(6) {
            let val = chunk.iter().fold(0u8, |acc, &b| (acc << 1) | u8::from(b));
            s.push((63 + val) as char);
        }
        s
    }

    #[test]
    fn known_encodings() {
        assert_eq!(oracle_encode(&Graph::complete(2)), "A_");
        assert_eq!(oracle_encode(&Graph::complete(3)), "Bw");
        assert_eq!(oracle_encode(&Graph::new(1)), "@");

        assert_eq!(write_graph6(&Graph::complete(2)).unwrap(), "A_");
        assert_eq!(write_graph6(&Graph::complete(3)).unwrap(), "Bw");
        assert_eq!(write_graph6(&Graph::new(1)).unwrap(), "@");

        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(parse_graph6("@").unwrap(), Graph::new(1));
    }

    #[test]
    fn matches_oracle_on_assorted_graphs() {
        let samples = [
            Graph::path(5),
            Graph::cycle(6),
            Graph::complete(7),
            Graph::complete_bipartite(2, 4),
            Graph::star(6),
            Graph::diamond(),
            Graph::edgeless(9),
            Graph::cycle(9).complement(),
        ];
        for g in &samples {
            let enc = write_graph6(g).unwrap();
            assert_eq!(enc, oracle_encode(g));
            assert_eq!(parse_graph6(&enc).unwrap(), *g);
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6("A"),
            Err(Graph6Error::BadLength { expected: 2, actual: 1 })
        );
        assert_eq!(parse_graph6("A_ "), Err(Graph6Error::InvalidByte { pos: 2, byte: b' ' }));
        assert_eq!(parse_graph6("~~~"), Err(Graph6Error::LongForm));
        // "A" header + group with a bit beyond the single triangle bit.
        let bad_padding = "A".to_string() + core::str::from_utf8(&[63 + 0b010000]).unwrap();
        assert_eq!(parse_graph6(&bad_padding), Err(Graph6Error::NonzeroPadding));
    }

    #[test]
    fn write_rejects_oversized() {
        assert_eq!(write_graph6(&Graph::new(63)), Err(Graph6Error::TooLarge { n: 63 }));
        let g = Graph::new(62);
        let enc = write_graph6(&g).unwrap();
        assert_eq!(parse_graph6(&enc).unwrap(), g);
    }
}
