//! Headerless graph6 serialization for graphs on up to 32 vertices.
//!
//! The format: one size byte n+63 (or a multi-byte size for n > 62, which
//! always exceeds our capacity), then the upper-triangle adjacency bits in
//! column order (0,1), (0,2), (1,2), (0,3), ... packed six per byte, each
//! 6-bit group offset by 63, zero-padded at the end.

use abcmax::{Graph, GraphError};
use std::fmt;

// ===== errors =====

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Graph6Error {
    /// The input string is empty.
    Empty,
    /// A size byte is outside the printable graph6 range.
    BadSizeByte { offset: usize, byte: u8 },
    /// The encoded order exceeds the 32-vertex capacity.
    OrderTooLarge { n: u64 },
    /// The string ends before all adjacency bits arrive.
    Truncated { expected: usize, got: usize },
    /// A data byte is outside the printable graph6 range.
    BadDataByte { offset: usize, byte: u8 },
    /// Padding bits past the last adjacency bit are not zero.
    TrailingBits { offset: usize },
    /// Bytes remain after the final adjacency group.
    TrailingBytes { offset: usize },
    /// The decoded order was rejected by the graph constructor.
    Graph(GraphError),
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Graph6Error::Empty => write!(fm, "empty graph6 string"),
            Graph6Error::BadSizeByte { offset, byte } => {
                write!(fm, "invalid size byte 0x{:02x} at offset {}", byte, offset)
            }
            Graph6Error::OrderTooLarge { n } => {
                write!(fm, "order {} exceeds the 32-vertex capacity", n)
            }
            Graph6Error::Truncated { expected, got } => {
                write!(fm, "truncated graph6 string: need {} bytes, got {}", expected, got)
            }
            Graph6Error::BadDataByte { offset, byte } => {
                write!(fm, "invalid data byte 0x{:02x} at offset {}", byte, offset)
            }
            Graph6Error::TrailingBits { offset } => {
                write!(fm, "nonzero padding bits in the group at offset {}", offset)
            }
            Graph6Error::TrailingBytes { offset } => {
                write!(fm, "unexpected trailing bytes at offset {}", offset)
            }
            Graph6Error::Graph(e) => write!(fm, "decoded graph rejected: {}", e),
        }
    }
}

impl std::error::Error for Graph6Error {}

impl From<GraphError> for Graph6Error {
    fn from(e: GraphError) -> Graph6Error {
        Graph6Error::Graph(e)
    }
}

// ===== decoding =====

/// Decode the order, returning it with the offset where data bytes start.
fn parse_order(bytes: &[u8]) -> Result<(u64, usize), Graph6Error> {
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if bytes[0] != b'~' {
        if !(63..=126).contains(&bytes[0]) {
            return Err(Graph6Error::BadSizeByte { offset: 0, byte: bytes[0] });
        }
        return Ok(((bytes[0] - 63) as u64, 1));
    }
    // multi-byte orders encode n > 62, always beyond capacity; decode them
    // anyway so the error names the order
    let (count, skip) = if bytes.len() > 1 && bytes[1] == b'~' {
        (6usize, 2usize)
    } else {
        (3usize, 1usize)
    };
    if bytes.len() < skip + count {
        return Err(Graph6Error::Truncated { expected: skip + count, got: bytes.len() });
    }
    let mut n: u64 = 0;
    for i in 0..count {
        let b = bytes[skip + i];
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadSizeByte { offset: skip + i, byte: b });
        }
        n = (n << 6) | (b - 63) as u64;
    }
    Ok((n, skip + count))
}

/// Parse a headerless graph6 string into a graph on at most 32 vertices.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (order, start) = parse_order(bytes)?;
    if order > 32 {
        return Err(Graph6Error::OrderTooLarge { n: order });
    }
    let n = order as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let data_len = bit_count.div_ceil(6);
    if bytes.len() < start + data_len {
        return Err(Graph6Error::Truncated { expected: start + data_len, got: bytes.len() });
    }
    if bytes.len() > start + data_len {
        return Err(Graph6Error::TrailingBytes { offset: start + data_len });
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut idx = 0usize;
    // column-major upper triangle: bit idx runs over (0,1), (0,2), (1,2), ...
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(bit_count);
    for v in 1..n {
        for u in 0..v {
            pairs.push((u, v));
        }
    }
    for (i, &b) in bytes[start..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadDataByte { offset: start + i, byte: b });
        }
        let group = b - 63;
        for bit in 0..6 {
            let set = (group >> (5 - bit)) & 1 == 1;
            if idx < bit_count {
                if set {
                    edges.push(pairs[idx]);
                }
            } else if set {
                return Err(Graph6Error::TrailingBits { offset: start + i });
            }
            idx += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

// ===== encoding =====

/// Encode a graph as a headerless graph6 string.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut group = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            group = (group << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((group << (6 - filled)) + 63) as char);
    }
    out
}

// ===== tests =====

#[cfg(test)]
mod tests {
    use super::*;
    use abcmax::{
        abc_index, build_edgeconn_extremal, enumerate_connected, is_isomorphic, EnumerationTask,
    };

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((5 + i, 5 + (i + 2) % 5));
            e.push((i, 5 + i));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    #[test]
    fn known_encodings() {
        // strings frozen from an independent graph6 writer
        assert_eq!(write_graph6(&Graph::complete(1).unwrap()), "@");
        assert_eq!(write_graph6(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(write_graph6(&Graph::empty(5).unwrap()), "D??");
        assert_eq!(write_graph6(&Graph::star(4).unwrap()), "Cs");
        assert_eq!(write_graph6(&Graph::path(4).unwrap()), "Ch");
        assert_eq!(write_graph6(&Graph::cycle(5).unwrap()), "Dhc");
        let k33 = Graph::join(&Graph::empty(3).unwrap(), &Graph::empty(3).unwrap()).unwrap();
        assert_eq!(write_graph6(&k33), "EFz_");
        assert_eq!(write_graph6(&build_edgeconn_extremal(6, 2).unwrap()), "E}vW");
        assert_eq!(write_graph6(&petersen()), "IheA@GUAo");
    }

    #[test]
    fn known_decodings() {
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4, Graph::complete(4).unwrap());
        assert!((abc_index(&k4) - 4.0).abs() < 1e-12);
        let empty5 = parse_graph6("D??").unwrap();
        assert_eq!(empty5, Graph::empty(5).unwrap());
        assert_eq!(parse_graph6("IheA@GUAo").unwrap(), petersen());
        // trailing newline from a file or pipe is tolerated
        assert_eq!(parse_graph6("C~\n").unwrap(), Graph::complete(4).unwrap());
    }

    #[test]
    fn round_trip_all_connected_up_to_five() {
        for n in 2..=5 {
            let task = EnumerationTask::unconstrained(n).unwrap();
            for g in enumerate_connected(&task) {
                let text = write_graph6(&g);
                let back = parse_graph6(&text).unwrap();
                assert_eq!(back, g, "{}", text);
                assert!(is_isomorphic(&back, &g));
                assert_eq!(write_graph6(&back), text);
            }
        }
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6("\x1fC~"),
            Err(Graph6Error::BadSizeByte { offset: 0, byte: 0x1f })
        );
        // n = 5 needs two data bytes
        assert_eq!(
            parse_graph6("D?"),
            Err(Graph6Error::Truncated { expected: 3, got: 2 })
        );
        assert_eq!(
            parse_graph6("C~~"),
            Err(Graph6Error::TrailingBytes { offset: 2 })
        );
        assert_eq!(
            parse_graph6("C\x20"),
            Err(Graph6Error::BadDataByte { offset: 1, byte: 0x20 })
        );
        // K2 has one adjacency bit; "A_" sets exactly it, "AG" sets padding
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(
            parse_graph6("AG"),
            Err(Graph6Error::TrailingBits { offset: 1 })
        );
        // 3-byte order form encodes n = 63: well-formed but over capacity
        assert_eq!(
            parse_graph6("~??~"),
            Err(Graph6Error::OrderTooLarge { n: 63 })
        );
        assert!(matches!(
            parse_graph6("~?@"),
            Err(Graph6Error::Truncated { .. })
        ));
    }
}
