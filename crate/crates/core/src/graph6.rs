//! graph6 codec for graphs with at most 62 vertices.
//!
//! The size is a single byte `63 + n`. The upper triangle of the adjacency
//! matrix follows in column-major order (x(0,1), x(0,2), x(1,2), x(0,3), ...),
//! packed six bits per byte, most significant bit first, zero padded, and
//! each group offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_VERTICES: usize = 62;
pub const HEADER: &str = ">>graph6<<";

fn bit_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            cap: MAX_VERTICES,
            what: "graph6",
        });
    }
    let nbits = bit_count(n);
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(63 + n as u8);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Parses one graph6 line. An optional `>>graph6<<` header and a single
/// trailing line terminator are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text
        .strip_suffix("\r\n")
        .or_else(|| text.strip_suffix('\n'))
        .unwrap_or(text);
    let (body, base) = match line.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (line.as_bytes(), 0),
    };
    let err = |offset: usize, reason: String| Error::Graph6 {
        offset: base + offset,
        reason,
    };

    let &size = body
        .first()
        .ok_or_else(|| err(0, "missing size byte".into()))?;
    if !(63..=126).contains(&size) {
        return Err(err(
            0,
            format!("byte {size:#04x} is not a graph6 character"),
        ));
    }
    if size == 126 {
        return Err(Error::TooLarge {
            n: MAX_VERTICES + 1,
            cap: MAX_VERTICES,
            what: "graph6",
        });
    }
    let n = (size - 63) as usize;
    let nbits = bit_count(n);
    let nbytes = nbits.div_ceil(6);
    let data = &body[1..];
    if data.len() < nbytes {
        return Err(err(
            body.len(),
            format!(
                "expected {nbytes} data bytes for n={n}, found {}",
                data.len()
            ),
        ));
    }
    if data.len() > nbytes {
        return Err(err(1 + nbytes, "trailing bytes after graph data".into()));
    }
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(
                1 + i,
                format!("byte {b:#04x} is not a graph6 character"),
            ));
        }
    }
    let pad = nbytes * 6 - nbits;
    if pad > 0 {
        let last = data[nbytes - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(nbytes, "nonzero padding bits".into()));
        }
    }

    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
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
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};

    #[test]
    fn fixed_vectors() {
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(parse_graph6("A_").unwrap(), complete(2));
        assert_eq!(parse_graph6("C~").unwrap(), complete(4));
        assert_eq!(encode_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(encode_graph6(&complete(2)).unwrap(), "A_");
        assert_eq!(encode_graph6(&complete(4)).unwrap(), "C~");
    }

    #[test]
    fn path4_hand_encoded() {
        // bits x01 x02 x12 x03 x13 x23 = 1 0 1 0 0 1 -> 0b101001 = 41, +63 = 104 'h'
        assert_eq!(encode_graph6(&path(4)).unwrap(), "Ch");
        assert_eq!(parse_graph6("Ch").unwrap(), path(4));
    }

    #[test]
    fn header_accepted_not_emitted() {
        let g = parse_graph6(">>graph6<<C~\n").unwrap();
        assert_eq!(g, complete(4));
        assert_eq!(encode_graph6(&g).unwrap(), "C~");
    }

    #[test]
    fn errors_name_offsets() {
        match parse_graph6("C~~") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_graph6("C ") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        match parse_graph6(">>graph6<<C") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 11),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_graph6(""),
            Err(Error::Graph6 { offset: 0, .. })
        ));
        // "A" followed by 0b000001 (padding bit set) is not canonical.
        assert!(parse_graph6("A@").is_err());
        assert!(matches!(parse_graph6("~??~"), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn over_cap_rejected() {
        assert!(matches!(
            encode_graph6(&Graph::empty(63)),
            Err(Error::TooLarge { .. })
        ));
        assert_eq!(
            encode_graph6(&Graph::empty(62)).unwrap().len(),
            1 + 1891usize.div_ceil(6)
        );
    }
}
