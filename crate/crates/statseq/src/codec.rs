//! graph6 and plain edge-list serialization.
//!
//! graph6 layout: size bytes (`63 + n` for `n <= 62`, else `126` followed by
//! three sixtet bytes for `n <= 258047`), then `ceil(n(n-1)/2 / 6)` data
//! bytes packing the upper triangle column by column, six bits per byte,
//! most significant bit first, each byte offset by 63. The optional
//! `>>graph6<<` header is accepted on input and never written.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const MAX_LONG_ORDER: usize = 258_047;

/// Encodes the upper-triangle bits produced by `bit(u, v)` for `u < v`,
/// visited in graph6 order: `(0,1), (0,2), (1,2), (0,3), ...`.
pub(crate) fn graph6_bytes<F: FnMut(usize, usize) -> bool>(n: usize, mut bit: F) -> Vec<u8> {
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        assert!(n <= MAX_LONG_ORDER, "graph6 order limit exceeded");
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(bit(u, v));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    out
}

pub fn to_graph6(g: &Graph) -> String {
    let bytes = graph6_bytes(g.n(), |u, v| g.has_edge(u, v));
    String::from_utf8(bytes).expect("graph6 bytes are ASCII")
}

pub fn from_graph6(line: &str) -> Result<Graph> {
    let s = line.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6("byte out of printable graph6 range".into()));
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::Graph6("orders above 258047 not supported".into()));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated size field".into()));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n == 0 {
        return Err(Error::Graph6("order 0 not supported".into()));
    }
    let nbits = n * (n - 1) / 2;
    let need = nbits.div_ceil(6);
    if bytes.len() - pos != need {
        return Err(Error::Graph6(format!(
            "expected {} data bytes for order {}, found {}",
            need,
            n,
            bytes.len() - pos
        )));
    }
    let mut g = Graph::new(n);
    let mut acc = 0u8;
    let mut avail = 0u8;
    for v in 1..n {
        for u in 0..v {
            if avail == 0 {
                acc = bytes[pos] - 63;
                pos += 1;
                avail = 6;
            }
            if acc & 0x20 != 0 {
                g.add_edge(u, v)?;
            }
            acc <<= 1;
            avail -= 1;
        }
    }
    // trailing padding bits must be zero
    if avail > 0 {
        let remaining = (((1u16 << avail) - 1) as u8) << (6 - avail);
        if acc & remaining != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

/// Edge-list text format: first line `n m`, then `m` lines `u v` (0-based).
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let head = lines
        .next()
        .ok_or_else(|| Error::EdgeList("empty input".into()))?;
    let mut it = head.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::EdgeList("bad vertex count".into()))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::EdgeList("bad edge count".into()))?;
    if it.next().is_some() {
        return Err(Error::EdgeList("trailing tokens on header line".into()));
    }
    if n == 0 {
        return Err(Error::EdgeList("order 0 not supported".into()));
    }
    let mut g = Graph::new(n);
    let mut count = 0;
    for line in lines {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeList(format!("bad edge line {line:?}")))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeList(format!("bad edge line {line:?}")))?;
        if it.next().is_some() {
            return Err(Error::EdgeList(format!("trailing tokens on {line:?}")));
        }
        if g.has_edge(u, v) {
            return Err(Error::EdgeList(format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v)?;
        count += 1;
    }
    if count != m {
        return Err(Error::EdgeList(format!(
            "header declares {m} edges, found {count}"
        )));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_graph6_encoding() {
        // 5 vertices, edges 0-2, 0-4, 1-3, 3-4 encodes as "DQc"
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(from_graph6("DQc").unwrap(), g);
        assert_eq!(from_graph6(">>graph6<<DQc").unwrap(), g);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new(1);
        assert_eq!(to_graph6(&g), "@");
        assert_eq!(from_graph6("@").unwrap().n(), 1);
    }

    #[test]
    fn long_form_round_trip() {
        let n = 100;
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed_graph6() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("D").is_err()); // missing data bytes
        assert!(from_graph6("DQcX").is_err()); // extra data
        assert!(from_graph6("B ").is_err()); // byte below 63
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let text = to_edge_list(&g);
        assert_eq!(text, "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(from_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(from_edge_list("").is_err());
        assert!(from_edge_list("4 2\n0 1\n").is_err()); // count mismatch
        assert!(from_edge_list("4 2\n0 1\n0 1\n").is_err()); // duplicate
        assert!(from_edge_list("4 1\n0 0\n").is_err()); // loop
        assert!(from_edge_list("4 1\n0 9\n").is_err()); // range
    }
}
