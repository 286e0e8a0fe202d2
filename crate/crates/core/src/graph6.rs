//! graph6 text interchange, short form only (order at most 62).
//!
//! One graph per line: a single size byte `n + 63`, then the upper triangle of
//! the adjacency matrix read column by column — bit order (0,1), (0,2), (1,2),
//! (0,3), ... — packed big-endian into 6-bit groups, each offset by 63 into
//! the printable range.

use crate::error::{Error, Result};
use crate::graph::{GeneralGraph, Graph};

pub const MAX_ORDER: usize = 62;

pub fn encode<G: Graph + ?Sized>(g: &G) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::Graph6(format!(
            "short form encodes at most {MAX_ORDER} vertices, got {n}"
        )));
    }
    let nbits = n * (n.saturating_sub(1)) / 2;
    let mut bits = vec![false; nbits];
    for (a, b) in g.edges() {
        bits[bit_index(a, b)] = true;
    }
    let mut out = String::with_capacity(1 + nbits.div_ceil(6));
    out.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for (i, &bit) in chunk.iter().enumerate() {
            if bit {
                v |= 1 << (5 - i);
            }
        }
        out.push((v + 63) as char);
    }
    Ok(out)
}

pub fn decode(line: &str) -> Result<GeneralGraph> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty line".into()));
    }
    if !(63..=126).contains(&bytes[0]) {
        return Err(Error::Graph6(format!("size byte {} out of range", bytes[0])));
    }
    let n = (bytes[0] - 63) as usize;
    if n > MAX_ORDER {
        return Err(Error::Graph6(format!(
            "long-form sizes (> {MAX_ORDER} vertices) are not supported"
        )));
    }
    if n == 0 {
        return Err(Error::Graph6("order-0 graph".into()));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expect = 1 + nbits.div_ceil(6);
    if bytes.len() != expect {
        return Err(Error::Graph6(format!(
            "expected {expect} bytes for order {n}, got {}",
            bytes.len()
        )));
    }
    let mut bits = Vec::with_capacity(bytes.len().saturating_sub(1) * 6);
    for &b in &bytes[1..] {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} out of printable range")));
        }
        let v = b - 63;
        for i in 0..6 {
            bits.push(v & (1 << (5 - i)) != 0);
        }
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    GeneralGraph::new(n, edges)
}

#[inline]
fn bit_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CycleGraph;

    // Bit-layout oracle used to freeze the expected strings below: K3 packs
    // bits 111 -> 111000 = 56, 56 + 63 = 119 = 'w', size byte 3 + 63 = 'B';
    // a single vertex is just the size byte 1 + 63 = '@'.
    #[test]
    fn known_encodings() {
        let k3 = CycleGraph::new(3, []).unwrap();
        assert_eq!(encode(&k3).unwrap(), "Bw");
        let one = GeneralGraph::new(1, []).unwrap();
        assert_eq!(encode(&one).unwrap(), "@");
    }

    #[test]
    fn round_trip_fan9() {
        let fan = crate::families::fan(9).unwrap();
        let line = encode(&fan).unwrap();
        let back = decode(&line).unwrap();
        assert_eq!(back.edges(), fan.edges());
        assert_eq!(back.order(), 9);
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(decode("").is_err());
        assert!(decode("B").is_err()); // truncated
        assert!(decode("Bw~").is_err()); // trailing garbage
        assert!(decode("B\x1f").is_err()); // unprintable body
        assert!(decode("Bz").is_err()); // nonzero padding
        assert!(decode("~??").is_err()); // long form
    }

    #[test]
    fn decode_accepts_trailing_newline() {
        assert_eq!(decode("Bw\n").unwrap().size(), 3);
    }
}
