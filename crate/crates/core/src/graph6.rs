//! Dense graph6 encoding for graphs on at most 32 vertices.
//!
//! Layout: one size byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column order (`(0,1), (0,2), (1,2), (0,3), …`) packed six bits
//! per byte, most significant bit first, each byte offset by 63. Unused
//! padding bits in the final byte must be zero.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_N};

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&head, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty string".into()))?;
    if !(63..=126).contains(&head) {
        return Err(Error::Graph6(format!("bad size byte {head:#x}")));
    }
    if head == 126 {
        return Err(Error::Graph6(format!(
            "multi-byte size field: only n <= {MAX_N} is supported"
        )));
    }
    let n = (head - 63) as usize;
    if n == 0 || n > MAX_N {
        return Err(Error::Graph6(format!("n = {n} is outside 1..={MAX_N}")));
    }
    let nbits = n * (n - 1) / 2;
    let expect = nbits.div_ceil(6);
    if body.len() != expect {
        return Err(Error::Graph6(format!(
            "expected {expect} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut rows = vec![0u32; n];
    let mut k = 0;
    for (idx, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!(
                "bad data byte {b:#x} at {}",
                idx + 1
            )));
        }
        let val = b - 63;
        for bit in (0..6).rev() {
            let set = val >> bit & 1 == 1;
            if k >= nbits {
                if set {
                    return Err(Error::Graph6("nonzero padding bits".into()));
                }
                continue;
            }
            if set {
                let (i, j) = triangle_position(k);
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_rows(&rows)
}

/// Maps a bit index to its `(i, j)` pair with `i < j` in column order.
fn triangle_position(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= k {
        start += j;
        j += 1;
    }
    (k - start, j)
}

/// Decodes a newline-delimited graph6 stream, skipping blank lines.
pub fn read_stream<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph>> {
    reader.lines().filter_map(|line| match line {
        Ok(l) if l.trim().is_empty() => None,
        Ok(l) => Some(decode(l.trim())),
        Err(e) => Some(Err(Error::Graph6(e.to_string()))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(encode(&k1), "@");
        assert_eq!(decode("@").unwrap(), k1);
    }

    #[test]
    fn known_string() {
        // edges A-C, A-E, B-D, D-E on five vertices
        let g = Graph::build(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
        assert_eq!(encode(&Graph::complete(4).unwrap()), "C~");
    }

    #[test]
    fn rejects_padding_bits() {
        // n = 2 has one data bit; the low five bits are padding.
        assert!(decode("A_").is_ok());
        assert!(matches!(decode("A`"), Err(Error::Graph6(_))));
    }

    #[test]
    fn rejects_bad_headers() {
        assert!(decode("").is_err());
        assert!(decode("?").is_err());
        assert!(decode("~???").is_err());
        assert!(decode("a").is_err());
        assert!(decode("D").is_err());
        assert!(decode("DQcc").is_err());
        assert!(decode("D Q").is_err());
    }

    #[test]
    fn stream() {
        let text = "DQc\n\n@\nC~\n";
        let gs: Vec<_> = read_stream(text.as_bytes()).collect::<Result<_>>().unwrap();
        assert_eq!(gs.len(), 3);
        assert_eq!(gs[2], Graph::complete(4).unwrap());
    }

    #[test]
    fn position_order() {
        assert_eq!(triangle_position(0), (0, 1));
        assert_eq!(triangle_position(1), (0, 2));
        assert_eq!(triangle_position(2), (1, 2));
        assert_eq!(triangle_position(3), (0, 3));
    }
}
