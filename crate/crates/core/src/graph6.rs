//! graph6 encoding.
//!
//! Printable ASCII 63..=126. A size prefix (one byte `n + 63` for `n <= 62`,
//! otherwise `~` followed by three bytes of 18-bit big-endian `n`) is followed
//! by the upper triangle of the adjacency matrix in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ..`, packed big-endian into 6-bit groups,
//! zero-padded, each group offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;

fn bit_bytes(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + bit_bytes(n));
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses one graph6 line. Trailing `\n` / `\r\n` is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b} outside 63..=126")));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, ..] => return Err(Error::Capacity(usize::MAX)),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated size prefix".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - OFFSET) as usize);
            if n <= 62 {
                return Err(Error::Graph6(format!("long size prefix used for n = {n}")));
            }
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - OFFSET) as usize, rest),
    };
    if n > MAX_VERTICES {
        return Err(Error::Capacity(n));
    }
    if body.len() != bit_bytes(n) {
        return Err(Error::Graph6(format!(
            "expected {} data bytes for n = {n}, found {}",
            bit_bytes(n),
            body.len()
        )));
    }
    let total = n * n.saturating_sub(1) / 2;
    let bit = |k: usize| (body[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if (total..body.len() * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    Ok(Graph::from_rows_unchecked(rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_is_question_mark() {
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
    }

    #[test]
    fn known_encodings() {
        // K2: one bit set -> 0b100000 + 63 = 95 = '_'
        assert_eq!(to_graph6(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(to_graph6(&Graph::cycle(5).unwrap()), "Dhc");
        assert_eq!(to_graph6(&Graph::complete(4).unwrap()), "C~");
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(to_graph6(&g), "D?{");
    }

    #[test]
    fn length_formula() {
        let g = Graph::path(7).unwrap();
        // 1 size byte + ceil(21 / 6) data bytes
        assert_eq!(to_graph6(&g).len(), 1 + 4);
    }

    #[test]
    fn large_prefix_round_trip() {
        let g = Graph::cycle(64).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let g = Graph::complete(63).unwrap();
        assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("D?").is_err());
        assert!(parse_graph6("D?{?").is_err());
        assert!(parse_graph6("A ").is_err());
        // padding bit set: K2 uses 1 of 6 bits
        assert!(parse_graph6("A`").is_err());
        assert!(parse_graph6("~~??????").is_err());
    }

    #[test]
    fn trailing_newline_ok() {
        assert_eq!(parse_graph6("Dhc\n").unwrap(), Graph::cycle(5).unwrap());
    }
}
