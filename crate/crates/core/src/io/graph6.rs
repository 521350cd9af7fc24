//! graph6 encoding: size field, then the upper triangle in column order
//! `(0,1), (0,2), (1,2), (0,3), …`, six bits per printable byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count accepted in either direction is `GRAPH6_MAX_N - 1`.
pub const GRAPH6_MAX_N: usize = 1 << 18;

const HEADER: &[u8] = b">>graph6<<";

pub fn write_graph6(g: &Graph) -> Result<Vec<u8>> {
    let n = g.n();
    if n >= GRAPH6_MAX_N {
        return Err(Error::TooLarge {
            what: format!("graph6 output with n = {n}"),
            limit: format!("n < {GRAPH6_MAX_N}"),
        });
    }
    let mut out = size_field(n);
    out.reserve((n * n.saturating_sub(1) / 2).div_ceil(6));
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
    Ok(out)
}

fn size_field(n: usize) -> Vec<u8> {
    let digits = |k: usize| (0..k).rev().map(move |i| ((n >> (6 * i)) & 63) as u8 + 63);
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        std::iter::once(126).chain(digits(3)).collect()
    } else {
        [126, 126].into_iter().chain(digits(6)).collect()
    }
}

/// Decodes a single graph6 line. An optional `>>graph6<<` header and surrounding ASCII
/// whitespace are ignored.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph> {
    let bytes = bytes.trim_ascii();
    let bytes = bytes.strip_prefix(HEADER).unwrap_or(bytes);
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Malformed(format!("graph6 byte {b:#04x} outside 63..=126")));
    }
    let six = |s: &[u8]| s.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
    let (n, body) = match bytes {
        [] => return Err(Error::Malformed("empty graph6 input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Malformed("truncated graph6 size field".into()));
            }
            (six(&rest[..6]), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Malformed("truncated graph6 size field".into()));
            }
            (six(&rest[..3]), &rest[3..])
        }
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    if n >= GRAPH6_MAX_N {
        return Err(Error::TooLarge {
            what: format!("graph6 input with n = {n}"),
            limit: format!("n < {GRAPH6_MAX_N}"),
        });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    if body.len() != need {
        return Err(Error::Malformed(format!(
            "graph6 body has {} bytes, expected {need} for n = {n}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (pairs..need * 6).any(bit) {
        return Err(Error::Malformed("nonzero graph6 padding bits".into()));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.set_edge(i, j, true);
            }
            k += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, path};

    #[test]
    fn known_vectors() {
        assert_eq!(parse_graph6(b"C~").unwrap(), complete(4));
        assert_eq!(parse_graph6(b"Bg").unwrap(), path(3));
        assert_eq!(parse_graph6(b"?").unwrap(), Graph::empty(0));
        assert_eq!(write_graph6(&complete(4)).unwrap(), b"C~");
        assert_eq!(write_graph6(&Graph::empty(1)).unwrap(), b"@");
        assert_eq!(parse_graph6(b">>graph6<<C~\n").unwrap(), complete(4));
    }

    #[test]
    fn multi_byte_sizes() {
        for n in [62, 63, 100, 300] {
            let g = path(n);
            let enc = write_graph6(&g).unwrap();
            assert_eq!(enc[0] == 126, n > 62);
            assert_eq!(parse_graph6(&enc).unwrap(), g);
        }
        assert_eq!(size_field(258_047), vec![126, 125, 126, 126]);
        assert_eq!(size_field(258_048), vec![126, 126, 63, 63, 63, 126, 63, 63]);
        let mut too_big = size_field(GRAPH6_MAX_N);
        too_big.push(63);
        assert!(matches!(parse_graph6(&too_big), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_graph6(b""), Err(Error::Malformed(_))));
        assert!(matches!(parse_graph6(b"C"), Err(Error::Malformed(_))));
        assert!(matches!(parse_graph6(b"C~~"), Err(Error::Malformed(_))));
        assert!(matches!(parse_graph6(b"C\x7f"), Err(Error::Malformed(_))));
        assert!(matches!(parse_graph6(b"~?"), Err(Error::Malformed(_))));
        // n = 3 uses three bits; the low three must be zero.
        assert!(matches!(parse_graph6(b"B@"), Err(Error::Malformed(_))));
    }
}
