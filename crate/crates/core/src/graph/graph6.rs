//! graph6 text encoding: a size prefix followed by the upper-triangle
//! adjacency bits in column order (`(0,1), (0,2), (1,2), (0,3), ...`),
//! packed big-endian into 6-bit groups, each offset by 63.

use super::{Graph, GraphError};

const OFFSET: u8 = 63;
/// Largest order the one-byte size prefix can express.
pub const SHORT_FORM_MAX: usize = 62;
const LONG_FORM_MAX: usize = 258_047;

/// Encodes `g`. Orders above 62 use the four-byte size prefix.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * (n - 1) / 2).div_ceil(6));
    if n <= SHORT_FORM_MAX {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        out.extend([(n >> 12) as u8 & 63, (n >> 6) as u8 & 63, n as u8 & 63].map(|c| c + OFFSET));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 string (surrounding whitespace and an optional
/// `>>graph6<<` header are tolerated).
pub fn parse_graph6(s: &str) -> Result<Graph, GraphError> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let bad = |position: usize, reason: &str| GraphError::Graph6 {
        position,
        reason: reason.to_string(),
    };
    if let Some(pos) = bytes.iter().position(|&c| !(63..=126).contains(&c)) {
        return Err(bad(pos, "character outside 63..=126"));
    }
    let (n, body) = match bytes {
        [] => return Err(bad(0, "empty string")),
        [126, 126, ..] => return Err(bad(1, "orders above 258047 are not supported")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad(bytes.len(), "truncated size prefix"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &c| (acc << 6) | (c - OFFSET) as usize);
            if n <= SHORT_FORM_MAX || n > LONG_FORM_MAX {
                return Err(bad(1, "non-canonical size prefix"));
            }
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - OFFSET) as usize, rest),
    };
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    let header = bytes.len() - body.len();
    if body.len() != expected {
        return Err(bad(
            header + body.len().min(expected),
            &format!("expected {expected} data bytes for n = {n}, found {}", body.len()),
        ));
    }
    let pad = expected * 6 - bits;
    if pad > 0 && (body[expected - 1] - OFFSET) & ((1 << pad) - 1) != 0 {
        return Err(bad(header + expected - 1, "nonzero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = body[k / 6] - OFFSET;
            if chunk >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}
