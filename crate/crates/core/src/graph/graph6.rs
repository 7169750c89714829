//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column order (`(0,1), (0,2), (1,2), (0,3), ...`),
//! packed big-endian into 6-bit groups, each offset by 63.

use super::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";
const MAX_N: usize = 68_719_476_735;

fn err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sixbits(bytes: &[u8], offset: usize) -> Result<u64, GraphError> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
        Some(&b) => Err(err(
            offset,
            format!("byte 0x{b:02x} outside the printable range 63..=126"),
        )),
        None => Err(err(offset, "unexpected end of input")),
    }
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and surrounding
/// whitespace are accepted; padding bits must be zero.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let trimmed = text.trim();
    let (body, base) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (trimmed, 0),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(err(base, "empty graph6 string"));
    }

    let (n, mut pos) = if bytes[0] != 126 {
        (sixbits(bytes, 0).map_err(|e| shift(e, base))? as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0u64;
        for i in 1..4 {
            n = n << 6 | sixbits(bytes, i).map_err(|e| shift(e, base))?;
        }
        if n < 63 {
            return Err(err(base, format!("long size form used for n={n} < 63")));
        }
        (n as usize, 4)
    } else {
        let mut n = 0u64;
        for i in 2..8 {
            n = n << 6 | sixbits(bytes, i).map_err(|e| shift(e, base))?;
        }
        if n < 258_048 {
            return Err(err(
                base,
                format!("8-byte size form used for n={n} < 258048"),
            ));
        }
        (n as usize, 8)
    };
    if n > 100_000 {
        return Err(err(
            base,
            format!("graph on {n} vertices is larger than supported"),
        ));
    }

    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    let remaining = bytes.len() - pos;
    if remaining != expected {
        return Err(err(
            base + pos + remaining.min(expected),
            format!("expected {expected} adjacency bytes for n={n}, found {remaining}"),
        ));
    }

    let mut g = Graph::empty(n);
    let (mut i, mut j) = (0usize, 1usize);
    let mut bit_index = 0usize;
    while bit_index < expected * 6 {
        let chunk = sixbits(bytes, pos).map_err(|e| shift(e, base))?;
        for shift_by in (0..6).rev() {
            let set = chunk >> shift_by & 1 == 1;
            if bit_index < pairs {
                if set {
                    g.set(i, j);
                }
                i += 1;
                if i == j {
                    i = 0;
                    j += 1;
                }
            } else if set {
                return Err(err(base + pos, "nonzero padding bits"));
            }
            bit_index += 1;
        }
        pos += 1;
    }
    Ok(g)
}

fn shift(e: GraphError, base: usize) -> GraphError {
    match e {
        GraphError::Graph6 { offset, reason } => GraphError::Graph6 {
            offset: offset + base,
            reason,
        },
        other => other,
    }
}

/// Encodes `g` without header or trailing newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_N);
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for s in [12, 6, 0] {
            out.push((n >> s & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for s in [30, 24, 18, 12, 6, 0] {
            out.push((n >> s & 63) as u8 + 63);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
