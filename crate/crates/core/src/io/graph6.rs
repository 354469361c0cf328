//! graph6: the printable upper-triangle encoding used by nauty.
//!
//! Each byte carries six bits plus 63. The order comes first (one, four or
//! eight bytes), followed by the bits `x(i, j)` for `0 <= i < j < n` in
//! column order `(0,1), (0,2), (1,2), (0,3), ...`, zero-padded to a multiple
//! of six.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, VertexLabel};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;
const MAX_ORDER: usize = (1 << 36) - 1;

fn err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn sextets(bytes: &[u8]) -> impl Iterator<Item = u64> + '_ {
    bytes.iter().map(|&b| u64::from(b - BIAS))
}

/// Decodes the order prefix; returns `(order, bytes consumed)`.
fn decode_order(bytes: &[u8]) -> Result<(usize, usize)> {
    let fold = |s: &[u8]| sextets(s).fold(0u64, |acc, x| (acc << 6) | x) as usize;
    match bytes {
        [] => Err(err("empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(err("truncated order field"));
            }
            Ok((fold(&rest[..6]), 8))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err("truncated order field"));
            }
            Ok((fold(&rest[..3]), 4))
        }
        [b, ..] => Ok((usize::from(b - BIAS), 1)),
    }
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    let push = |out: &mut Vec<u8>, n: usize, groups: u32| {
        for g in (0..groups).rev() {
            out.push(((n >> (6 * g)) & 0x3f) as u8 + BIAS);
        }
    };
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        push(out, n, 3);
    } else {
        out.extend([126, 126]);
        push(out, n, 6);
    }
}

fn body_len(n: usize) -> usize {
    let bits = n * n.saturating_sub(1) / 2;
    bits.div_ceil(6)
}

/// Parses one graph6 string. Vertices are labelled `0`, `1`, ... `n-1`.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(BIAS..=126).contains(b)) {
        return Err(err(format!(
            "invalid character {:?} at byte {pos}",
            char::from(bytes[pos])
        )));
    }
    let (n, used) = decode_order(bytes)?;
    let body = &bytes[used..];
    let expected = body_len(n);
    if body.len() < expected {
        return Err(err(format!(
            "truncated body: order {n} needs {expected} bytes, found {}",
            body.len()
        )));
    }
    if body.len() > expected {
        return Err(err(format!(
            "body length {} disagrees with order {n} (expected {expected} bytes)",
            body.len()
        )));
    }

    let labels: Vec<VertexLabel> = (0..n)
        .map(|i| VertexLabel::Original(i.to_string()))
        .collect();
    let mut b = GraphBuilder::new();
    for l in &labels {
        b.add_vertex(l.clone());
    }
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - BIAS;
            if byte & (0x20 >> (bit % 6)) != 0 {
                b.add_edge(labels[i].clone(), labels[j].clone())?;
            }
            bit += 1;
        }
    }
    Ok(b.build())
}

/// Encodes `g` with vertices taken in sorted label order.
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(err(format!("order {n} exceeds the graph6 limit")));
    }
    let mut out = Vec::with_capacity(8 + body_len(n));
    encode_order(n, &mut out);
    let adj = g.adjacency_lists();
    let mut acc = 0u8;
    let mut filled = 0;
    for (j, row) in adj.iter().enumerate().skip(1) {
        for i in 0..j {
            acc <<= 1;
            if row.binary_search(&i).is_ok() {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}
