//! graph6 encoding (short form, `n <= 62`).
//!
//! The first byte is `n + 63`. The upper triangle of the adjacency matrix is
//! read column by column, `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed
//! big-endian into 6-bit groups (zero padded), each group offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ORDER: usize = 62;

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::TooLarge { n, max: MAX_ORDER });
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push(char::from(n as u8 + 63));
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(char::from(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from((group << (6 - filled)) + 63));
    }
    Ok(out)
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Parse("empty graph6 string".into()))?;
    if let Some(bad) = bytes.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::Parse(format!("illegal graph6 byte {bad:#04x}")));
    }
    if first == 126 {
        return Err(Error::Parse("long-form graph6 (n > 62) is not supported".into()));
    }
    let n = usize::from(first - 63);
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(Error::Parse(format!(
            "graph6 body for n={n} needs {} bytes, got {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}
