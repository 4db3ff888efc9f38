//! graph6 encoding for graphs of order at most 62 (single-byte order field).
//!
//! Bits of the upper triangle are taken column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), packed six to a byte, most
//! significant bit first, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable with a one-byte order field.
pub const MAX_GRAPH6_ORDER: usize = 62;

pub const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 record. `record` is only used for error reporting.
pub fn decode(line: &str, record: usize) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\r', '\n']).as_bytes();
    let bad = |reason: String| Error::MalformedGraph6 { record, reason };
    let (&first, payload) = bytes
        .split_first()
        .ok_or_else(|| bad("empty record".into()))?;
    if !(63..=126).contains(&first) {
        return Err(bad(format!("byte {first} is outside the graph6 range")));
    }
    let n = (first - 63) as usize;
    if n > MAX_GRAPH6_ORDER {
        return Err(bad("orders above 62 are not supported".into()));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if payload.len() != need {
        return Err(bad(format!(
            "expected {need} payload bytes for order {n}, found {}",
            payload.len()
        )));
    }
    if let Some(&b) = payload.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(bad(format!("byte {b} is outside the graph6 range")));
    }
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph whose alive vertices are exactly `0..order`.
pub fn encode(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::PreconditionFailed(format!(
            "graph6 encoding supports order <= 62, got {n}"
        )));
    }
    let mut out = String::with_capacity(1 + (n * n).div_ceil(12));
    out.push((63 + n as u8) as char);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push((acc + 63) as char);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        acc <<= 6 - k % 6;
        out.push((acc + 63) as char);
    }
    Ok(out)
}
