use super::Graph;
use crate::error::GraphError;
use std::path::Path;

fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
}

pub(super) fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_n(n, &mut out);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(63 + acc);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(63 + (acc << (6 - k)));
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

fn six(bytes: &[u8], i: usize) -> Result<usize, GraphError> {
    let b = *bytes.get(i).ok_or_else(|| GraphError::Graph6("truncated header".into()))?;
    if !(63..=126).contains(&b) {
        return Err(GraphError::Graph6(format!("byte {b} outside 63..=126")));
    }
    Ok((b - 63) as usize)
}

pub(super) fn decode(s: &str) -> Result<Graph, GraphError> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Graph6("empty string".into()));
    }
    let (n, mut pos) = if bytes[0] != 126 {
        (six(bytes, 0)?, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0;
        for i in 1..4 {
            n = n << 6 | six(bytes, i)?;
        }
        (n, 4)
    } else {
        let mut n = 0;
        for i in 2..8 {
            n = n << 6 | six(bytes, i)?;
        }
        (n, 8)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if bytes.len() - pos != need {
        return Err(GraphError::Graph6(format!(
            "expected {need} data bytes for {n} vertices, found {}",
            bytes.len() - pos
        )));
    }
    let mut g = Graph::new(n);
    let mut bit = 0;
    let mut cur = 0;
    for j in 1..n {
        for i in 0..j {
            if bit % 6 == 0 {
                cur = six(bytes, pos)?;
                pos += 1;
            }
            if cur >> (5 - bit % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Parses one graph per non-empty line.
pub fn read_graph6_str(text: &str) -> Result<Vec<Graph>, GraphError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .enumerate()
        .map(|(i, l)| decode(l).map_err(|e| GraphError::Graph6(format!("line {}: {e}", i + 1))))
        .collect()
}

pub fn read_graph6_file(path: impl AsRef<Path>) -> Result<Vec<Graph>, GraphError> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| GraphError::Graph6(format!("{}: {e}", path.as_ref().display())))?;
    read_graph6_str(&text)
}
