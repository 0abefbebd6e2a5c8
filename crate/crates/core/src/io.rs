//! Text formats: graph6 (short form) and a plain edge list.

use crate::graph::{Graph, GraphError, MAX_VERTICES};

const BIAS: u8 = 63;

fn g6_error(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 { offset, reason: reason.into() }
}

/// Parses one short-form graph6 record. A single trailing line terminator
/// is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let record = text.strip_suffix('\n').unwrap_or(text);
    let record = record.strip_suffix('\r').unwrap_or(record);
    let bytes = record.as_bytes();
    let Some(&header) = bytes.first() else {
        return Err(g6_error(0, "empty record"));
    };
    if !(BIAS..=126).contains(&header) {
        return Err(g6_error(0, format!("invalid header byte 0x{header:02x}")));
    }
    let n = (header - BIAS) as usize;
    if n > MAX_VERTICES {
        return Err(g6_error(0, "long-form graph6 (n > 62) is not supported"));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < nbytes {
        return Err(g6_error(bytes.len(), format!("truncated: expected {nbytes} data bytes, found {}", body.len())));
    }
    if body.len() > nbytes {
        return Err(g6_error(1 + nbytes, "trailing bytes after record"));
    }

    let mut adj = vec![0u64; n];
    let mut bit = 0usize;
    for (i, &b) in body.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(g6_error(1 + i, format!("invalid data byte 0x{b:02x}")));
        }
        let word = b - BIAS;
        for shift in (0..6).rev() {
            let set = word >> shift & 1 == 1;
            if bit >= nbits {
                if set {
                    return Err(g6_error(1 + i, "nonzero padding bit"));
                }
            } else if set {
                let (u, v) = pair_of_index(bit);
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            bit += 1;
        }
    }
    Graph::from_adjacency(adj)
}

/// Short-form graph6 for the graph under its current labeling.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    debug_assert!(n <= MAX_VERTICES);
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = String::with_capacity(1 + nbits.div_ceil(6));
    out.push((n as u8 + BIAS) as char);
    let mut word = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            word = word << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((word + BIAS) as char);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((word << (6 - filled)) + BIAS) as char);
    }
    out
}

/// Checked variant of [`to_graph6`] for callers holding a raw order.
pub fn try_to_graph6(g: &Graph) -> Result<String, GraphError> {
    if g.n() > MAX_VERTICES {
        return Err(GraphError::UnsupportedSize { n: g.n() });
    }
    Ok(to_graph6(g))
}

/// Position of bit `index` in graph6 order x(0,1), x(0,2), x(1,2), x(0,3), …
pub fn pair_of_index(index: usize) -> (usize, usize) {
    // v is the largest integer with v(v-1)/2 <= index.
    let mut v = ((((8 * index + 1) as f64).sqrt() + 1.0) / 2.0) as usize;
    while v * (v - 1) / 2 > index {
        v -= 1;
    }
    while (v + 1) * v / 2 <= index {
        v += 1;
    }
    (index - v * (v - 1) / 2, v)
}

/// Parses the edge-list format: first non-blank line holds `n`, each
/// further non-blank line holds `u v`. Repeated edges are accepted.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let err = |line: usize, reason: String| GraphError::EdgeList { line, reason };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (first, header) = lines.next().ok_or_else(|| err(1, "missing vertex count".into()))?;
    let n: usize = header.parse().map_err(|_| err(first, format!("invalid vertex count {header:?}")))?;
    if n > MAX_VERTICES {
        return Err(GraphError::UnsupportedSize { n });
    }
    let mut edges = Vec::new();
    for (line, body) in lines {
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(err(line, format!("expected two vertices, found {}", tokens.len())));
        }
        let mut ends = [0usize; 2];
        for (slot, tok) in ends.iter_mut().zip(&tokens) {
            *slot = tok.parse().map_err(|_| err(line, format!("non-integer token {tok:?}")))?;
            if *slot >= n {
                return Err(err(line, format!("vertex {slot} out of range 0..{n}")));
            }
        }
        if ends[0] == ends[1] {
            return Err(err(line, format!("self-loop at vertex {}", ends[0])));
        }
        edges.push((ends[0], ends[1]));
    }
    Graph::from_edges(n, edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
