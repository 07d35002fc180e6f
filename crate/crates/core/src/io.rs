//! Graph ingestion and output: graph6 strings and a plain adjacency text
//! format (`n m` header, then one `u v` pair per line, 0-indexed).

use crate::{Error, Graph, Result};

/// Parse one graph6 line (an optional `>>graph6<<` header is accepted).
pub fn from_graph6_line(line: &str) -> Result<Graph> {
    let s = line.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    if s.is_empty() {
        return Err(Error::Parse("empty graph6 line".into()));
    }
    if s.starts_with(':') || s.starts_with(';') {
        return Err(Error::Parse("sparse6 input is not supported".into()));
    }
    let bytes = s.as_bytes();
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse(format!("invalid graph6 byte {b:#x}")));
        }
    }
    let (n, mut pos) = decode_size(bytes)?;
    let bits_needed = n * n.saturating_sub(1) / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    if bytes.len() - pos != bytes_needed {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {bytes_needed} for n = {n}",
            bytes.len() - pos
        )));
    }
    let mut bits = Vec::with_capacity(bytes_needed * 6);
    for &b in &bytes[pos..] {
        let val = b - 63;
        for shift in (0..6).rev() {
            bits.push(val >> shift & 1 == 1);
        }
    }
    if bits[bits_needed..].iter().any(|&b| b) {
        return Err(Error::Parse("nonzero padding bits in graph6 body".into()));
    }
    let mut edges = Vec::new();
    pos = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[pos] {
                edges.push((u, v));
            }
            pos += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Error::Parse("truncated graph6 size".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        return Ok((n, 4));
    }
    if bytes.len() < 8 {
        return Err(Error::Parse("truncated graph6 size".into()));
    }
    let n = bytes[2..8]
        .iter()
        .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
    Ok((n, 8))
}

/// Encode a graph as one graph6 line (no trailing newline).
pub fn to_graph6_line(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        bytes.push(126);
        for shift in [12, 6, 0] {
            bytes.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut bits = Vec::with_capacity(n * (n - 1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let mut val = 0u8;
        for &b in chunk {
            val = val << 1 | u8::from(b);
        }
        bytes.push(val + 63);
    }
    String::from_utf8(bytes).unwrap()
}

/// Parse the adjacency text format: whitespace-separated tokens
/// `n m u1 v1 ... um vm`. Lines starting with `#` are comments.
pub fn from_adj_text(text: &str) -> Result<Graph> {
    let mut tokens = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.starts_with('#') {
            continue;
        }
        tokens.extend(line.split_whitespace());
    }
    let parse = |tok: &str| -> Result<usize> {
        tok.parse()
            .map_err(|_| Error::Parse(format!("expected a non-negative integer, got {tok:?}")))
    };
    if tokens.len() < 2 {
        return Err(Error::Parse("missing `n m` header".into()));
    }
    let n = parse(tokens[0])?;
    let m = parse(tokens[1])?;
    if tokens.len() != 2 + 2 * m {
        return Err(Error::Parse(format!(
            "expected {} endpoint tokens for m = {m}, found {}",
            2 * m,
            tokens.len() - 2
        )));
    }
    let mut edges = Vec::with_capacity(m);
    for pair in tokens[2..].chunks(2) {
        edges.push((parse(pair[0])?, parse(pair[1])?));
    }
    Graph::from_edges(n, &edges)
}

/// Write the adjacency text format.
pub fn to_adj_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, petersen};

    #[test]
    fn known_graph6_encodings() {
        // Standard examples: K_1 is "@", K_2 is "A_", K_4 is "C~".
        assert_eq!(to_graph6_line(&complete(1)), "@");
        assert_eq!(to_graph6_line(&complete(2)), "A_");
        assert_eq!(to_graph6_line(&complete(4)), "C~");
        assert_eq!(from_graph6_line("A_").unwrap(), complete(2));
    }

    #[test]
    fn graph6_round_trip() {
        for g in [complete(7), cycle(9), path(2), petersen()] {
            let line = to_graph6_line(&g);
            let back = from_graph6_line(&line).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn graph6_header_and_padding_checks() {
        assert!(from_graph6_line(">>graph6<<C~").is_ok());
        assert!(from_graph6_line(":Fa@x^").is_err());
        assert!(from_graph6_line("C").is_err());
        // n = 3 uses 3 of 6 bits; "Bh" sets a bit in the padding region.
        assert!(from_graph6_line("Bh").is_err());
        assert!(from_graph6_line("Bo").is_ok());
    }

    #[test]
    fn large_size_prefix_round_trips() {
        let g = Graph::from_edges(63, &[(0, 62)]).unwrap();
        let line = to_graph6_line(&g);
        assert_eq!(from_graph6_line(&line).unwrap(), g);
    }

    #[test]
    fn adj_round_trip() {
        let g = petersen();
        let text = to_adj_text(&g);
        assert_eq!(from_adj_text(&text).unwrap(), g);
    }

    #[test]
    fn adj_rejects_malformed_input() {
        assert!(from_adj_text("").is_err());
        assert!(from_adj_text("3 2\n0 1\n").is_err());
        assert!(from_adj_text("3 1\n0 0\n").is_err());
        assert!(from_adj_text("3 1\n0 3\n").is_err());
        assert!(from_adj_text("2 1\n0 1\nextra").is_err());
    }

    #[test]
    fn adj_accepts_comments() {
        let g = from_adj_text("# a triangle\n3 3\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }
}
