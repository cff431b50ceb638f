//! Text formats: graph6 (canonical), DIMACS edge format, plain edge lists,
//! weight sidecars and a small JSON schema for weighted graphs.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line. Surrounding whitespace and the optional
/// `>>graph6<<` header are accepted; error offsets index into `text`.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(GRAPH6_HEADER) {
        body = rest;
        base += GRAPH6_HEADER.len();
    }
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(base, "empty graph6 string"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(base + i, format!("byte {b:#04x} outside 63..=126")));
        }
    }

    let (n, header_len) = decode_size(bytes, base)?;
    if n == 0 {
        return Err(Error::parse(base, "graph6 encodes an empty vertex set"));
    }
    let bit_count = (n as u128) * (n as u128 - 1) / 2;
    let expected = bit_count.div_ceil(6);
    let data = &bytes[header_len..];
    if (data.len() as u128) < expected {
        return Err(Error::parse(
            base + bytes.len(),
            format!("truncated adjacency data: expected {expected} bytes, found {}", data.len()),
        ));
    }
    if (data.len() as u128) > expected {
        return Err(Error::parse(
            base + header_len + expected as usize,
            "trailing bytes after adjacency data",
        ));
    }
    let n = n as usize;
    let bit_count = bit_count as usize;
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if let Some(k) = (bit_count..data.len() * 6).find(|&k| bit(k)) {
        return Err(Error::parse(base + header_len + k / 6, "nonzero padding bits"));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

fn decode_size(bytes: &[u8], base: usize) -> Result<(u64, usize)> {
    let take = |start: usize, count: usize| -> Result<u64> {
        let chunk = bytes.get(start..start + count).ok_or_else(|| {
            Error::parse(base + bytes.len(), "truncated vertex-count header")
        })?;
        Ok(chunk.iter().fold(0u64, |acc, &b| acc << 6 | u64::from(b - 63)))
    };
    if bytes[0] != 126 {
        Ok((u64::from(bytes[0] - 63), 1))
    } else if bytes.get(1) == Some(&126) {
        let n = take(2, 6)?;
        if n <= 258_047 {
            return Err(Error::parse(base, "non-minimal 8-byte vertex count"));
        }
        Ok((n, 8))
    } else {
        let n = take(1, 3)?;
        if n <= 62 {
            return Err(Error::parse(base, "non-minimal 4-byte vertex count"));
        }
        Ok((n, 4))
    }
}

/// Encodes `g` as a graph6 string (no header, no newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Non-empty, non-comment lines with their byte offsets.
fn content_lines(text: &str, comment: impl Fn(&str) -> bool) -> Vec<(usize, &str)> {
    let mut offset = 0;
    let mut out = Vec::new();
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim();
        if !trimmed.is_empty() && !comment(trimmed) {
            out.push((offset + line.len() - line.trim_start().len(), trimmed));
        }
        offset += line.len();
    }
    out
}

/// Whitespace tokens of a line together with their byte offsets.
fn line_tokens(offset: usize, line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace().map(move |tok| {
        let rel = tok.as_ptr() as usize - line.as_ptr() as usize;
        (offset + rel, tok)
    })
}

fn parse_number(offset: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(offset, format!("expected a nonnegative integer, found {tok:?}")))
}

fn add_checked_edge(n: usize, offset: usize, u: usize, v: usize, edges: &mut Vec<(usize, usize)>) -> Result<()> {
    if u == v {
        return Err(Error::parse(offset, format!("self-loop at vertex {u}")));
    }
    if u >= n || v >= n {
        return Err(Error::parse(offset, format!("vertex id out of range for n = {n}")));
    }
    edges.push((u, v));
    Ok(())
}

/// Plain edge list: a leading vertex-count line followed by whitespace
/// separated `u v` pairs of 0-based ids. `#` starts a comment line.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let lines = content_lines(text, |l| l.starts_with('#'));
    let mut tokens = lines.iter().flat_map(|&(off, line)| line_tokens(off, line));
    let (off, tok) = tokens
        .next()
        .ok_or_else(|| Error::parse(0, "missing vertex-count header"))?;
    let n = parse_number(off, tok)?;
    if n == 0 {
        return Err(Error::parse(off, "vertex count must be positive"));
    }
    let mut edges = Vec::new();
    while let Some((off_u, tu)) = tokens.next() {
        let u = parse_number(off_u, tu)?;
        let (off_v, tv) = tokens
            .next()
            .ok_or_else(|| Error::parse(text.len(), "dangling vertex id without a partner"))?;
        let v = parse_number(off_v, tv)?;
        add_checked_edge(n, off_u, u, v, &mut edges)?;
    }
    Graph::from_edges(n, edges)
}

/// DIMACS edge format: `c` comments, one `p edge n m` header and 1-based
/// `e u v` lines. Vertex `k` of the file becomes vertex `k - 1`.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (off, line) in content_lines(text, |l| l.starts_with('c')) {
        let toks: Vec<(usize, &str)> = line_tokens(off, line).collect();
        match toks[0].1 {
            "p" => {
                if n.is_some() {
                    return Err(Error::parse(off, "duplicate problem line"));
                }
                if toks.len() != 4 || !matches!(toks[1].1, "edge" | "col") {
                    return Err(Error::parse(off, "expected `p edge <n> <m>`"));
                }
                let count = parse_number(toks[2].0, toks[2].1)?;
                if count == 0 {
                    return Err(Error::parse(toks[2].0, "vertex count must be positive"));
                }
                parse_number(toks[3].0, toks[3].1)?;
                n = Some(count);
            }
            "e" => {
                let n = n.ok_or_else(|| Error::parse(off, "edge line before `p edge` header"))?;
                if toks.len() != 3 {
                    return Err(Error::parse(off, "expected `e <u> <v>`"));
                }
                let u = parse_number(toks[1].0, toks[1].1)?;
                let v = parse_number(toks[2].0, toks[2].1)?;
                if u == 0 || v == 0 {
                    return Err(Error::parse(off, "DIMACS vertex ids are 1-based"));
                }
                add_checked_edge(n, off, u - 1, v - 1, &mut edges)?;
            }
            other => {
                return Err(Error::parse(off, format!("unknown line type {other:?}")));
            }
        }
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing `p edge` header"))?;
    Graph::from_edges(n, edges)
}

/// Weight sidecar: one `v w` line per vertex (0-based ids), `#` comments.
/// Every vertex must be listed exactly once.
pub fn parse_weights(text: &str, n: usize) -> Result<Vec<u64>> {
    let mut weights: Vec<Option<u64>> = vec![None; n];
    for (off, line) in content_lines(text, |l| l.starts_with('#')) {
        let toks: Vec<(usize, &str)> = line_tokens(off, line).collect();
        if toks.len() != 2 {
            return Err(Error::parse(off, "expected `<vertex> <weight>`"));
        }
        let v = parse_number(toks[0].0, toks[0].1)?;
        let w: u64 = toks[1]
            .1
            .parse()
            .map_err(|_| Error::parse(toks[1].0, "weight must be a nonnegative integer"))?;
        let slot = weights
            .get_mut(v)
            .ok_or_else(|| Error::parse(off, format!("vertex {v} out of range for n = {n}")))?;
        if slot.replace(w).is_some() {
            return Err(Error::parse(off, format!("vertex {v} listed twice")));
        }
    }
    weights
        .into_iter()
        .enumerate()
        .map(|(v, w)| w.ok_or_else(|| Error::InvalidWeights(format!("no weight for vertex {v}"))))
        .collect()
}

/// `{"n": …, "edges": [[u, v], …], "weights": […]}` with optional weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedGraphJson {
    pub n: usize,
    #[serde(default)]
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u64>>,
}

pub fn parse_weighted_json(text: &str) -> Result<(Graph, Option<Vec<u64>>)> {
    let doc: WeightedGraphJson = serde_json::from_str(text).map_err(|e| {
        let offset = text
            .split_inclusive('\n')
            .take(e.line().saturating_sub(1))
            .map(str::len)
            .sum::<usize>()
            + e.column().saturating_sub(1);
        Error::parse(offset, e.to_string())
    })?;
    let g = Graph::from_edges(doc.n, doc.edges)?;
    if let Some(w) = &doc.weights {
        if w.len() != g.n() {
            return Err(Error::InvalidWeights(format!(
                "expected {} weights, got {}",
                g.n(),
                w.len()
            )));
        }
    }
    Ok((g, doc.weights))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_known_strings() {
        // 'D' = 5 vertices; "?{" = bits 000000 111100: the star centred at 4.
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(
            g.edge_list().iter().map(|e| e.endpoints()).collect::<Vec<_>>(),
            vec![(0, 4), (1, 4), (2, 4), (3, 4)]
        );
        assert_eq!(encode_graph6(&g), "D?{");

        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!((k3.n(), k3.m()), (3, 3));
        assert_eq!(encode_graph6(&Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap()), "Bw");

        // The 5-vertex example used by petgraph's graph6 tests.
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g), "DQc");
    }

    #[test]
    fn graph6_header_and_whitespace() {
        let g = parse_graph6(">>graph6<<D?{\n").unwrap();
        assert_eq!(g.m(), 4);
        assert_eq!(parse_graph6("  Bw  ").unwrap().m(), 3);
    }

    #[test]
    fn graph6_circulant_c13_1_5() {
        let n = 13;
        let g = Graph::from_edges(
            n,
            (0..n).flat_map(|i| [(i, (i + 1) % n), (i, (i + 5) % n)]),
        )
        .unwrap();
        assert_eq!(g.m(), 26);
        let text = encode_graph6(&g);
        assert_eq!(text.len(), 1 + 78 / 6);
        let back = parse_graph6(&text).unwrap();
        assert_eq!((back.n(), back.m()), (13, 26));
        assert_eq!(back, g);
    }

    #[test]
    fn graph6_large_header() {
        let n = 100;
        let g = Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap();
        let text = encode_graph6(&g);
        assert_eq!(&text.as_bytes()[..4], &[126, 63, 64, 63 + 36]);
        assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn graph6_errors_report_offsets() {
        assert!(matches!(parse_graph6(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse_graph6("?"), Err(Error::Parse { .. })));
        // 5 vertices need two data bytes.
        assert!(matches!(parse_graph6("D?"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_graph6("D?{?"), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(parse_graph6("D? "), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6("D?\x7f"), Err(Error::Parse { offset: 2, .. })));
        // K3 with a padding bit set: 111 + 001.
        assert!(matches!(parse_graph6("Bx"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph6("~?"), Err(Error::Parse { .. })));
    }

    #[test]
    fn edge_list_examples() {
        let p3 = parse_edge_list("3\n0 1\n1 2").unwrap();
        assert_eq!(p3, Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
        let iso = parse_edge_list("4\n").unwrap();
        assert_eq!((iso.n(), iso.m()), (4, 0));
        let dup = parse_edge_list("# comment\n3\n0 1 1 0\n").unwrap();
        assert_eq!(dup.m(), 1);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse_edge_list("3\n1 1"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_edge_list("3\n0 3"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_edge_list("3\n0 x"), Err(Error::Parse { offset: 4, .. })));
        assert!(matches!(parse_edge_list("3\n0"), Err(Error::Parse { .. })));
    }

    #[test]
    fn dimacs_fig2() {
        let text = "c fig 2\np edge 5 7\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 3 5\ne 2 5\ne 1 5\n";
        let g = parse_dimacs(text).unwrap();
        let expected = [(0, 1), (1, 2), (2, 3), (3, 4), (2, 4), (1, 4), (0, 4)];
        assert_eq!(g, Graph::from_edges(5, expected).unwrap());
    }

    #[test]
    fn dimacs_errors() {
        assert!(matches!(parse_dimacs("e 1 2\n"), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse_dimacs("c only\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_dimacs("p edge 3 1\ne 2 2\n"), Err(Error::Parse { offset: 11, .. })));
        assert!(matches!(parse_dimacs("p edge 3 1\ne 1 4\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_dimacs("p edge 3 1\ne 0 1\n"), Err(Error::Parse { .. })));
        let iso = parse_dimacs("p edge 4 0\n").unwrap();
        assert_eq!((iso.n(), iso.m()), (4, 0));
    }

    #[test]
    fn weights_sidecar() {
        assert_eq!(parse_weights("0 3\n# c\n2 7\n1 0\n", 3).unwrap(), vec![3, 0, 7]);
        assert!(parse_weights("0 3\n", 2).is_err());
        assert!(parse_weights("0 3\n0 4\n1 1\n", 2).is_err());
        assert!(parse_weights("0 -3\n1 1\n", 2).is_err());
        assert!(parse_weights("5 3\n", 2).is_err());
    }

    #[test]
    fn weighted_json() {
        let (g, w) = parse_weighted_json(r#"{"n":3,"edges":[[0,1],[1,2]],"weights":[1,2,3]}"#).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(w, Some(vec![1, 2, 3]));
        let (_, w) = parse_weighted_json(r#"{"n":2,"edges":[]}"#).unwrap();
        assert_eq!(w, None);
        assert!(parse_weighted_json(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
        assert!(parse_weighted_json(r#"{"n":2,"weights":[1]}"#).is_err());
        assert!(matches!(parse_weighted_json("{\"n\": }"), Err(Error::Parse { .. })));
    }
}
