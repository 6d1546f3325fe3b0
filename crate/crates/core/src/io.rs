//! Graph file formats: graph6, a plain edge list, and DOT export.
//!
//! graph6 follows the standard header-less encoding: the order `N(n)` (one
//! byte for `n <= 62`, `~` plus three bytes up to 258047, `~~` plus six bytes
//! beyond), then the upper triangle of the adjacency matrix read column by
//! column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits per byte with
//! 63 added to each byte.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const MAX_BYTE: u8 = 126;

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64> {
    let b = *bytes
        .get(offset)
        .ok_or_else(|| parse_err(offset, "truncated input"))?;
    if !(BIAS..=MAX_BYTE).contains(&b) {
        return Err(parse_err(offset, format!("byte {b:#04x} outside graph6 range 63..=126")));
    }
    Ok(u64::from(b - BIAS))
}

/// Decodes `N(n)`; returns `(n, bytes consumed)`.
fn parse_order(bytes: &[u8]) -> Result<(usize, usize)> {
    if bytes.is_empty() {
        return Err(parse_err(0, "empty graph6 string"));
    }
    let (start, count) = match (bytes.first(), bytes.get(1)) {
        (Some(b'~'), Some(b'~')) => (2, 6),
        (Some(b'~'), _) => (1, 3),
        _ => (0, 1),
    };
    let mut n = 0u64;
    for i in start..start + count {
        n = (n << 6) | sextet(bytes, i)?;
    }
    if count == 3 && n <= 62 {
        return Err(parse_err(0, "non-canonical order header"));
    }
    if count == 6 && n <= 258_047 {
        return Err(parse_err(0, "non-canonical order header"));
    }
    Ok((n as usize, start + count))
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let text = text.trim_end_matches(['\n', '\r']);
    let bytes = text.as_bytes();
    let (n, header) = parse_order(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let body = &bytes[header..];
    if body.len() < need {
        return Err(parse_err(
            bytes.len(),
            format!("truncated bit vector: expected {need} data bytes, found {}", body.len()),
        ));
    }
    if body.len() > need {
        return Err(parse_err(header + need, "trailing bytes after bit vector"));
    }
    let mut edges = Vec::new();
    let (mut i, mut j) = (0usize, 1usize);
    for k in 0..bits {
        let byte = sextet(bytes, header + k / 6)?;
        if byte >> (5 - k % 6) & 1 == 1 {
            edges.push((i, j));
        }
        i += 1;
        if i == j {
            i = 0;
            j += 1;
        }
    }
    // Padding bits must be zero in a canonical encoding.
    if bits % 6 != 0 {
        let last = sextet(bytes, header + need - 1)?;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(parse_err(header + need - 1, "nonzero padding bits"));
        }
    }
    Graph::new(n, edges)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.extend_from_slice(b"~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses the edge-list format: a first line `n <count>` followed by one
/// `u v` pair per line. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match (n, fields.as_slice()) {
            (None, ["n", count]) => {
                n = Some(
                    count
                        .parse::<usize>()
                        .map_err(|_| parse_err(start, format!("bad vertex count {count:?}")))?,
                );
            }
            (None, _) => return Err(parse_err(start, "expected header line `n <count>`")),
            (Some(_), [u, v]) => {
                let p = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|_| parse_err(start, format!("bad vertex index {s:?}")))
                };
                edges.push((p(u)?, p(v)?));
            }
            (Some(_), _) => return Err(parse_err(start, "expected `u v`")),
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing header line `n <count>`"))?;
    Graph::new(n, edges).map_err(|e| parse_err(0, e.to_string()))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.order());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// DOT export. Vertices whose label starts with `v`, `s` or `c` (original,
/// subdivision, copy) get distinct fill colours.
pub fn write_dot(g: &Graph, name: &str) -> String {
    let mut s = format!("graph \"{}\" {{\n  node [style=filled];\n", name.replace('"', "'"));
    for v in 0..g.order() {
        match g.labels().map(|l| l[v].as_str()) {
            Some(label) => {
                let colour = match label.chars().next() {
                    Some('v') => "lightblue",
                    Some('s') => "gold",
                    Some('c') => "palegreen",
                    _ => "white",
                };
                let _ = writeln!(s, "  {v} [label=\"{label}\", fillcolor={colour}];");
            }
            None => {
                let _ = writeln!(s, "  {v} [fillcolor=white];");
            }
        }
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn k2_reference_encoding() {
        // n = 2 -> 'A' (63 + 2); single bit x(0,1) = 1 -> 100000b = 32 -> '_'.
        assert_eq!(parse_graph6("A_").unwrap(), named::complete(2));
        assert_eq!(write_graph6(&named::complete(2)), "A_");
    }

    #[test]
    fn known_strings() {
        // P3 edges 0-1, 1-2: bits x01 x02 x12 = 1 0 1 -> 101000b = 40 -> 'g'.
        assert_eq!(write_graph6(&named::path(3)), "Bg");
        assert_eq!(write_graph6(&named::complete(4)), "C~");
        assert_eq!(write_graph6(&Graph::empty(0)), "?");
        assert_eq!(write_graph6(&named::petersen()).len(), 1 + 45usize.div_ceil(6));
    }

    #[test]
    fn round_trip_corpus() {
        for s in ["A_", "Bg", "C~", "DQc", "Dhc", "I?h]@eOWG", "?", "@"] {
            let g = parse_graph6(s).unwrap();
            assert_eq!(write_graph6(&g), s);
        }
    }

    #[test]
    fn extended_order() {
        let g = named::path(70);
        let s = write_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match parse_graph6("garbage") {
            Err(Error::Parse { .. }) => {}
            other => panic!("expected parse error, got {other:?}"),
        }
        // Truncated: K4 needs one data byte.
        assert!(matches!(parse_graph6("C"), Err(Error::Parse { offset: 1, .. })));
        // Out-of-range byte in the body.
        assert!(matches!(parse_graph6("C "), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph6(""), Err(Error::Parse { offset: 0, .. })));
        // Nonzero padding: K2 with the low bits set.
        assert!(matches!(parse_graph6("A`"), Err(Error::Parse { offset: 1, .. })));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = named::petersen();
        let text = write_edge_list(&g);
        assert!(text.starts_with("n 10\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert!(parse_edge_list("0 1\n").is_err());
        assert!(parse_edge_list("n 2\n0 5\n").is_err());
        assert_eq!(parse_edge_list("# c\nn 3\n\n0 1 # e\n").unwrap().size(), 1);
    }

    #[test]
    fn dot_mentions_every_edge() {
        let dot = write_dot(&named::cycle(4), "c4");
        assert_eq!(dot.matches(" -- ").count(), 4);
    }
}
