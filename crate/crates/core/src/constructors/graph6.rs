//! McKay's graph6 encoding for simple graphs.
//!
//! `N(n)` is one byte `n + 63` for `n <= 62`, or `126` followed by three
//! 6-bit groups for `n <= 258047`. The upper triangle follows column by
//! column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), six bits per byte plus 63,
//! zero-padded at the end.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const MAX_ORDER: usize = 258_047;

fn bad(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    if text.starts_with(':') || text.starts_with(';') {
        return Err(bad("sparse6/digraph6 input is not supported"));
    }
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(format!("byte {b:#04x} outside the printable graph6 range")));
    }
    let (n, body) = match bytes {
        [] => return Err(bad("empty input")),
        [126, 126, ..] => return Err(bad("orders above 258047 are not supported")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated order field"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
            (n, &rest[3..])
        }
        [first, rest @ ..] => (usize::from(first - 63), rest),
    };
    if n == 0 {
        return Err(bad("graph of order 0"));
    }
    let bits = n * (n - 1) / 2;
    let needed = bits.div_ceil(6);
    if body.len() != needed {
        return Err(bad(format!("order {n} needs {needed} data bytes, found {}", body.len())));
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
    let pad = needed * 6 - bits;
    if pad > 0 && (body[needed - 1] - 63) & ((1 << pad) - 1) != 0 {
        return Err(bad("nonzero padding bits"));
    }
    Graph::from_edges(n, edges)
}

/// Parses one graph per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines().map(str::trim).filter(|l| !l.is_empty()).map(parse_graph6).collect()
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n == 0 {
        return Err(bad("graph of order 0"));
    }
    if n > MAX_ORDER {
        return Err(bad(format!("order {n} exceeds {MAX_ORDER}")));
    }
    if g.has_loops() {
        return Err(Error::LoopNotAllowed("graph6 cannot encode loops".into()));
    }
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{complete_graph, petersen_graph, star_graph, total_graph};

    #[test]
    fn known_strings() {
        assert_eq!(emit_graph6(&complete_graph(5).unwrap()).unwrap(), "D~{");
        // "D?{": bits 000000 111100 -> vertex 4 joined to 0..4
        let star = parse_graph6("D?{").unwrap();
        let expected = star_graph(4).unwrap().relabel(&[4, 0, 1, 2, 3]).unwrap();
        assert_eq!(star, expected);
        assert_eq!(emit_graph6(&star).unwrap(), "D?{");
        assert_eq!(emit_graph6(&petersen_graph()).unwrap().len(), 1 + 45usize.div_ceil(6));
        assert_eq!(parse_graph6("@").unwrap().order(), 1);
        assert_eq!(parse_graph6(">>graph6<<A_").unwrap().size(), 1);
    }

    #[test]
    fn round_trip() {
        let k5 = complete_graph(5).unwrap();
        assert_eq!(parse_graph6(&emit_graph6(&k5).unwrap()).unwrap(), k5);
        let big = complete_graph(70).unwrap();
        let s = emit_graph6(&big).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), big);
    }

    #[test]
    fn errors() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("?").is_err());
        assert!(parse_graph6("D~").is_err());
        assert!(parse_graph6("D~{?").is_err());
        assert!(parse_graph6("A`").is_err(), "padding bit set");
        assert!(parse_graph6(":Fa@x^").is_err());
        assert!(parse_graph6("D~\u{7f}").is_err());
        assert!(matches!(emit_graph6(&total_graph(3).unwrap()), Err(Error::LoopNotAllowed(_))));
        assert!(emit_graph6(&Graph::empty(0)).is_err());
    }
}
