//! graph6 and edge-list text formats.
//!
//! Edge lists look like
//!
//! ```text
//! n 4
//! 0 1
//! 1 2
//! # comments and blank lines are ignored
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<FormatError>,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TextFormat {
    Graph6,
    EdgeList,
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = String::new();
    if n <= 62 {
        out.push((63 + n as u8) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((63 + ((n >> shift) & 63) as u8) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((63 + acc) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((63 + (acc << (6 - filled))) as char);
    }
    out
}

pub fn from_graph6(s: &str) -> Result<Graph, FormatError> {
    let s = s.trim();
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Graph6("empty string".into()));
    }
    if bytes[0] == b':' || bytes[0] == b';' {
        return Err(FormatError::Graph6("sparse6/digraph6 input is not supported".into()));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(FormatError::Graph6(format!("byte {pos} ({:?}) outside the printable range", bytes[pos] as char)));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        return Err(FormatError::Graph(GraphError::VertexLimit { requested: 258048, limit: MAX_VERTICES }));
    } else {
        if bytes.len() < 4 {
            return Err(FormatError::Graph6("truncated vertex-count header".into()));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(FormatError::Graph6(format!(
            "{} vertices need {expected} data bytes, found {}",
            n,
            body.len()
        )));
    }
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[expected - 1] - 63;
        if last & ((1u8 << (6 - nbits % 6)) - 1) != 0 {
            return Err(FormatError::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

pub fn from_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = content_lines(text);
    let bad = |line, reason: &str| FormatError::EdgeList { line, reason: reason.to_string() };
    let (hline, header) = lines.next().ok_or_else(|| bad(1, "missing `n <count>` header"))?;
    let mut it = header.split_whitespace();
    if it.next() != Some("n") {
        return Err(bad(hline, "expected header `n <count>`"));
    }
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| bad(hline, "vertex count is not a non-negative integer"))?;
    if it.next().is_some() {
        return Err(bad(hline, "trailing tokens after vertex count"));
    }
    let mut g = Graph::new(n)?;
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(bad(line, "expected `u v`"));
        }
        let u: usize = toks[0].parse().map_err(|_| bad(line, "endpoint is not an integer"))?;
        let v: usize = toks[1].parse().map_err(|_| bad(line, "endpoint is not an integer"))?;
        g.add_edge(u, v).map_err(|e| bad(line, &e.to_string()))?;
    }
    Ok(g)
}

/// Edge lists start with an `n <count>` line; anything else is taken as graph6.
pub fn detect_format(text: &str) -> TextFormat {
    match content_lines(text).next() {
        Some((_, l)) if l.split_whitespace().next() == Some("n") => TextFormat::EdgeList,
        _ => TextFormat::Graph6,
    }
}

/// Parses one graph, auto-detecting the format unless `format` is given.
pub fn parse_graph(text: &str, format: Option<TextFormat>) -> Result<Graph, FormatError> {
    match format.unwrap_or_else(|| detect_format(text)) {
        TextFormat::EdgeList => from_edge_list(text),
        TextFormat::Graph6 => {
            let mut lines = content_lines(text);
            let (_, first) = lines.next().ok_or_else(|| FormatError::Graph6("no graph found".into()))?;
            if let Some((line, _)) = lines.next() {
                return Err(FormatError::Graph6(format!("expected a single graph, found another on line {line}")));
            }
            from_graph6(first)
        }
    }
}

/// Decodes every non-blank line of a graph6 file.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, FormatError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            from_graph6(l).map_err(|e| FormatError::AtLine { line: i + 1, source: Box::new(e) })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        assert_eq!(to_graph6(&Graph::empty()), "?");
        assert_eq!(to_graph6(&Graph::new(1).unwrap()), "@");
        assert_eq!(to_graph6(&Graph::from_edges(2, &[(0, 1)]).unwrap()), "A_");
        // 5-cycle 0-1-2-3-4, the standard example "Dhc"
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(to_graph6(&c5), "Dhc");
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(to_graph6(&k4), "C~");
    }

    #[test]
    fn decode_known() {
        let g = from_graph6("Dhc").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(from_graph6(">>graph6<<A_").unwrap().edge_count(), 1);
    }

    #[test]
    fn long_header_form() {
        let mut g = Graph::new(64).unwrap();
        for v in 0..63 {
            g.add_edge(v, v + 1).unwrap();
        }
        let s = to_graph6(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(from_graph6(&s).unwrap(), g);
        let g63 = Graph::new(63).unwrap();
        assert!(to_graph6(&g63).starts_with("~??~"));
        assert_eq!(from_graph6(&to_graph6(&g63)).unwrap(), g63);
    }

    #[test]
    fn rejects_malformed() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("D h").is_err());
        assert!(from_graph6("Dh").is_err());
        assert!(from_graph6("Dhcc").is_err());
        // padding bit set: n=2 has one data bit
        assert!(from_graph6("A`").is_err());
        assert!(from_graph6(":Fa@x^").is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(5, &[(0, 3), (1, 2), (2, 4)]).unwrap();
        let text = to_edge_list(&g);
        assert_eq!(text, "n 5\n0 3\n1 2\n2 4\n");
        assert_eq!(from_edge_list(&text).unwrap(), g);
        assert_eq!(parse_graph(&text, None).unwrap(), g);
    }

    #[test]
    fn edge_list_errors_name_lines() {
        let err = from_edge_list("n 3\n0 1\n# note\n1 7\n").unwrap_err();
        assert!(matches!(err, FormatError::EdgeList { line: 4, .. }), "{err}");
        assert!(from_edge_list("0 1\n").is_err());
        assert!(from_edge_list("n 3\n0 1 2\n").is_err());
        assert!(from_edge_list("n 3\n1 1\n").is_err());
    }

    #[test]
    fn detection() {
        assert_eq!(detect_format("# c\nn 3\n"), TextFormat::EdgeList);
        assert_eq!(detect_format("Dhc\n"), TextFormat::Graph6);
        assert!(parse_graph("Dhc\nDhc\n", None).is_err());
    }

    #[test]
    fn multi_line_reports_line() {
        let err = parse_graph6_lines("Dhc\n\nD h\n").unwrap_err();
        assert!(matches!(err, FormatError::AtLine { line: 3, .. }));
        assert_eq!(parse_graph6_lines("").unwrap().len(), 0);
    }
}
