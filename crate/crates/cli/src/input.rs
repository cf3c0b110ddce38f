use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use jumpgraph::format::{from_edge_list, parse_graph};
use jumpgraph::{from_graph6, Graph, TextFormat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Auto,
    Graph6,
    Edges,
}

impl InputFormat {
    fn text_format(self) -> Option<TextFormat> {
        match self {
            InputFormat::Auto => None,
            InputFormat::Graph6 => Some(TextFormat::Graph6),
            InputFormat::Edges => Some(TextFormat::EdgeList),
        }
    }
}

/// `edges:0-1,1-2` or `edges:5:0-1,1-2` (explicit vertex count).
fn inline_edges(spec: &str) -> Result<Graph> {
    let (n, list) = match spec.split_once(':') {
        Some((n, rest)) => (Some(n.trim().parse::<usize>().with_context(|| format!("bad vertex count {n:?}"))?), rest),
        None => (None, spec),
    };
    let mut pairs = Vec::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let Some((u, v)) = item.split_once('-') else { bail!("bad edge {item:?}, expected u-v") };
        let u: usize = u.trim().parse().with_context(|| format!("bad endpoint in {item:?}"))?;
        let v: usize = v.trim().parse().with_context(|| format!("bad endpoint in {item:?}"))?;
        pairs.push((u, v));
    }
    let n = n.unwrap_or_else(|| pairs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    let mut text = format!("n {n}\n");
    for (u, v) in pairs {
        text.push_str(&format!("{u} {v}\n"));
    }
    Ok(from_edge_list(&text)?)
}

/// Reads one graph from `g6:<string>`, `edges:<list>`, `-` (standard input) or a file path.
pub fn read_graph(spec: &str, format: InputFormat) -> Result<Graph> {
    if let Some(s) = spec.strip_prefix("g6:") {
        return from_graph6(s.trim()).with_context(|| format!("cannot decode graph6 {s:?}"));
    }
    if let Some(s) = spec.strip_prefix("edges:") {
        return inline_edges(s).context("cannot parse inline edge list");
    }
    let text = if spec == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("cannot read standard input")?;
        s
    } else {
        std::fs::read_to_string(Path::new(spec)).with_context(|| format!("cannot read {spec}"))?
    };
    parse_graph(&text, format.text_format()).with_context(|| format!("cannot parse {spec}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_forms() {
        let g = read_graph("edges:0-1,1-2", InputFormat::Auto).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 2));
        let g = read_graph("edges:5:0-1", InputFormat::Auto).unwrap();
        assert_eq!(g.vertex_count(), 5);
        let g = read_graph("g6:Dhc", InputFormat::Auto).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert!(read_graph("edges:0-0", InputFormat::Auto).is_err());
        assert!(read_graph("edges:0_1", InputFormat::Auto).is_err());
    }
}
