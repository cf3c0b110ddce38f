//! Graphviz output.

use std::fmt::Write;

use sha2::{Digest, Sha256};

use crate::graph::Graph;
use crate::iso::CanonicalForm;
use crate::preimage::DissipationTree;

/// Stable DOT identifier for an isomorphism class.
pub fn node_id(c: &CanonicalForm) -> String {
    let digest = Sha256::digest(c.as_bytes());
    let mut s = String::from("n");
    for b in digest.iter().take(6) {
        write!(s, "{b:02x}").unwrap();
    }
    s
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn body(out: &mut String, g: &Graph, prefix: &str, indent: &str) {
    for v in 0..g.vertex_count() {
        writeln!(out, "{indent}{prefix}{v} [label=\"{v}\"];").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "{indent}{prefix}{u} -- {prefix}{v};").unwrap();
    }
}

pub fn graph_to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph \"{}\" {{\n  node [shape=circle];\n", escape(name));
    body(&mut out, g, "v", "  ");
    out.push_str("}\n");
    out
}

/// One panel per iterate, `iterates[k]` being the `k`-th jump graph.
pub fn trace_to_dot(iterates: &[Graph]) -> String {
    let mut out = String::from("graph trace {\n  node [shape=circle];\n");
    for (k, g) in iterates.iter().enumerate() {
        writeln!(out, "  subgraph cluster_{k} {{").unwrap();
        writeln!(out, "    label=\"J^{k}: {} vertices, {} edges\";", g.vertex_count(), g.edge_count()).unwrap();
        body(&mut out, g, &format!("k{k}_"), "    ");
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}

/// Nodes clustered by level, arrows pointing from each graph to its jump graph.
pub fn tree_to_dot(t: &DissipationTree) -> String {
    let mut out = String::from("digraph dissipation {\n  rankdir=BT;\n  node [shape=box, fontname=monospace];\n");
    for (level, idx) in t.levels() {
        writeln!(out, "  subgraph cluster_level_{level} {{").unwrap();
        writeln!(out, "    label=\"d = {level}\";").unwrap();
        for i in idx {
            let n = &t.nodes[i];
            let style = if n.beyond_bound { ", style=dashed" } else { "" };
            writeln!(
                out,
                "    {} [label=\"{}\\n{}v {}e\"{style}];",
                node_id(&n.canonical),
                escape(n.canonical.as_str()),
                n.graph.vertex_count(),
                n.graph.edge_count()
            )
            .unwrap();
        }
        out.push_str("  }\n");
    }
    for n in &t.nodes {
        if let Some(p) = n.parent {
            writeln!(out, "  {} -> {};", node_id(&n.canonical), node_id(&t.nodes[p].canonical)).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
