//! Snipped subgraphs: quotients of subgraphs.
//!
//! `H` is snipped in `G` when some edges of `G`, after gluing vertices together, form `H`.
//! A witness picks one `G`-edge per `H`-edge and labels their endpoints with `H`-vertices;
//! the glued blocks are the label fibres.

use std::fmt;

use crate::families;
use crate::graph::{Edge, EdgeId, Graph};
use crate::iso::find_subgraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnippedWitness {
    /// `edge_map[i]` is the `G`-edge chosen for `H`'s edge `EdgeId(i)`.
    pub edge_map: Vec<EdgeId>,
    /// `(g_vertex, h_vertex)` pairs sorted by `g_vertex`.
    pub labels: Vec<(usize, usize)>,
}

impl fmt::Display for SnippedWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edge_map.iter().map(|e| e.0.to_string()).collect();
        let labels: Vec<String> = self.labels.iter().map(|(g, h)| format!("{g}->{h}")).collect();
        write!(f, "edges {}; labels {}", edges.join(" "), labels.join(" "))
    }
}

/// Checks every witness invariant directly against `h` and `g`.
pub fn verify_snipped(w: &SnippedWitness, h: &Graph, g: &Graph) -> bool {
    let h_edges = h.edges();
    let g_edges = g.edges();
    if w.edge_map.len() != h_edges.len() {
        return false;
    }
    let mut used = vec![false; g_edges.len()];
    for e in &w.edge_map {
        if e.0 >= g_edges.len() || used[e.0] {
            return false;
        }
        used[e.0] = true;
    }
    let mut label = vec![None; g.vertex_count()];
    for &(gv, hv) in &w.labels {
        if gv >= g.vertex_count() || hv >= h.vertex_count() || label[gv].is_some() {
            return false;
        }
        label[gv] = Some(hv);
    }
    let mut endpoint = vec![false; g.vertex_count()];
    for (&(a, b), e) in h_edges.iter().zip(&w.edge_map) {
        let (u, v) = g_edges[e.0];
        endpoint[u] = true;
        endpoint[v] = true;
        let ok = matches!((label[u], label[v]), (Some(x), Some(y)) if (x, y) == (a, b) || (x, y) == (b, a));
        if !ok {
            return false;
        }
    }
    w.labels.iter().all(|&(gv, _)| endpoint[gv])
}

/// Processing order for `H`'s edges: each edge touches an earlier one when possible.
fn edge_order(edges: &[Edge]) -> Vec<usize> {
    let mut done = vec![false; edges.len()];
    let mut touched = 0u64;
    let mut order = Vec::with_capacity(edges.len());
    for _ in 0..edges.len() {
        let next = (0..edges.len())
            .filter(|&i| !done[i])
            .find(|&i| touched & (1 << edges[i].0 | 1 << edges[i].1) != 0)
            .or_else(|| (0..edges.len()).find(|&i| !done[i]))
            .expect("an edge remains");
        done[next] = true;
        touched |= 1 << edges[next].0 | 1 << edges[next].1;
        order.push(next);
    }
    order
}

struct SnipSearch<'a> {
    g: &'a Graph,
    h_edges: &'a [Edge],
    g_edges: &'a [Edge],
    order: Vec<usize>,
    label: Vec<Option<usize>>,
    refs: Vec<u32>,
    /// `fibre[a]`: G-vertices labelled `a`.
    fibre: Vec<u64>,
}

// A G-edge labelled {a, b} can only serve the H-edge ab, so chosen edges are
// automatically distinct and the search is over labellings alone.
impl SnipSearch<'_> {
    fn fits(&self, x: usize, want: usize) -> bool {
        self.label[x].is_none_or(|l| l == want)
    }

    fn tag(&mut self, x: usize, l: usize) {
        self.label[x] = Some(l);
        self.fibre[l] |= 1 << x;
        self.refs[x] += 1;
    }

    fn untag(&mut self, x: usize) {
        self.refs[x] -= 1;
        if self.refs[x] == 0 {
            let l = self.label[x].take().expect("tagged vertex");
            self.fibre[l] &= !(1 << x);
        }
    }

    /// Some G-edge already joins the fibres of `a` and `b`.
    fn joined(&self, a: usize, b: usize) -> Option<(usize, usize)> {
        crate::graph::bits(self.fibre[a]).find_map(|u| {
            let hit = self.g.row(u) & self.fibre[b];
            (hit != 0).then(|| (u, hit.trailing_zeros() as usize))
        })
    }

    fn extend(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let (a, b) = self.h_edges[self.order[pos]];
        if self.joined(a, b).is_some() {
            return self.extend(pos + 1);
        }
        for gi in 0..self.g_edges.len() {
            let (u, v) = self.g_edges[gi];
            for (x, y) in [(u, v), (v, u)] {
                if !self.fits(x, a) || !self.fits(y, b) {
                    continue;
                }
                self.tag(x, a);
                self.tag(y, b);
                if self.extend(pos + 1) {
                    return true;
                }
                self.untag(x);
                self.untag(y);
            }
        }
        false
    }
}

/// Decides whether `h` is a snipped subgraph of `g`, returning the first witness found.
///
/// `h` should have no isolated vertices: they cannot be certified by an edge choice.
pub fn find_snipped(h: &Graph, g: &Graph) -> Option<SnippedWitness> {
    let h_edges = h.edges();
    let g_edges = g.edges();
    if h_edges.len() > g_edges.len() || h.has_isolated() {
        return None;
    }
    if h.vertex_count() <= g.vertex_count() {
        if let Some(w) = find_subgraph(h, g, false) {
            let map = w.vertex_map;
            let edge_map = h_edges.iter().map(|&(a, b)| g.edge_id(map[a], map[b]).expect("embedded edge")).collect();
            let mut labels: Vec<(usize, usize)> = map.iter().enumerate().map(|(hv, &gv)| (gv, hv)).collect();
            labels.sort_unstable();
            return Some(SnippedWitness { edge_map, labels });
        }
    }
    let mut s = SnipSearch {
        g,
        h_edges: &h_edges,
        g_edges: &g_edges,
        order: edge_order(&h_edges),
        label: vec![None; g.vertex_count()],
        refs: vec![0; g.vertex_count()],
        fibre: vec![0; h.vertex_count()],
    };
    if !s.extend(0) {
        return None;
    }
    let mut endpoint = 0u64;
    let edge_map = h_edges
        .iter()
        .map(|&(a, b)| {
            let (u, v) = s.joined(a, b).expect("every H-edge covered");
            endpoint |= 1 << u | 1 << v;
            g.edge_id(u, v).expect("joined by an edge")
        })
        .collect();
    let labels = s
        .label
        .iter()
        .enumerate()
        .filter(|&(gv, _)| endpoint & 1 << gv != 0)
        .filter_map(|(gv, l)| l.map(|hv| (gv, hv)))
        .collect();
    Some(SnippedWitness { edge_map, labels })
}

/// Glues vertices with equal `block[v]`; loops and duplicate edges are dropped.
///
/// Block ids must be `0..k` for some `k`; the quotient has `k` vertices.
pub fn quotient(g: &Graph, block: &[usize]) -> Graph {
    let k = block.iter().copied().max().map_or(0, |b| b + 1);
    let mut q = Graph::new(k).expect("quotient is no larger than the graph");
    for (u, v) in g.edges() {
        if block[u] != block[v] {
            q.add_edge(block[u], block[v]).expect("block ids in range");
        }
    }
    q
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedTag {
    C5,
    Net,
    K23,
    Bug,
    Stickman,
    Pendulum,
}

impl NamedTag {
    pub const ALL: [NamedTag; 6] =
        [NamedTag::C5, NamedTag::Net, NamedTag::K23, NamedTag::Bug, NamedTag::Stickman, NamedTag::Pendulum];

    pub fn name(self) -> &'static str {
        match self {
            NamedTag::C5 => "C5",
            NamedTag::Net => "N",
            NamedTag::K23 => "K23",
            NamedTag::Bug => "Bug",
            NamedTag::Stickman => "Stickman",
            NamedTag::Pendulum => "Pendulum",
        }
    }

    pub fn graph(self) -> Graph {
        match self {
            NamedTag::C5 => families::cycle(5),
            NamedTag::Net => families::net(),
            NamedTag::K23 => families::complete_bipartite(2, 3),
            // 4-cycle 0-1-2-3 with two pendants on 0
            NamedTag::Bug => Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (0, 5)]).unwrap(),
            // neck 1: head 0, arms 4 and 5, body 1-2; hip 2: legs 3 and 6
            NamedTag::Stickman => {
                Graph::from_edges(7, &[(0, 1), (1, 2), (1, 4), (1, 5), (2, 3), (2, 6)]).unwrap()
            }
            // triangle 0-1-4, rod 1-2, weight 2 with two pendants 3 and 5
            NamedTag::Pendulum => {
                Graph::from_edges(6, &[(0, 1), (0, 4), (1, 2), (1, 4), (2, 3), (2, 5)]).unwrap()
            }
        }
    }
}

impl fmt::Display for NamedTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGraph {
    pub tag: NamedTag,
    pub graph: Graph,
}

/// The six divergent certificate graphs.
pub fn named_graphs() -> Vec<NamedGraph> {
    NamedTag::ALL.iter().map(|&tag| NamedGraph { tag, graph: tag.graph() }).collect()
}
