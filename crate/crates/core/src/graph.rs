use std::fmt;

use thiserror::Error;

/// Largest vertex count representable by the bitset rows.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{requested} vertices exceeds the limit of {limit}")]
    VertexLimit { requested: usize, limit: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("diameter is undefined for the graph with no vertices")]
    EmptyDiameter,
}

pub type Edge = (usize, usize);

/// Position of an edge in the lexicographic `(min, max)` ordering of a graph's edges.
///
/// Vertex `i` of `g.jump()` is the edge `EdgeId(i)` of `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

/// Simple undirected graph on vertices `0..n`, one `u64` adjacency row per vertex.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of `x` from lowest to highest.
pub(crate) fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let b = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(b)
        }
    })
}

fn choose2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

impl Graph {
    /// The graph with no vertices.
    pub fn empty() -> Graph {
        Graph::default()
    }

    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::VertexLimit { requested: n, limit: MAX_VERTICES });
        }
        Ok(Graph { n, rows: vec![0; n] })
    }

    /// Builds a graph from an edge list; repeated edges are merged.
    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Graph, GraphError> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn from_rows(rows: Vec<u64>) -> Graph {
        debug_assert!(rows.len() <= MAX_VERTICES);
        Graph { n: rows.len(), rows }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.rows[u] |= bit(v);
        self.rows[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.rows[u] &= !bit(v);
        self.rows[v] &= !bit(u);
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] & bit(v) != 0
    }

    /// Neighbourhood of `v` as a bitset.
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn all_vertices(&self) -> u64 {
        low_mask(self.n)
    }

    /// Edges in `EdgeId` order: lexicographic on `(min, max)`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.rows[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<EdgeId> {
        let key = (u.min(v), u.max(v));
        self.edges().binary_search(&key).ok().map(EdgeId)
    }

    /// Per-vertex bitsets over edge ids; requires at most 64 edges.
    fn incidence(&self, edges: &[Edge]) -> Vec<u64> {
        let mut inc = vec![0u64; self.n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            inc[u] |= bit(i);
            inc[v] |= bit(i);
        }
        inc
    }

    /// The jump graph: one vertex per edge, adjacent when the edges share no endpoint.
    ///
    /// Fails only when the graph has more than [`MAX_VERTICES`] edges.
    pub fn jump(&self) -> Result<Graph, GraphError> {
        let edges = self.edges();
        let m = edges.len();
        if m > MAX_VERTICES {
            return Err(GraphError::VertexLimit { requested: m, limit: MAX_VERTICES });
        }
        let inc = self.incidence(&edges);
        let all = low_mask(m);
        let rows = edges.iter().map(|&(u, v)| all & !(inc[u] | inc[v])).collect();
        Ok(Graph::from_rows(rows))
    }

    /// The line graph: one vertex per edge, adjacent when the edges share an endpoint.
    pub fn line_graph(&self) -> Result<Graph, GraphError> {
        let edges = self.edges();
        let m = edges.len();
        if m > MAX_VERTICES {
            return Err(GraphError::VertexLimit { requested: m, limit: MAX_VERTICES });
        }
        let inc = self.incidence(&edges);
        let rows = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (inc[u] | inc[v]) & !bit(i))
            .collect();
        Ok(Graph::from_rows(rows))
    }

    pub fn complement(&self) -> Graph {
        let all = self.all_vertices();
        let rows = (0..self.n).map(|v| all & !self.rows[v] & !bit(v)).collect();
        Graph::from_rows(rows)
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.rows[v] == 0).collect()
    }

    pub fn has_isolated(&self) -> bool {
        self.rows.contains(&0)
    }

    /// Removes degree-0 vertices, keeping the relative order of the rest.
    pub fn strip_isolated(&self) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| self.rows[v] != 0).collect();
        self.induced_subgraph(&keep)
    }

    /// Subgraph induced on `vertices`; new vertex `i` is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let rows = vertices
            .iter()
            .map(|&u| {
                let mut r = 0u64;
                for (j, &w) in vertices.iter().enumerate() {
                    if self.rows[u] & bit(w) != 0 {
                        r |= bit(j);
                    }
                }
                r
            })
            .collect();
        Graph::from_rows(rows)
    }

    /// Relabels so that new vertex `i` is old vertex `order[i]`; `order` must be a permutation.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        debug_assert_eq!(order.len(), self.n);
        self.induced_subgraph(order)
    }

    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        if u < self.n && v < self.n {
            g.rows[u] &= !bit(v);
            g.rows[v] &= !bit(u);
        }
        g
    }

    /// Glues `v` onto `u`, dropping the loop and duplicate edges; `v` is removed.
    pub fn merge_vertices(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        if u != v {
            let moved = g.rows[v] & !bit(u);
            for w in bits(moved) {
                g.rows[w] |= bit(u);
                g.rows[u] |= bit(w);
            }
        }
        g.without_vertex(v)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::VertexLimit { requested: n, limit: MAX_VERTICES });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|&r| r << self.n));
        Ok(Graph::from_rows(rows))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            let comp = self.reach(s);
            seen |= comp;
            out.push(bits(comp).collect());
        }
        out
    }

    fn reach(&self, s: usize) -> u64 {
        let mut seen = bit(s);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// The 0-vertex graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0) == self.all_vertices()
    }

    /// Largest eccentricity, or `None` if some vertex cannot reach `s`.
    fn eccentricity(&self, s: usize) -> Option<usize> {
        let all = self.all_vertices();
        let mut seen = bit(s);
        let mut frontier = seen;
        let mut depth = 0;
        loop {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !seen;
            if frontier == 0 {
                break;
            }
            seen |= frontier;
            depth += 1;
        }
        (seen == all).then_some(depth)
    }

    /// Longest shortest path, by BFS from every vertex.
    pub fn diameter(&self) -> Result<Diameter, GraphError> {
        if self.n == 0 {
            return Err(GraphError::EmptyDiameter);
        }
        let mut best = 0;
        for s in 0..self.n {
            match self.eccentricity(s) {
                Some(e) => best = best.max(e),
                None => return Ok(Diameter::Infinite),
            }
        }
        Ok(Diameter::Finite(best))
    }

    /// `|E(J(G))| = C(m,2) - sum_v C(deg v, 2)`, without building the jump graph.
    pub fn edge_count_of_jump(&self) -> usize {
        let m = self.edge_count();
        choose2(m) - self.rows.iter().map(|r| choose2(r.count_ones() as usize)).sum::<usize>()
    }

    /// Degrees of the jump graph's vertices in `EdgeId` order.
    pub fn jump_degrees(&self) -> Vec<usize> {
        let m = self.edge_count();
        self.edges()
            .iter()
            .map(|&(u, v)| m + 1 - self.degree(u) - self.degree(v))
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
