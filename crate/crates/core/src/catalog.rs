//! Isomorph-free catalogs of small graphs.
//!
//! [`generate`] extends every graph on `n - 1` vertices by one vertex in all possible
//! ways and keeps one representative per canonical form. [`isolated_free_by_edges`] does
//! the same by adding edges, which is what edge-bounded searches need.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use thiserror::Error;

use crate::format::{parse_graph6_lines, FormatError};
use crate::graph::{bit, Diameter, Graph};
use crate::iso::{canonical_form, CanonicalForm};

pub const MAX_GENERATED_VERTICES: usize = 8;
pub const MAX_GENERATED_EDGES: usize = 10;

/// Number of graphs on `n` vertices up to isomorphism, for `n <= 8`.
pub const GRAPH_COUNTS: [usize; 9] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("generation bound {requested} exceeds the maximum of {max}")]
    BoundExceeded { requested: usize, max: usize },
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Format {
        path: PathBuf,
        #[source]
        source: FormatError,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogSource {
    Generated { n_max: usize },
    Ingested { path: PathBuf, duplicates_dropped: usize },
    Filtered,
}

/// One isomorphism class: its canonical representative, with isolated vertices
/// also stripped for classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub graph: Graph,
    pub stripped: Graph,
    pub canonical: CanonicalForm,
}

impl Entry {
    fn new(canonical: CanonicalForm) -> Entry {
        let graph = canonical.to_graph();
        Entry { stripped: graph.strip_isolated(), graph, canonical }
    }
}

#[derive(Debug, Clone)]
pub struct GraphCatalog {
    by_vertices: BTreeMap<usize, Vec<Entry>>,
    source: CatalogSource,
}

impl GraphCatalog {
    fn from_forms(forms: impl IntoIterator<Item = CanonicalForm>, source: CatalogSource) -> GraphCatalog {
        let set: BTreeSet<CanonicalForm> = forms.into_iter().collect();
        let mut by_vertices: BTreeMap<usize, Vec<Entry>> = BTreeMap::new();
        for cf in set {
            let e = Entry::new(cf);
            by_vertices.entry(e.graph.vertex_count()).or_default().push(e);
        }
        GraphCatalog { by_vertices, source }
    }

    pub fn source(&self) -> &CatalogSource {
        &self.source
    }

    pub fn by_vertices(&self) -> &BTreeMap<usize, Vec<Entry>> {
        &self.by_vertices
    }

    pub fn count(&self, n: usize) -> usize {
        self.by_vertices.get(&n).map_or(0, Vec::len)
    }

    pub fn len(&self) -> usize {
        self.by_vertices.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Largest vertex count present.
    pub fn n_max(&self) -> Option<usize> {
        self.by_vertices.keys().next_back().copied()
    }

    /// Largest `n` such that every graph on up to `n` vertices is present, judged by class counts.
    pub fn complete_up_to(&self) -> Option<usize> {
        GRAPH_COUNTS.iter().enumerate().take_while(|&(n, &want)| self.count(n) == want).last().map(|(n, _)| n)
    }

    /// Entries by vertex count, then canonical form.
    pub fn entries(&self) -> impl Iterator<Item = &Entry> {
        self.by_vertices.values().flatten()
    }

    pub fn canonical_set(&self) -> BTreeSet<CanonicalForm> {
        self.entries().map(|e| e.canonical.clone()).collect()
    }

    /// One canonical form per line, in entry order.
    pub fn manifest(&self) -> String {
        self.entries().map(|e| format!("{}\n", e.canonical)).collect()
    }
}

fn canonical_children(parent: &Graph) -> Vec<CanonicalForm> {
    let n = parent.vertex_count();
    (0..1u64 << n)
        .map(|mask| {
            let mut child = parent.disjoint_union(&Graph::new(1).expect("one vertex")).expect("within limit");
            for u in crate::graph::bits(mask) {
                child.add_edge(u, n).expect("valid edge");
            }
            canonical_form(&child)
        })
        .collect()
}

/// All graphs on at most `n_max` vertices up to isomorphism, including the 0-vertex graph.
pub fn generate(n_max: usize) -> Result<GraphCatalog, CatalogError> {
    if n_max > MAX_GENERATED_VERTICES {
        return Err(CatalogError::BoundExceeded { requested: n_max, max: MAX_GENERATED_VERTICES });
    }
    let mut all = vec![canonical_form(&Graph::empty())];
    let mut level = vec![Graph::empty()];
    for _ in 1..=n_max {
        let mut forms: Vec<CanonicalForm> = level.par_iter().flat_map_iter(canonical_children).collect();
        forms.par_sort_unstable();
        forms.dedup();
        level = forms.iter().map(CanonicalForm::to_graph).collect();
        all.extend(forms);
    }
    Ok(GraphCatalog::from_forms(all, CatalogSource::Generated { n_max }))
}

/// Decodes a graph6 file, one graph per non-blank line, dropping isomorphic repeats.
pub fn ingest(path: &Path) -> Result<GraphCatalog, CatalogError> {
    let text = std::fs::read_to_string(path).map_err(|source| CatalogError::Io { path: path.into(), source })?;
    let graphs = parse_graph6_lines(&text).map_err(|source| CatalogError::Format { path: path.into(), source })?;
    let total = graphs.len();
    let forms: Vec<CanonicalForm> = graphs.par_iter().map(canonical_form).collect();
    let mut c = GraphCatalog::from_forms(forms, CatalogSource::Filtered);
    c.source = CatalogSource::Ingested { path: path.into(), duplicates_dropped: total - c.len() };
    Ok(c)
}

/// Conjunction of optional conditions; unset fields accept everything.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Filter {
    pub connected: Option<bool>,
    /// Graphs with no vertices never match a diameter condition.
    pub diameter: Option<Diameter>,
    pub min_edges: Option<usize>,
    pub max_edges: Option<usize>,
    pub max_vertices: Option<usize>,
}

impl Filter {
    pub fn matches(&self, g: &Graph) -> bool {
        let m = g.edge_count();
        self.connected.is_none_or(|c| g.is_connected() == c)
            && self.min_edges.is_none_or(|k| m >= k)
            && self.max_edges.is_none_or(|k| m <= k)
            && self.max_vertices.is_none_or(|k| g.vertex_count() <= k)
            && self.diameter.is_none_or(|d| g.diameter().ok() == Some(d))
    }
}

pub fn filter(c: &GraphCatalog, f: &Filter) -> GraphCatalog {
    let by_vertices = c
        .by_vertices
        .iter()
        .map(|(&n, es)| (n, es.iter().filter(|e| f.matches(&e.graph)).cloned().collect::<Vec<_>>()))
        .filter(|(_, es)| !es.is_empty())
        .collect();
    GraphCatalog { by_vertices, source: CatalogSource::Filtered }
}

fn edge_children(parent: &Graph) -> Vec<CanonicalForm> {
    let n = parent.vertex_count();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if parent.row(u) & bit(v) == 0 {
                out.push(canonical_form(&parent.clone().with_edge(u, v)));
            }
        }
    }
    let one = parent.disjoint_union(&Graph::new(1).unwrap()).expect("within limit");
    for u in 0..n {
        out.push(canonical_form(&one.clone().with_edge(u, n)));
    }
    let two = parent.disjoint_union(&Graph::new(2).unwrap()).expect("within limit");
    out.push(canonical_form(&two.with_edge(n, n + 1)));
    out
}

trait WithEdge {
    fn with_edge(self, u: usize, v: usize) -> Graph;
}

impl WithEdge for Graph {
    fn with_edge(mut self, u: usize, v: usize) -> Graph {
        self.add_edge(u, v).expect("valid edge");
        self
    }
}

/// Graphs without isolated vertices grouped by edge count: index `m` holds those with
/// exactly `m` edges, in canonical-form order (index 0 holds the 0-vertex graph).
pub fn isolated_free_by_edges(max_edges: usize) -> Result<Vec<Vec<Graph>>, CatalogError> {
    if max_edges > MAX_GENERATED_EDGES {
        return Err(CatalogError::BoundExceeded { requested: max_edges, max: MAX_GENERATED_EDGES });
    }
    let mut out = vec![vec![Graph::empty()]];
    for m in 1..=max_edges {
        let mut forms: Vec<CanonicalForm> = out[m - 1].par_iter().flat_map_iter(edge_children).collect();
        forms.par_sort_unstable();
        forms.dedup();
        out.push(forms.iter().map(CanonicalForm::to_graph).collect());
    }
    Ok(out)
}
