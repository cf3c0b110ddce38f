//! Going backwards: which graphs are jump graphs, what they come from, and the tree of
//! every dissipating graph hanging below the empty graph.

use std::collections::{BTreeMap, HashMap, VecDeque};

use rayon::prelude::*;
use thiserror::Error;

use crate::catalog::{isolated_free_by_edges, CatalogError, MAX_GENERATED_EDGES};
use crate::classify::Target;
use crate::graph::{Edge, Graph};
use crate::iso::{canonical_form, find_subgraph, CanonicalForm, SubgraphWitness};

#[derive(Debug, Error)]
pub enum PreimageError {
    #[error("a preimage of a graph on {needed} vertices has {needed} edges, beyond the search bound {bound}")]
    SearchBoundExceeded { needed: usize, bound: usize },
    #[error("tree over graphs with up to {requested} edges exceeds the guard {guard}; raise --guard (at most {max})")]
    TreeGuardExceeded { requested: usize, guard: usize, max: usize },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// 1-based edge lists of the nine minimal non-line graphs, claw first.
const FORBIDDEN: [(usize, &[Edge]); 9] = [
    (4, &[(1, 2), (2, 3), (2, 4)]),
    (5, &[(1, 2), (2, 3), (3, 1), (2, 4), (4, 3), (1, 5), (5, 4)]),
    (6, &[(1, 2), (2, 3), (3, 1), (2, 4), (4, 3), (1, 5), (4, 6)]),
    (6, &[(1, 2), (2, 3), (3, 1), (2, 4), (4, 3), (1, 5), (5, 6), (6, 4)]),
    (6, &[(1, 2), (2, 3), (4, 5), (5, 6), (1, 4), (4, 2), (2, 5), (5, 3), (3, 6)]),
    (6, &[(1, 2), (2, 3), (3, 4), (4, 1), (1, 3), (2, 4), (2, 5), (5, 3), (5, 6)]),
    (6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 5), (5, 3), (4, 2), (2, 6), (2, 5)]),
    (5, &[(1, 2), (2, 3), (3, 4), (4, 1), (1, 3), (2, 4), (2, 5), (5, 4), (3, 5)]),
    (6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (6, 1), (6, 2), (6, 3), (6, 4), (6, 5)]),
];

#[derive(Debug, Clone)]
pub struct ForbiddenCatalog {
    /// A graph is a line graph iff it contains none of these as an induced subgraph.
    pub line_forbidden: Vec<Graph>,
    /// Complements of the above: a graph is a jump graph iff it contains none of these induced.
    pub jump_forbidden: Vec<Graph>,
}

pub fn forbidden_catalog() -> ForbiddenCatalog {
    let line_forbidden: Vec<Graph> = FORBIDDEN
        .iter()
        .map(|&(n, es)| {
            let zero: Vec<Edge> = es.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
            Graph::from_edges(n, &zero).expect("small forbidden graph")
        })
        .collect();
    let jump_forbidden = line_forbidden.iter().map(Graph::complement).collect();
    ForbiddenCatalog { line_forbidden, jump_forbidden }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineGraphTest {
    LineGraph,
    /// `line_forbidden[index]` sits inside the graph as an induced subgraph.
    Forbidden { index: usize, witness: SubgraphWitness },
}

impl LineGraphTest {
    pub fn is_line_graph(&self) -> bool {
        matches!(self, LineGraphTest::LineGraph)
    }
}

/// Line graph recognition by forbidden induced subgraphs.
pub fn is_line_graph(g: &Graph) -> LineGraphTest {
    for (index, f) in forbidden_catalog().line_forbidden.iter().enumerate() {
        if let Some(witness) = find_subgraph(f, g, true) {
            return LineGraphTest::Forbidden { index, witness };
        }
    }
    LineGraphTest::LineGraph
}

/// Whether `g` is `J(H)` for some `H`: exactly when its complement is a line graph.
pub fn has_jump_preimage(g: &Graph) -> bool {
    is_line_graph(&g.complement()).is_line_graph()
}

/// Isolated-free graphs with up to `max_edges` edges, indexed by the canonical form of
/// their jump graph.
#[derive(Debug, Clone)]
pub struct PreimageIndex {
    max_edges: usize,
    by_jump: HashMap<CanonicalForm, Vec<Graph>>,
}

impl PreimageIndex {
    pub fn build(max_edges: usize) -> Result<PreimageIndex, PreimageError> {
        let levels = isolated_free_by_edges(max_edges)?;
        let pairs: Vec<(CanonicalForm, Graph)> = levels
            .into_par_iter()
            .flatten()
            .map(|h| (canonical_form(&h.jump().expect("small graph")), h))
            .collect();
        let mut by_jump: HashMap<CanonicalForm, Vec<Graph>> = HashMap::new();
        for (k, h) in pairs {
            by_jump.entry(k).or_default().push(h);
        }
        for hs in by_jump.values_mut() {
            hs.sort_by_cached_key(canonical_form);
        }
        Ok(PreimageIndex { max_edges, by_jump })
    }

    pub fn max_edges(&self) -> usize {
        self.max_edges
    }

    /// Every isolated-free `H` with `J(H)` isomorphic to `g`, one per isomorphism class.
    pub fn preimages(&self, g: &Graph) -> Result<Vec<Graph>, PreimageError> {
        let needed = g.vertex_count();
        if needed > self.max_edges {
            return Err(PreimageError::SearchBoundExceeded { needed, bound: self.max_edges });
        }
        Ok(self.by_jump.get(&canonical_form(g)).cloned().unwrap_or_default())
    }
}

/// Every isolated-free `H` with `J(H)` isomorphic to `g`.
///
/// `H` has exactly as many edges as `g` has vertices, so the search is exhaustive
/// whenever that count is within `search_bound`.
pub fn jump_preimages(g: &Graph, search_bound: usize) -> Result<Vec<Graph>, PreimageError> {
    let needed = g.vertex_count();
    let cap = search_bound.min(MAX_GENERATED_EDGES);
    if needed > cap {
        return Err(PreimageError::SearchBoundExceeded { needed, bound: cap });
    }
    let want = canonical_form(g);
    let level = isolated_free_by_edges(needed)?.swap_remove(needed);
    let mut out: Vec<Graph> =
        level.into_par_iter().filter(|h| canonical_form(&h.jump().expect("small graph")) == want).collect();
    out.sort_by_cached_key(canonical_form);
    Ok(out)
}

/// Isolated vertices removed; a graph with vertices but no edges becomes `K1`.
pub fn normalize(g: &Graph) -> Graph {
    let s = g.strip_isolated();
    if s.is_empty() && !g.is_empty() {
        Graph::new(1).expect("one vertex")
    } else {
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub canonical: CanonicalForm,
    pub graph: Graph,
    /// Number of jumps down to the empty graph.
    pub level: usize,
    /// Index of the node `J(graph)` normalizes to; `None` for the empty graph.
    pub parent: Option<usize>,
    /// More edges than the bound: present only as the image of a bounded node.
    pub beyond_bound: bool,
}

#[derive(Debug, Clone)]
pub struct DissipationTree {
    pub max_edges: usize,
    /// Sorted by level, then canonical form; index 0 is the empty graph.
    pub nodes: Vec<TreeNode>,
}

impl DissipationTree {
    pub fn find(&self, g: &Graph) -> Option<&TreeNode> {
        let key = canonical_form(&normalize(g));
        self.nodes.iter().find(|n| n.canonical == key)
    }

    pub fn levels(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, n) in self.nodes.iter().enumerate() {
            out.entry(n.level).or_default().push(i);
        }
        out
    }

    pub fn height(&self) -> usize {
        self.nodes.iter().map(|n| n.level).max().unwrap_or(0)
    }

    /// One `canonical<TAB>level<TAB>parent` line per node; the root's parent is `-`.
    pub fn manifest(&self) -> String {
        let mut out = String::new();
        for n in &self.nodes {
            let parent = n.parent.map_or("-".to_string(), |p| self.nodes[p].canonical.to_string());
            out.push_str(&format!("{}\t{}\t{}\n", n.canonical, n.level, parent));
        }
        out
    }
}

pub const DEFAULT_TREE_GUARD: usize = 8;

/// Jump image of a normalized graph, or `None` once it holds `C5` or `N`.
fn image(g: &Graph) -> Option<Graph> {
    if g.is_empty() {
        return None;
    }
    if Target::BOTH.iter().any(|t| find_subgraph(&t.graph(), g, false).is_some()) {
        return None;
    }
    g.jump().ok().map(|j| normalize(&j))
}

/// Builds the dissipation tree over every graph with at most `max_edges` edges.
///
/// Isolated vertices are ignored throughout. Starting from the empty graph, each round
/// adds the graphs whose jump lands on the previous round. Jump images of bounded graphs
/// join the search space even when they have more edges, so no chain is cut short.
pub fn build_dissipation_tree(max_edges: usize) -> Result<DissipationTree, PreimageError> {
    build_dissipation_tree_guarded(max_edges, DEFAULT_TREE_GUARD)
}

pub fn build_dissipation_tree_guarded(max_edges: usize, guard: usize) -> Result<DissipationTree, PreimageError> {
    if max_edges > guard.min(MAX_GENERATED_EDGES) {
        return Err(PreimageError::TreeGuardExceeded { requested: max_edges, guard, max: MAX_GENERATED_EDGES });
    }
    let mut space: Vec<Graph> = isolated_free_by_edges(max_edges)?.into_iter().flatten().collect();
    space.push(Graph::new(1).expect("one vertex"));

    // canonical form -> (graph, canonical form of its image)
    let mut known: HashMap<CanonicalForm, (Graph, Option<CanonicalForm>)> = HashMap::new();
    let mut queue: VecDeque<Graph> = space.into();
    while !queue.is_empty() {
        let batch: Vec<Graph> = queue.drain(..).collect();
        let fresh: Vec<(CanonicalForm, Graph, Option<Graph>)> = batch
            .into_par_iter()
            .map(|g| {
                let img = image(&g);
                (canonical_form(&g), g, img)
            })
            .collect();
        for (key, g, img) in fresh {
            if known.contains_key(&key) {
                continue;
            }
            let img_key = img.as_ref().map(canonical_form);
            if let Some(img) = img {
                if !known.contains_key(img_key.as_ref().expect("image present")) {
                    queue.push_back(img);
                }
            }
            known.insert(key, (g, img_key));
        }
    }

    let root = canonical_form(&Graph::empty());
    let mut children: HashMap<&CanonicalForm, Vec<&CanonicalForm>> = HashMap::new();
    for (key, (_, img)) in &known {
        if let Some(img) = img {
            children.entry(img).or_default().push(key);
        }
    }
    let mut placed: Vec<(usize, CanonicalForm, Option<CanonicalForm>)> = vec![(0, root.clone(), None)];
    let mut frontier = vec![&root];
    let mut level = 0;
    while !frontier.is_empty() {
        level += 1;
        let mut next = Vec::new();
        for p in frontier {
            for &c in children.get(p).map(Vec::as_slice).unwrap_or(&[]) {
                placed.push((level, c.clone(), Some(p.clone())));
                next.push(c);
            }
        }
        frontier = next;
    }
    placed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let index: HashMap<CanonicalForm, usize> = placed.iter().enumerate().map(|(i, p)| (p.1.clone(), i)).collect();
    let nodes = placed
        .into_iter()
        .map(|(level, key, parent)| {
            let graph = known[&key].0.clone();
            TreeNode {
                beyond_bound: graph.edge_count() > max_edges,
                graph,
                level,
                parent: parent.map(|p| index[&p]),
                canonical: key,
            }
        })
        .collect();
    Ok(DissipationTree { max_edges, nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::iso::is_isomorphic;

    #[test]
    fn forbidden_sizes() {
        let c = forbidden_catalog();
        let sizes: Vec<(usize, usize)> =
            c.line_forbidden.iter().map(|g| (g.vertex_count(), g.edge_count())).collect();
        assert_eq!(sizes, vec![(4, 3), (5, 7), (6, 7), (6, 8), (6, 9), (6, 9), (6, 11), (5, 9), (6, 10)]);
        for (i, f) in c.line_forbidden.iter().enumerate() {
            assert!(!is_line_graph(f).is_line_graph(), "{i}");
            for v in 0..f.vertex_count() {
                assert!(is_line_graph(&f.without_vertex(v)).is_line_graph(), "{i} minus {v}");
            }
        }
    }

    #[test]
    fn line_graphs_recognised() {
        assert!(is_line_graph(&petersen().line_graph().unwrap()).is_line_graph());
        assert!(is_line_graph(&complete(5).line_graph().unwrap()).is_line_graph());
        match is_line_graph(&star(3)) {
            LineGraphTest::Forbidden { index, .. } => assert_eq!(index, 0),
            other => panic!("{other:?}"),
        }
        assert!(!is_line_graph(&petersen()).is_line_graph());
    }

    #[test]
    fn preimages_of_small_graphs() {
        let hs = jump_preimages(&edgeless(3), 8).unwrap();
        assert_eq!(hs.len(), 2);
        assert!(hs.iter().any(|h| is_isomorphic(h, &cycle(3))));
        assert!(hs.iter().any(|h| is_isomorphic(h, &star(3))));
        let c5 = jump_preimages(&cycle(5), 8).unwrap();
        assert_eq!(c5.len(), 1);
        assert!(is_isomorphic(&c5[0], &cycle(5)));
        assert!(matches!(
            jump_preimages(&cycle(9), 8),
            Err(PreimageError::SearchBoundExceeded { needed: 9, bound: 8 })
        ));
    }

    #[test]
    fn index_agrees_with_direct_search() {
        let idx = PreimageIndex::build(5).unwrap();
        for g in [bowtie(), path(4), cycle(5), edgeless(4), star(3)] {
            let a = idx.preimages(&g).unwrap();
            let b = jump_preimages(&g, 5).unwrap();
            assert_eq!(a.len(), b.len());
        }
    }

    #[test]
    fn small_tree() {
        let t = build_dissipation_tree(3).unwrap();
        assert_eq!(t.nodes[0].graph, Graph::empty());
        assert!(t.find(&edgeless(5)).is_some_and(|n| n.level == 1));
        assert_eq!(t.find(&path(4)).unwrap().level, 3);
        assert!(t.find(&path(5)).is_none());
        for n in &t.nodes[1..] {
            let p = &t.nodes[n.parent.unwrap()];
            assert_eq!(p.level + 1, n.level);
            assert_eq!(canonical_form(&normalize(&n.graph.jump().unwrap())), p.canonical);
        }
    }

    #[test]
    fn tree_guard() {
        assert!(build_dissipation_tree(9).is_err());
    }
}
