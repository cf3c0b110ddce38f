//! The known list of dissipating graphs: finitely many sporadic graphs plus four
//! infinite families. Each node records the node its jump graph lands on; the
//! dissipation number is the length of that chain down to the empty graph.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::families::{spider, star, star_plus_edge, triangle_with_pendants};
use crate::graph::{Edge, Graph};
use crate::iso::{canonical_form, is_isomorphic, CanonicalForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Parent {
    Empty,
    Isolated,
    Node(&'static str),
    Member(Family, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Star,
    TrianglePendants,
    Spider,
    StarPlusEdge,
}

impl Family {
    const ALL: [Family; 4] = [Family::Star, Family::TrianglePendants, Family::Spider, Family::StarPlusEdge];

    fn name(self) -> &'static str {
        match self {
            Family::Star => "S_k",
            Family::TrianglePendants => "K3 with k pendants at one vertex",
            Family::Spider => "P3 with k pendants at one end",
            Family::StarPlusEdge => "S_k + K2",
        }
    }

    /// Member with `k` parameter; `None` if `k` is below the family's range.
    fn member(self, k: usize) -> Option<Graph> {
        (k >= 1).then(|| match self {
            Family::Star => star(k),
            Family::TrianglePendants => triangle_with_pendants(k),
            Family::Spider => spider(k),
            Family::StarPlusEdge => star_plus_edge(k),
        })
    }

    /// Parameter of the member with `m` edges.
    fn parameter(self, m: usize) -> Option<usize> {
        let offset = match self {
            Family::Star => 0,
            Family::TrianglePendants => 3,
            Family::Spider => 2,
            Family::StarPlusEdge => 1,
        };
        m.checked_sub(offset).filter(|&k| k >= 1)
    }

    fn parent(self, k: usize) -> Parent {
        match self {
            Family::Star => Parent::Isolated,
            _ => Parent::Member(Family::Star, k),
        }
    }
}

struct Sporadic {
    name: &'static str,
    n: usize,
    edges: &'static [Edge],
    parent: Parent,
}

const SPORADIC: &[Sporadic] = &[
    Sporadic { name: "K3", n: 3, edges: &[(0, 1), (1, 2), (2, 0)], parent: Parent::Isolated },
    Sporadic { name: "3K2", n: 6, edges: &[(0, 1), (2, 3), (4, 5)], parent: Parent::Node("K3") },
    Sporadic { name: "K4", n: 4, edges: &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], parent: Parent::Node("3K2") },
    Sporadic { name: "4K2", n: 8, edges: &[(0, 1), (2, 3), (4, 5), (6, 7)], parent: Parent::Node("K4") },
    Sporadic { name: "K3 + K2", n: 5, edges: &[(0, 1), (1, 2), (2, 0), (3, 4)], parent: Parent::Member(Family::Star, 3) },
    Sporadic {
        name: "P4 + K2",
        n: 6,
        edges: &[(0, 1), (1, 2), (2, 3), (4, 5)],
        parent: Parent::Member(Family::TrianglePendants, 1),
    },
    Sporadic {
        name: "paw + K2",
        n: 6,
        edges: &[(0, 1), (1, 2), (2, 0), (2, 3), (4, 5)],
        parent: Parent::Member(Family::TrianglePendants, 2),
    },
    Sporadic { name: "P5", n: 5, edges: &[(0, 1), (1, 2), (2, 3), (3, 4)], parent: Parent::Member(Family::Spider, 1) },
    Sporadic { name: "C4 with pendant", n: 5, edges: &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4)], parent: Parent::Node("P5") },
    Sporadic {
        name: "spider with legs 1, 1, 3",
        n: 6,
        edges: &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)],
        parent: Parent::Node("C4 with pendant"),
    },
    Sporadic {
        name: "triangle with pendant counts 2, 1, 0",
        n: 6,
        edges: &[(0, 1), (1, 2), (2, 3), (4, 1), (1, 5), (5, 2)],
        parent: Parent::Node("C4 with pendant"),
    },
    Sporadic {
        name: "triangle with a tail and a pendant at one corner",
        n: 6,
        edges: &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (2, 5)],
        parent: Parent::Node("triangle with pendant counts 2, 1, 0"),
    },
    Sporadic {
        name: "diamond with pendant at a degree-3 vertex",
        n: 5,
        edges: &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (2, 4)],
        parent: Parent::Node("P5"),
    },
    Sporadic {
        name: "fork + K2",
        n: 7,
        edges: &[(0, 1), (1, 2), (2, 3), (1, 4), (5, 6)],
        parent: Parent::Node("diamond with pendant at a degree-3 vertex"),
    },
    Sporadic {
        name: "bull",
        n: 5,
        edges: &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 2)],
        parent: Parent::Member(Family::Spider, 1),
    },
    Sporadic { name: "E", n: 6, edges: &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)], parent: Parent::Node("bull") },
    Sporadic {
        name: "diamond with pendant at a degree-2 vertex",
        n: 5,
        edges: &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3), (2, 4)],
        parent: Parent::Node("E"),
    },
    Sporadic {
        name: "triangle with tail of length 2",
        n: 5,
        edges: &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)],
        parent: Parent::Member(Family::Spider, 2),
    },
    Sporadic {
        name: "diamond",
        n: 4,
        edges: &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
        parent: Parent::Member(Family::StarPlusEdge, 1),
    },
    Sporadic { name: "P3 + 2K2", n: 7, edges: &[(0, 1), (1, 2), (3, 4), (5, 6)], parent: Parent::Node("diamond") },
    Sporadic {
        name: "C4",
        n: 4,
        edges: &[(0, 1), (1, 2), (2, 3), (3, 0)],
        parent: Parent::Member(Family::StarPlusEdge, 1),
    },
    Sporadic { name: "2P3", n: 6, edges: &[(0, 1), (1, 2), (3, 4), (4, 5)], parent: Parent::Node("C4") },
    Sporadic { name: "H", n: 6, edges: &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)], parent: Parent::Node("C4") },
    Sporadic { name: "bowtie", n: 5, edges: &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)], parent: Parent::Node("H") },
    Sporadic {
        name: "C4 + K2",
        n: 6,
        edges: &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5)],
        parent: Parent::Node("bowtie"),
    },
];

/// A dissipating graph recognised from the catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub d: usize,
    /// Name of the node the jump graph lands on; `None` for the empty graph.
    pub parent: Option<String>,
}

/// A sporadic (non-family) catalog node.
#[derive(Debug, Clone)]
pub struct DissipatingNode {
    pub name: &'static str,
    pub graph: Graph,
    pub d: usize,
}

fn member_name(f: Family, k: usize) -> String {
    format!("{} (k={k})", f.name())
}

fn parent_name(p: Parent) -> String {
    match p {
        Parent::Empty => "empty".into(),
        Parent::Isolated => "isolated vertices".into(),
        Parent::Node(name) => name.into(),
        Parent::Member(f, k) => member_name(f, k),
    }
}

fn depth(p: Parent) -> usize {
    match p {
        Parent::Empty => 0,
        Parent::Isolated => 1,
        Parent::Member(f, k) => 1 + depth(f.parent(k)),
        Parent::Node(name) => {
            let s = SPORADIC.iter().find(|s| s.name == name).expect("parent names a listed node");
            1 + depth(s.parent)
        }
    }
}

fn sporadic_index() -> &'static HashMap<CanonicalForm, usize> {
    static INDEX: OnceLock<HashMap<CanonicalForm, usize>> = OnceLock::new();
    INDEX.get_or_init(|| {
        SPORADIC
            .iter()
            .enumerate()
            .map(|(i, s)| (canonical_form(&Graph::from_edges(s.n, s.edges).unwrap()), i))
            .collect()
    })
}

/// The sporadic nodes with their dissipation numbers.
pub fn dissipating_nodes() -> Vec<DissipatingNode> {
    SPORADIC
        .iter()
        .map(|s| DissipatingNode {
            name: s.name,
            graph: Graph::from_edges(s.n, s.edges).unwrap(),
            d: depth(Parent::Node(s.name)),
        })
        .collect()
}

/// Looks `g` up among the known dissipating graphs, ignoring isolated vertices.
///
/// A graph with vertices but no edges is the "isolated vertices" node (`d = 1`); the
/// 0-vertex graph is the root (`d = 0`).
pub fn catalog_membership(g: &Graph) -> Option<CatalogEntry> {
    if g.is_empty() {
        return Some(CatalogEntry { name: "empty".into(), d: 0, parent: None });
    }
    let s = g.strip_isolated();
    if s.is_empty() {
        return Some(CatalogEntry { name: "isolated vertices".into(), d: 1, parent: Some(parent_name(Parent::Empty)) });
    }
    if let Some(&i) = sporadic_index().get(&canonical_form(&s)) {
        let node = &SPORADIC[i];
        return Some(CatalogEntry {
            name: node.name.into(),
            d: depth(Parent::Node(node.name)),
            parent: Some(parent_name(node.parent)),
        });
    }
    let m = s.edge_count();
    for f in Family::ALL {
        let Some(k) = f.parameter(m) else { continue };
        let Some(member) = f.member(k) else { continue };
        if is_isomorphic(&member, &s) {
            return Some(CatalogEntry {
                name: member_name(f, k),
                d: depth(Parent::Member(f, k)),
                parent: Some(parent_name(f.parent(k))),
            });
        }
    }
    None
}
