//! Constructors for the small graphs that recur throughout.
//!
//! All constructors panic if the result would exceed [`crate::MAX_VERTICES`].

use crate::graph::{Edge, Graph};

fn build(n: usize, edges: &[Edge]) -> Graph {
    Graph::from_edges(n, edges).expect("family member within the vertex limit")
}

pub fn edgeless(n: usize) -> Graph {
    Graph::new(n).expect("within the vertex limit")
}

pub fn complete(n: usize) -> Graph {
    edgeless(n).complement()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let e: Vec<Edge> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &e)
}

/// Path on `n` vertices (`n - 1` edges).
pub fn path(n: usize) -> Graph {
    let e: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &e)
}

/// Star with `k` pendants around vertex 0.
pub fn star(k: usize) -> Graph {
    let e: Vec<Edge> = (1..=k).map(|i| (0, i)).collect();
    build(k + 1, &e)
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut e = Vec::new();
    for i in 0..a {
        for j in 0..b {
            e.push((i, a + j));
        }
    }
    build(a + b, &e)
}

pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &e)
}

/// Adds `k` new pendant vertices attached to `v`.
pub fn with_pendants(g: &Graph, v: usize, k: usize) -> Graph {
    let n = g.vertex_count();
    let mut h = g.disjoint_union(&edgeless(k)).expect("within the vertex limit");
    for i in 0..k {
        h.add_edge(v, n + i).expect("valid pendant");
    }
    h
}

pub fn union(a: &Graph, b: &Graph) -> Graph {
    a.disjoint_union(b).expect("within the vertex limit")
}

/// Triangle with one pendant at each corner.
pub fn net() -> Graph {
    build(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)])
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> Graph {
    build(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
}

/// `K4` minus an edge; vertices 0 and 2 have degree 3.
pub fn diamond() -> Graph {
    build(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
}

/// Triangle with one pendant.
pub fn paw() -> Graph {
    triangle_with_pendants(1)
}

/// Path 1-0-2-3 with a second pendant at 0: a `P4` with an extra leaf.
pub fn fork() -> Graph {
    spider(2)
}

/// Triangle with a pendant at two different corners.
pub fn bull() -> Graph {
    build(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)])
}

/// `C5` plus one chord.
pub fn c5_chord() -> Graph {
    build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
}

/// `C4` plus a disjoint edge; its jump graph is the bowtie and its dissipation number 7.
pub fn c4_plus_k2() -> Graph {
    union(&cycle(4), &path(2))
}

/// Path 0-1-2-3 with an extra pendant on each inner vertex.
pub fn h_shape() -> Graph {
    build(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)])
}

/// Triangle `{0,1,2}` with `k` pendants at vertex 0.
pub fn triangle_with_pendants(k: usize) -> Graph {
    with_pendants(&cycle(3), 0, k)
}

/// Centre 0 with one leg 0-1-2 of length 2 and `k` pendants: a `P3` with `k` leaves at one end.
pub fn spider(k: usize) -> Graph {
    with_pendants(&path(3), 0, k)
}

/// Star with `k` pendants plus a disjoint edge.
pub fn star_plus_edge(k: usize) -> Graph {
    union(&star(k), &path(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;

    #[test]
    fn sizes() {
        assert_eq!((net().vertex_count(), net().edge_count()), (6, 6));
        assert_eq!(petersen().edge_count(), 15);
        assert_eq!(complete_bipartite(2, 3).edge_count(), 6);
        assert_eq!(c4_plus_k2().edge_count(), 5);
        assert_eq!(spider(3).edge_count(), 5);
        assert_eq!(triangle_with_pendants(2).edge_count(), 5);
    }

    #[test]
    fn aliases() {
        assert!(is_isomorphic(&spider(1), &path(4)));
        assert!(is_isomorphic(&star_plus_edge(1), &union(&path(2), &path(2))));
        assert!(is_isomorphic(&fork(), &build(5, &[(0, 1), (1, 2), (2, 3), (2, 4)])));
    }
}
