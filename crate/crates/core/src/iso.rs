//! Canonical forms, isomorphism and subgraph search.
//!
//! Canonical labelling uses colour refinement followed by an individualise-and-refine
//! search that keeps the lexicographically largest adjacency code. Interchangeable
//! twins and automorphisms found at the root prune the search.

use std::fmt;

use crate::format::{from_graph6, to_graph6};
use crate::graph::{bit, bits, Graph};

/// Isomorphism-class identifier: the graph6 bytes of the canonically relabelled graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    /// The canonical representative of the class.
    pub fn to_graph(&self) -> Graph {
        from_graph6(self.as_str()).expect("canonical form is valid graph6")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_str())
    }
}

/// Colour refinement to the coarsest equitable partition finer than `colors`.
///
/// Colours stay dense ranks and a split cell keeps its position relative to other cells,
/// so the result depends only on the isomorphism type of `(adj, colors)`.
fn refine(adj: &[Vec<usize>], colors: &mut [usize]) {
    let n = colors.len();
    let mut count = distinct(colors);
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = adj[v].iter().map(|&u| colors[u]).collect();
                s.sort_unstable();
                (colors[v], s, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut rank = 0;
        for i in 0..n {
            if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                rank += 1;
            }
            colors[sigs[i].2] = rank;
        }
        let next = if n == 0 { 0 } else { rank + 1 };
        if next == count {
            return;
        }
        count = next;
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Splits the given vertices off their cells, placing them just before the rest.
fn individualize(colors: &[usize], chosen: &[usize]) -> Vec<usize> {
    let mut keyed: Vec<(usize, bool, usize)> =
        colors.iter().enumerate().map(|(v, &c)| (c, !chosen.contains(&v), v)).collect();
    keyed.sort_unstable();
    let mut out = vec![0; colors.len()];
    let mut rank = 0;
    for i in 0..keyed.len() {
        if i > 0 && (keyed[i].0, keyed[i].1) != (keyed[i - 1].0, keyed[i - 1].1) {
            rank += 1;
        }
        out[keyed[i].2] = rank;
    }
    out
}

fn adjacency_lists(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.vertex_count()).map(|v| g.neighbors(v).collect()).collect()
}

struct Orbits(Vec<usize>);

impl Orbits {
    fn find(&mut self, v: usize) -> usize {
        let mut r = v;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut x = v;
        while self.0[x] != r {
            let next = self.0[x];
            self.0[x] = r;
            x = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    adj: Vec<Vec<usize>>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    orbits: Orbits,
}

impl CanonSearch<'_> {
    fn code(&self, order: &[usize]) -> Vec<u64> {
        let n = order.len();
        let nbits = n * n.saturating_sub(1) / 2;
        let mut code = vec![0u64; nbits.div_ceil(64)];
        let mut k = 0;
        for j in 1..n {
            let rj = self.g.row(order[j]);
            for &oi in &order[..j] {
                if rj & bit(oi) != 0 {
                    code[k / 64] |= 1u64 << (63 - k % 64);
                }
                k += 1;
            }
        }
        code
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        self.g.row(u) & !bit(v) == self.g.row(v) & !bit(u)
    }

    fn search(&mut self, colors: Vec<usize>, depth: usize) {
        let n = colors.len();
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c] += 1;
        }
        let target = (0..n).find(|&c| sizes[c] > 1);
        let Some(target) = target else {
            let mut order = vec![0; n];
            for (v, &c) in colors.iter().enumerate() {
                order[c] = v;
            }
            let code = self.code(&order);
            match &self.best {
                Some((best, best_order)) if *best == code => {
                    let pairs: Vec<(usize, usize)> = order.iter().copied().zip(best_order.iter().copied()).collect();
                    for (a, b) in pairs {
                        self.orbits.union(a, b);
                    }
                }
                Some((best, _)) if *best > code => {}
                _ => self.best = Some((code, order)),
            }
            return;
        };
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&w| self.twins(v, w)) {
                continue;
            }
            if depth == 0 {
                let rv = self.orbits.find(v);
                if tried.iter().any(|&w| self.orbits.find(w) == rv) {
                    continue;
                }
            }
            let mut child = individualize(&colors, &[v]);
            refine(&self.adj, &mut child);
            self.search(child, depth + 1);
            tried.push(v);
        }
    }
}

/// Canonical order of a connected graph plus its adjacency code.
fn canonical_connected(g: &Graph) -> (Vec<u64>, Vec<usize>) {
    let n = g.vertex_count();
    if n <= 1 {
        return (Vec::new(), (0..n).collect());
    }
    let adj = adjacency_lists(g);
    let mut colors = vec![0; n];
    refine(&adj, &mut colors);
    let mut s = CanonSearch { g, adj, best: None, orbits: Orbits((0..n).collect()) };
    s.search(colors, 0);
    s.best.expect("search reaches at least one leaf")
}

/// Canonical vertex order: canonical vertex `i` is `g`'s vertex `order[i]`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let mut parts: Vec<(usize, Vec<u64>, Vec<usize>)> = g
        .components()
        .into_iter()
        .map(|comp| {
            let sub = g.induced_subgraph(&comp);
            let (code, order) = canonical_connected(&sub);
            (comp.len(), code, order.into_iter().map(|i| comp[i]).collect())
        })
        .collect();
    parts.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    parts.into_iter().flat_map(|p| p.2).collect()
}

pub fn canonical_graph(g: &Graph) -> Graph {
    g.permuted(&canonical_labeling(g))
}

/// Every [`Graph`] is within the vertex limit by construction, so this cannot fail.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(to_graph6(&canonical_graph(g)).into_bytes())
}

fn degree_profile(g: &Graph) -> Vec<usize> {
    let mut d = g.degrees();
    d.sort_unstable();
    d
}

/// An isomorphism `g -> h` as a vertex map, found by joint refinement of `g` and `h`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() || degree_profile(g) != degree_profile(h) {
        return None;
    }
    let mut adj = adjacency_lists(g);
    adj.extend((0..n).map(|v| h.neighbors(v).map(|u| u + n).collect()));
    let mut colors = vec![0; 2 * n];
    refine(&adj, &mut colors);
    iso_search(g, h, &adj, colors)
}

fn balanced(colors: &[usize], n: usize) -> bool {
    let mut count = vec![0isize; 2 * n];
    for &c in &colors[..n] {
        count[c] += 1;
    }
    for &c in &colors[n..] {
        count[c] -= 1;
    }
    count.iter().all(|&c| c == 0)
}

fn iso_search(g: &Graph, h: &Graph, adj: &[Vec<usize>], colors: Vec<usize>) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if !balanced(&colors, n) {
        return None;
    }
    let mut sizes = vec![0usize; 2 * n];
    for &c in &colors[..n] {
        sizes[c] += 1;
    }
    match (0..n).find(|&v| sizes[colors[v]] > 1) {
        None => {
            let mut by_color = vec![0; 2 * n];
            for w in 0..n {
                by_color[colors[n + w]] = w;
            }
            let map: Vec<usize> = (0..n).map(|v| by_color[colors[v]]).collect();
            is_isomorphism(g, h, &map).then_some(map)
        }
        Some(v) => {
            let c = colors[v];
            for w in (0..n).filter(|&w| colors[n + w] == c) {
                let mut child = individualize(&colors, &[v, n + w]);
                refine(adj, &mut child);
                if let Some(map) = iso_search(g, h, adj, child) {
                    return Some(map);
                }
            }
            None
        }
    }
}

fn is_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    (0..g.vertex_count()).all(|v| {
        let image = bits(g.row(v)).fold(0u64, |acc, u| acc | bit(map[u]));
        image == h.row(map[v])
    })
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Certificate that `h` embeds in `g`: `vertex_map[i]` is the image of `h`'s vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphWitness {
    pub vertex_map: Vec<usize>,
    pub induced: bool,
}

impl SubgraphWitness {
    /// Checks injectivity, edge preservation and, if induced, non-edge preservation.
    pub fn validate(&self, h: &Graph, g: &Graph) -> bool {
        let n = h.vertex_count();
        if self.vertex_map.len() != n || self.vertex_map.iter().any(|&x| x >= g.vertex_count()) {
            return false;
        }
        let mut seen = 0u64;
        for &x in &self.vertex_map {
            if seen & bit(x) != 0 {
                return false;
            }
            seen |= bit(x);
        }
        for a in 0..n {
            for b in a + 1..n {
                let (ea, eg) = (h.has_edge(a, b), g.has_edge(self.vertex_map[a], self.vertex_map[b]));
                if ea && !eg || self.induced && !ea && eg {
                    return false;
                }
            }
        }
        true
    }
}

/// Order in which pattern vertices are matched: each next vertex has the most already-placed
/// neighbours, ties broken by degree and then index.
fn match_order(h: &Graph) -> Vec<usize> {
    let n = h.vertex_count();
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| ((h.row(v) & placed).count_ones(), h.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        order.push(next);
        placed |= bit(next);
    }
    order
}

struct SubgraphSearch<'a> {
    g: &'a Graph,
    induced: bool,
    order: Vec<usize>,
    earlier_adj: Vec<Vec<usize>>,
    earlier_non: Vec<Vec<usize>>,
    allowed: Vec<u64>,
    images: Vec<usize>,
}

impl SubgraphSearch<'_> {
    fn extend(&mut self, pos: usize, used: u64) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let mut cand = self.allowed[pos] & !used;
        for &q in &self.earlier_adj[pos] {
            cand &= self.g.row(self.images[q]);
        }
        if self.induced {
            for &q in &self.earlier_non[pos] {
                cand &= !self.g.row(self.images[q]);
            }
        }
        for x in bits(cand) {
            self.images[pos] = x;
            if self.extend(pos + 1, used | bit(x)) {
                return true;
            }
        }
        false
    }
}

/// First embedding of `h` into `g` in the deterministic backtracking order.
///
/// Isolated vertices in `h` are allowed; for non-induced search they match any unused vertex.
pub fn find_subgraph(h: &Graph, g: &Graph, induced: bool) -> Option<SubgraphWitness> {
    let (nh, ng) = (h.vertex_count(), g.vertex_count());
    if nh > ng || h.edge_count() > g.edge_count() {
        return None;
    }
    let order = match_order(h);
    let mut pos_of = vec![0; nh];
    for (p, &v) in order.iter().enumerate() {
        pos_of[v] = p;
    }
    let gdeg = g.degrees();
    let hdeg = h.degrees();
    let earlier_adj: Vec<Vec<usize>> =
        order.iter().enumerate().map(|(p, &v)| h.neighbors(v).map(|u| pos_of[u]).filter(|&q| q < p).collect()).collect();
    let earlier_non: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(p, &v)| (0..p).filter(|&q| !h.has_edge(v, order[q])).collect())
        .collect();
    let allowed: Vec<u64> = order
        .iter()
        .map(|&v| {
            let need = hdeg[v];
            (0..ng).filter(|&x| gdeg[x] >= need).fold(0u64, |acc, x| acc | bit(x))
        })
        .collect();
    if allowed.contains(&0) {
        return None;
    }
    let mut s = SubgraphSearch { g, induced, order, earlier_adj, earlier_non, allowed, images: vec![0; nh] };
    if !s.extend(0, 0) {
        return None;
    }
    let mut vertex_map = vec![0; nh];
    for (p, &v) in s.order.iter().enumerate() {
        vertex_map[v] = s.images[p];
    }
    Some(SubgraphWitness { vertex_map, induced })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    #[test]
    fn relabelled_triangle_same_form() {
        let a = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let b = Graph::from_edges(4, &[(3, 1), (1, 0), (0, 3)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn triangle_and_star_differ() {
        let c3 = cycle(3);
        let s3 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&c3), canonical_form(&s3));
        assert!(!is_isomorphic(&c3, &s3));
    }

    #[test]
    fn five_cycle_is_its_own_jump() {
        let c5 = cycle(5);
        let j = c5.jump().unwrap();
        assert_eq!(canonical_form(&c5), canonical_form(&j));
        let map = find_isomorphism(&c5, &j).unwrap();
        assert!(is_isomorphism(&c5, &j, &map));
    }

    #[test]
    fn empty_graphs() {
        assert!(is_isomorphic(&Graph::empty(), &Graph::empty()));
        assert_eq!(canonical_form(&Graph::empty()).as_str(), "?");
    }

    #[test]
    fn canonical_graph_round_trips() {
        let p = petersen();
        let cf = canonical_form(&p);
        assert!(is_isomorphic(&cf.to_graph(), &p));
        let shuffled = p.permuted(&[3, 7, 1, 9, 0, 4, 8, 2, 6, 5]);
        assert_eq!(canonical_form(&shuffled), cf);
    }

    #[test]
    fn regular_non_isomorphic_pair() {
        // C6 versus two triangles: both 2-regular on 6 vertices
        let c6 = cycle(6);
        let two = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!is_isomorphic(&c6, &two));
        assert_ne!(canonical_form(&c6), canonical_form(&two));
        // 3-prism versus K_{3,3}
        let prism = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
        let k33 = Graph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
        assert!(!is_isomorphic(&prism, &k33));
        assert_ne!(canonical_form(&prism), canonical_form(&k33));
    }

    #[test]
    fn subgraph_examples() {
        let w = find_subgraph(&cycle(5), &petersen(), false).unwrap();
        assert!(w.validate(&cycle(5), &petersen()));
        let c4_chord = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(find_subgraph(&cycle(5), &c4_chord, false).is_none());
        // C4 is a subgraph of K4 but not an induced one
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(find_subgraph(&cycle(4), &k4, false).is_some());
        assert!(find_subgraph(&cycle(4), &k4, true).is_none());
    }

    #[test]
    fn witness_validation_rejects_bad_maps() {
        let c5 = cycle(5);
        let bad = SubgraphWitness { vertex_map: vec![0, 1, 2, 3, 3], induced: false };
        assert!(!bad.validate(&c5, &c5));
        let swapped = SubgraphWitness { vertex_map: vec![0, 2, 1, 3, 4], induced: false };
        assert!(!swapped.validate(&c5, &c5));
        let id = SubgraphWitness { vertex_map: vec![0, 1, 2, 3, 4], induced: true };
        assert!(id.validate(&c5, &c5));
    }

    #[test]
    fn induced_search_with_isolated_pattern_vertex() {
        // triangle plus isolated vertex inside a triangle with a pendant: no induced copy
        let k3k1 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert!(find_subgraph(&k3k1, &paw, true).is_none());
        assert!(find_subgraph(&k3k1, &paw, false).is_some());
        let target = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let w = find_subgraph(&k3k1, &target, true).unwrap();
        assert!(w.validate(&k3k1, &target));
    }
}
