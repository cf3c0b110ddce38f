//! Exhaustive checks of the structural facts about jump graphs over a graph catalog.
//!
//! Each check is a predicate applied to every catalog graph in its scope, plus an
//! optional catalog-wide part. Failures carry the graph6 string of the offending input,
//! and [`replay`] reruns the per-graph predicate on it.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::{self, Write};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::catalog::{GraphCatalog, MAX_GENERATED_EDGES};
use crate::classify::{
    catalog_membership, classify, find_periodic, growth_check, validate_accumulation, ClassifyError, Target, Verdict,
};
use crate::families::{
    bowtie, complete, cycle, diamond, net, spider, star, triangle_with_pendants, with_pendants, c5_chord,
};
use crate::format::{from_graph6, to_graph6, FormatError};
use crate::graph::{Diameter, Edge, Graph};
use crate::iso::{canonical_form, find_subgraph, is_isomorphic, CanonicalForm, SubgraphWitness};
use crate::preimage::{normalize, PreimageIndex};
use crate::snipped::{find_snipped, verify_snipped, NamedTag};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("the catalog is empty")]
    EmptyCatalog,
    #[error("max_k must be at least 1")]
    InvalidMaxK,
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
    #[error(transparent)]
    Format(#[from] FormatError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    V1,
    V2,
    V3,
    V4,
    V5,
    V6,
    V7,
    V8,
    V9,
    V10,
}

impl CheckId {
    pub const ALL: [CheckId; 10] = [
        CheckId::V1,
        CheckId::V2,
        CheckId::V3,
        CheckId::V4,
        CheckId::V5,
        CheckId::V6,
        CheckId::V7,
        CheckId::V8,
        CheckId::V9,
        CheckId::V10,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::V1 => "V1",
            CheckId::V2 => "V2",
            CheckId::V3 => "V3",
            CheckId::V4 => "V4",
            CheckId::V5 => "V5",
            CheckId::V6 => "V6",
            CheckId::V7 => "V7",
            CheckId::V8 => "V8",
            CheckId::V9 => "V9",
            CheckId::V10 => "V10",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<CheckId, VerifyError> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| VerifyError::UnknownCheck(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Failure {
    pub graph6: String,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub tested: usize,
    pub failures: Vec<Failure>,
    /// Classifications that ran out of steps or vertices; not counterexamples.
    pub unresolved: usize,
    /// In scope but beyond what the check can compute.
    pub skipped: usize,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.tested += other.tested;
        self.failures.extend(other.failures);
        self.unresolved += other.unresolved;
        self.skipped += other.skipped;
        self
    }

    fn check(&mut self, g: &Graph, ok: bool, detail: impl FnOnce() -> String) {
        self.tested += 1;
        if !ok {
            self.failures.push(Failure { graph6: to_graph6(g), detail: detail() });
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Dissipates(usize),
    Converges,
    Diverges,
    Unresolved,
}

/// Shared state for one verification run: classifications are cached by isomorphism class.
pub struct Context {
    max_k: usize,
    outcomes: Mutex<HashMap<CanonicalForm, Outcome>>,
    index_bound: usize,
    index: OnceLock<PreimageIndex>,
}

impl Context {
    pub fn new(max_k: usize, index_bound: usize) -> Context {
        Context {
            max_k,
            outcomes: Mutex::new(HashMap::new()),
            index_bound: index_bound.min(MAX_GENERATED_EDGES),
            index: OnceLock::new(),
        }
    }

    fn outcome(&self, g: &Graph) -> Outcome {
        let key = canonical_form(&normalize(g));
        if let Some(&o) = self.outcomes.lock().unwrap().get(&key) {
            return o;
        }
        let o = match classify(g, self.max_k) {
            Ok(c) => match c.verdict {
                Verdict::Dissipates { d } => Outcome::Dissipates(d),
                Verdict::Converges { .. } => Outcome::Converges,
                Verdict::Diverges(_) => Outcome::Diverges,
            },
            Err(_) => Outcome::Unresolved,
        };
        self.outcomes.lock().unwrap().insert(key, o);
        o
    }

    fn index(&self) -> &PreimageIndex {
        self.index.get_or_init(|| PreimageIndex::build(self.index_bound).expect("bound within the generator limit"))
    }
}

pub struct Check {
    pub id: CheckId,
    pub statement: &'static str,
    pub scope: &'static str,
    applies: fn(&Graph) -> bool,
    per_graph: fn(&Context, &Graph, &mut Tally),
    global: Option<fn(&Context, &GraphCatalog, &mut Tally)>,
}

pub fn checks() -> Vec<Check> {
    vec![
        Check {
            id: CheckId::V1,
            statement: "J(G) equals the complement of L(G), a pairwise construction, and the edge-count formula",
            scope: "every graph",
            applies: |_| true,
            per_graph: jump_identities,
            global: None,
        },
        Check {
            id: CheckId::V2,
            statement: "deleting an edge or a vertex of G leaves J of the result induced in J(G)",
            scope: "every graph with an edge",
            applies: |g| g.edge_count() > 0,
            per_graph: induced_preservation,
            global: None,
        },
        Check {
            id: CheckId::V3,
            statement: "every quotient of G or of G minus an edge is snipped in G and its jump graph embeds in J(G)",
            scope: "every graph with an edge",
            applies: |g| g.edge_count() > 0,
            per_graph: snipped_preservation,
            global: None,
        },
        Check {
            id: CheckId::V4,
            statement: "for d-finite G every snipped H has d(H) <= d(G); a divergent certificate snipped in G rules out dissipation",
            scope: "every graph",
            applies: |_| true,
            per_graph: d_monotone,
            global: None,
        },
        Check {
            id: CheckId::V5,
            statement: "J(G) = G only for C5 and N, and no other graph returns to itself after 2 or 3 jumps",
            scope: "graphs with an edge",
            applies: |g| g.edge_count() > 0,
            per_graph: fixed_points,
            global: None,
        },
        Check {
            id: CheckId::V6,
            statement: "each graph dissipates, is a fixed point or accumulates a fixed point, with a valid certificate",
            scope: "every graph",
            applies: |_| true,
            per_graph: trichotomy,
            global: None,
        },
        Check {
            id: CheckId::V7,
            statement: "diameter decides finiteness: >= 5 never, 4 iff <= 5 edges, 3 always up to 5 edges and then via the six-edge census and spiders, 2 via the listed graphs, 1 iff at most 4 vertices",
            scope: "connected graphs with an edge, isolated vertices ignored; class counts need a catalog complete to n >= 6",
            applies: |g| {
                let s = g.strip_isolated();
                s.edge_count() > 0 && s.is_connected()
            },
            per_graph: diameter_rules,
            global: Some(diameter_census),
        },
        Check {
            id: CheckId::V8,
            statement: "a strict C5 supergraph does not lose edges under J, a strict N supergraph gains one, and known growth sequences increase",
            scope: "graphs with C5 or N as a strict subgraph, plus fixed growth instances",
            applies: |g| g.edge_count() > 5,
            per_graph: growth_bounds,
            global: Some(growth_instances),
        },
        Check {
            id: CheckId::V9,
            statement: "a disconnected graph without isolated vertices has a connected jump graph",
            scope: "disconnected graphs without isolated vertices",
            applies: |g| !g.has_isolated() && !g.is_connected(),
            per_graph: disconnected_jump,
            global: None,
        },
        Check {
            id: CheckId::V10,
            statement: "connected graphs with isomorphic jump graphs are isomorphic, except K3 and K1,3",
            scope: "connected graphs without isolated vertices",
            applies: |g| !g.has_isolated() && g.edge_count() > 0 && g.is_connected(),
            per_graph: whitney,
            global: Some(whitney_groups),
        },
    ]
}

fn choose2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

fn jump_identities(_: &Context, g: &Graph, t: &mut Tally) {
    let (Ok(j), Ok(l)) = (g.jump(), g.line_graph()) else {
        t.skipped += 1;
        return;
    };
    let edges = g.edges();
    let m = edges.len();
    let mut naive = Graph::new(m).expect("edge count checked by jump");
    for i in 0..m {
        for k in i + 1..m {
            let (a, b) = edges[i];
            let (c, d) = edges[k];
            if a != c && a != d && b != c && b != d {
                naive.add_edge(i, k).unwrap();
            }
        }
    }
    let closed = choose2(m) - g.degrees().iter().map(|&d| choose2(d)).sum::<usize>();
    t.check(g, j == l.complement(), || "J(G) differs from the complement of L(G)".into());
    t.check(g, j == naive, || "J(G) differs from the pairwise construction".into());
    t.check(g, j.vertex_count() == m, || format!("J(G) has {} vertices for {m} edges", j.vertex_count()));
    t.check(g, j.edge_count() == closed && g.edge_count_of_jump() == closed, || {
        format!("J(G) has {} edges, formula gives {closed}", j.edge_count())
    });
    t.check(g, j.degrees() == g.jump_degrees(), || "jump degree formula disagrees".into());
    t.check(g, g.strip_isolated().jump().ok() == Some(j), || "isolated vertices change J(G)".into());
}

fn induced_preservation(_: &Context, g: &Graph, t: &mut Tally) {
    let Ok(jg) = g.jump() else {
        t.skipped += 1;
        return;
    };
    let edges = g.edges();
    for (i, &(u, v)) in edges.iter().enumerate() {
        let h = g.without_edge(u, v);
        let map: Vec<usize> = (0..edges.len()).filter(|&x| x != i).collect();
        let w = SubgraphWitness { vertex_map: map, induced: true };
        t.check(g, w.validate(&h.jump().unwrap(), &jg), || format!("J(G - {u}{v}) not induced"));
    }
    for x in 0..g.vertex_count() {
        let h = g.without_vertex(x);
        let lift = |a: usize| if a >= x { a + 1 } else { a };
        let map: Vec<usize> =
            h.edges().iter().map(|&(a, b)| g.edge_id(lift(a), lift(b)).expect("edge survives").0).collect();
        let w = SubgraphWitness { vertex_map: map, induced: true };
        t.check(g, w.validate(&h.jump().unwrap(), &jg), || format!("J(G - vertex {x}) not induced"));
    }
}

fn snipped_preservation(_: &Context, g: &Graph, t: &mut Tally) {
    let Ok(jg) = g.jump() else {
        t.skipped += 1;
        return;
    };
    let n = g.vertex_count();
    let mut quotients: Vec<(String, Graph)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            quotients.push((format!("G with {u} and {v} glued"), g.merge_vertices(u, v)));
        }
    }
    for (u, v) in g.edges() {
        quotients.push((format!("G - {u}{v}"), g.without_edge(u, v)));
    }
    for (what, h) in quotients {
        let h = h.strip_isolated();
        if h.edge_count() == 0 {
            continue;
        }
        let Some(w) = find_snipped(&h, g) else {
            t.check(g, false, || format!("{what} not found snipped"));
            continue;
        };
        t.check(g, verify_snipped(&w, &h, g), || format!("invalid snipped witness for {what}"));
        let sw = SubgraphWitness { vertex_map: w.edge_map.iter().map(|e| e.0).collect(), induced: false };
        t.check(g, sw.validate(&h.jump().unwrap(), &jg), || format!("J({what}) not a subgraph of J(G)"));
    }
}

fn d_monotone(ctx: &Context, g: &Graph, t: &mut Tally) {
    let og = ctx.outcome(g);
    if og == Outcome::Unresolved {
        t.unresolved += 1;
        return;
    }
    for tag in NamedTag::ALL {
        let hit = find_snipped(&tag.graph(), g).is_some();
        t.check(g, !(hit && matches!(og, Outcome::Dissipates(_))), || format!("{tag} snipped in a dissipating graph"));
    }
    let Outcome::Dissipates(d) = og else { return };
    let n = g.vertex_count();
    let mut smaller: Vec<(String, Graph)> = Vec::new();
    for (u, v) in g.edges() {
        smaller.push((format!("G - {u}{v}"), g.without_edge(u, v)));
    }
    for x in 0..n {
        smaller.push((format!("G - vertex {x}"), g.without_vertex(x)));
    }
    for u in 0..n {
        for v in u + 1..n {
            smaller.push((format!("G with {u} and {v} glued"), g.merge_vertices(u, v)));
        }
    }
    for (what, h) in smaller {
        match ctx.outcome(&h) {
            Outcome::Unresolved => t.unresolved += 1,
            Outcome::Dissipates(dh) => t.check(g, dh <= d, || format!("d({what}) = {dh} > d(G) = {d}")),
            other => t.check(g, false, || format!("{what} is {other:?} inside a dissipating graph")),
        }
    }
}

fn fixed_points(_: &Context, g: &Graph, t: &mut Tally) {
    let s = g.strip_isolated();
    let fixed = Target::BOTH.iter().any(|x| is_isomorphic(&s, &x.graph()));
    let Ok(j) = g.jump() else {
        t.skipped += 1;
        return;
    };
    t.check(g, is_isomorphic(&j.strip_isolated(), &s) == fixed, || {
        if fixed {
            "fixed point not reproduced".into()
        } else {
            "J(G) = G for a graph other than C5 and N".into()
        }
    });
    let p = find_periodic(g, 3);
    if fixed {
        t.check(g, p.period == Some(1), || format!("period {:?} for a fixed point", p.period));
    } else if p.truncated {
        t.unresolved += 1;
    } else {
        t.check(g, p.period.is_none(), || format!("J^k(G) = G with k = {:?}", p.period));
    }
}

fn trichotomy(ctx: &Context, g: &Graph, t: &mut Tally) {
    let c = match classify(g, ctx.max_k) {
        Ok(c) => c,
        Err(ClassifyError::Unresolved { .. }) => {
            t.unresolved += 1;
            return;
        }
        Err(e) => {
            t.check(g, false, || format!("classification error: {e}"));
            return;
        }
    };
    let member = catalog_membership(g);
    match &c.verdict {
        Verdict::Dissipates { d } => {
            let mut cur = g.clone();
            let mut last_nonempty = true;
            for _ in 0..*d {
                last_nonempty = !cur.is_empty();
                cur = cur.jump().expect("dissipating iterates stay small");
            }
            t.check(g, cur.is_empty() && last_nonempty, || format!("J^{d}(G) is not the first empty iterate"));
            t.check(g, member.as_ref().map(|m| m.d) == Some(*d), || {
                format!("dissipates with d = {d}, catalog says {:?}", member.as_ref().map(|m| m.d))
            });
        }
        Verdict::Converges { fixed_point } => {
            t.check(g, is_isomorphic(&g.strip_isolated(), &fixed_point.graph()), || "bad fixed point".into());
            t.check(g, member.is_none(), || "fixed point listed as dissipating".into());
        }
        Verdict::Diverges(acc) => {
            t.check(g, validate_accumulation(g, acc), || format!("invalid accumulation witness at k = {}", acc.k));
            t.check(g, member.is_none(), || "divergent graph listed as dissipating".into());
        }
    }
}

/// Connected graphs with diameter 3 and 6 edges; the first four dissipate.
const DIAMETER_THREE_SIX_EDGES: [(usize, [Edge; 6]); 11] = [
    (7, [(0, 1), (1, 2), (1, 4), (1, 5), (1, 6), (2, 3)]),
    (6, [(0, 1), (0, 4), (1, 2), (1, 4), (1, 5), (2, 3)]),
    (6, [(0, 1), (1, 2), (1, 4), (1, 5), (2, 3), (2, 4)]),
    (5, [(0, 1), (0, 4), (1, 2), (1, 4), (2, 3), (2, 4)]),
    (7, [(0, 1), (1, 2), (1, 4), (1, 5), (2, 3), (2, 6)]),
    (6, [(0, 1), (0, 4), (1, 2), (2, 3), (2, 4), (2, 5)]),
    (6, [(0, 1), (0, 4), (1, 2), (1, 4), (2, 3), (2, 5)]),
    (6, [(0, 1), (0, 4), (1, 2), (1, 5), (2, 3), (2, 4)]),
    (6, [(0, 1), (1, 2), (1, 4), (2, 3), (2, 4), (4, 5)]),
    (6, [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4), (4, 5)]),
    (6, [(0, 1), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5)]),
];

fn six_edge_census() -> &'static Vec<CanonicalForm> {
    static CENSUS: OnceLock<Vec<CanonicalForm>> = OnceLock::new();
    CENSUS.get_or_init(|| {
        DIAMETER_THREE_SIX_EDGES.iter().map(|(n, es)| canonical_form(&Graph::from_edges(*n, es).unwrap())).collect()
    })
}

/// The dissipating graphs of diameter 2: `C4`, the bowtie, the diamond with or without a
/// pendant at a degree-3 vertex, stars with at least two leaves, and triangles with
/// pendants at one corner.
pub fn diameter_two_dissipating(g: &Graph) -> bool {
    let m = g.edge_count();
    let fixed = [cycle(4), bowtie(), diamond(), with_pendants(&diamond(), 0, 1)];
    fixed.iter().any(|x| is_isomorphic(x, g))
        || (m >= 2 && is_isomorphic(&star(m), g))
        || (m >= 4 && is_isomorphic(&triangle_with_pendants(m - 3), g))
}

fn expected_finite(s: &Graph, diam: usize) -> Result<Option<bool>, String> {
    let m = s.edge_count();
    Ok(match diam {
        d if d >= 5 => Some(false),
        4 => Some(m <= 5),
        3 if m >= 7 => Some(is_isomorphic(&spider(m - 2), s)),
        3 if m == 6 => {
            let key = canonical_form(s);
            match six_edge_census().iter().position(|c| *c == key) {
                Some(i) => Some(i < 4),
                None => return Err("diameter 3 with 6 edges but missing from the census".into()),
            }
        }
        3 => Some(true),
        2 => Some(diameter_two_dissipating(s)),
        1 => Some(s.vertex_count() <= 4),
        _ => None,
    })
}

fn diameter_rules(ctx: &Context, g: &Graph, t: &mut Tally) {
    let s = g.strip_isolated();
    let Ok(Diameter::Finite(diam)) = s.diameter() else {
        t.skipped += 1;
        return;
    };
    let want = match expected_finite(&s, diam) {
        Ok(Some(w)) => w,
        Ok(None) => {
            t.skipped += 1;
            return;
        }
        Err(detail) => {
            t.check(g, false, || detail);
            return;
        }
    };
    match ctx.outcome(&s) {
        Outcome::Unresolved => t.unresolved += 1,
        o => {
            let finite = matches!(o, Outcome::Dissipates(_));
            t.check(g, finite == want, || {
                format!("diameter {diam}, {} edges: expected finite = {want}, got {o:?}", s.edge_count())
            });
        }
    }
}

fn connected_classes(c: &GraphCatalog, diam: usize, m: usize) -> BTreeSet<CanonicalForm> {
    c.entries()
        .filter(|e| !e.graph.has_isolated() && e.graph.edge_count() == m && e.graph.is_connected())
        .filter(|e| e.graph.diameter().ok() == Some(Diameter::Finite(diam)))
        .map(|e| e.canonical.clone())
        .collect()
}

fn diameter_census(_: &Context, c: &GraphCatalog, t: &mut Tally) {
    let Some(n_max) = c.complete_up_to() else { return };
    if n_max >= 7 {
        let found = connected_classes(c, 3, 6);
        let want: BTreeSet<CanonicalForm> = six_edge_census().iter().cloned().collect();
        t.tested += 1;
        if found != want {
            for x in found.symmetric_difference(&want) {
                t.failures.push(Failure {
                    graph6: to_graph6(&x.to_graph()),
                    detail: "diameter-3 six-edge census mismatch".into(),
                });
            }
        }
    }
    if n_max >= 6 {
        for (diam, m, want) in [(4, 5, 2), (3, 4, 1), (3, 5, 5)] {
            let found = connected_classes(c, diam, m);
            t.tested += 1;
            if found.len() != want {
                t.failures.push(Failure {
                    graph6: to_graph6(&Graph::empty()),
                    detail: format!("{} connected graphs with diameter {diam} and {m} edges, expected {want}", found.len()),
                });
            }
        }
    }
}

fn growth_bounds(_: &Context, g: &Graph, t: &mut Tally) {
    let s = g.strip_isolated();
    let m = s.edge_count();
    let Ok(j) = s.jump() else {
        t.skipped += 1;
        return;
    };
    let mj = j.edge_count();
    let c5 = cycle(5);
    if m > 5 && find_subgraph(&c5, &s, false).is_some() {
        t.check(g, mj >= m, || format!("contains C5 but J has {mj} < {m} edges"));
    }
    if m > 6 && find_subgraph(&net(), &s, false).is_some() {
        t.check(g, mj > m, || format!("contains N but J has {mj} <= {m} edges"));
    }
}

fn growth_instances(_: &Context, _: &GraphCatalog, t: &mut Tally) {
    let instances = [
        (c5_chord(), 2, 2),
        (with_pendants(&net(), 0, 1), 1, 1),
        (with_pendants(&net(), 3, 1), 1, 1),
    ];
    for (g, from_k, min_delta) in instances {
        let r = growth_check(&g, 12);
        for s in r.steps.iter().filter(|s| s.k >= from_k) {
            let d = s.delta.unwrap_or(0);
            t.check(&g, d >= min_delta, || format!("edge delta {d} at k = {}", s.k));
        }
    }
}

fn disconnected_jump(_: &Context, g: &Graph, t: &mut Tally) {
    match g.jump() {
        Ok(j) => t.check(g, j.is_connected(), || "J(G) is disconnected".into()),
        Err(_) => t.skipped += 1,
    }
}

fn whitney(ctx: &Context, g: &Graph, t: &mut Tally) {
    let m = g.edge_count();
    if m > ctx.index_bound {
        t.skipped += 1;
        return;
    }
    let j = g.jump().expect("small graph");
    let pre: Vec<Graph> = ctx.index().preimages(&j).expect("within bound").into_iter().filter(Graph::is_connected).collect();
    let (k3, claw) = (complete(3), star(3));
    let exceptional = is_isomorphic(g, &k3) || is_isomorphic(g, &claw);
    let ok = if exceptional {
        pre.len() == 2 && pre.iter().any(|h| is_isomorphic(h, &k3)) && pre.iter().any(|h| is_isomorphic(h, &claw))
    } else {
        pre.len() == 1 && is_isomorphic(&pre[0], g)
    };
    t.check(g, ok, || format!("{} connected graphs share this jump graph", pre.len()));
}

fn whitney_groups(_: &Context, c: &GraphCatalog, t: &mut Tally) {
    let mut groups: BTreeMap<CanonicalForm, Vec<CanonicalForm>> = BTreeMap::new();
    for e in c.entries() {
        if !e.graph.has_isolated() && e.graph.edge_count() > 0 && e.graph.is_connected() {
            if let Ok(j) = e.graph.jump() {
                groups.entry(canonical_form(&j)).or_default().push(e.canonical.clone());
            }
        }
    }
    let pair: BTreeSet<CanonicalForm> = [canonical_form(&complete(3)), canonical_form(&star(3))].into();
    for members in groups.values() {
        t.tested += 1;
        if members.len() > 1 && members.iter().cloned().collect::<BTreeSet<_>>() != pair {
            t.failures.push(Failure {
                graph6: to_graph6(&members[0].to_graph()),
                detail: format!("{} connected graphs share a jump graph", members.len()),
            });
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub id: CheckId,
    pub statement: &'static str,
    pub scope: &'static str,
    pub tested: usize,
    /// Sorted by graph6, then detail.
    pub failures: Vec<Failure>,
    pub unresolved: usize,
    pub skipped: usize,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub catalog_size: usize,
    pub n_max: Option<usize>,
    pub max_k: usize,
    pub checks: Vec<CheckReport>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }

    pub fn failure_count(&self) -> usize {
        self.checks.iter().map(|c| c.failures.len()).sum()
    }

    pub fn check(&self, id: CheckId) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// `check_id<TAB>tested<TAB>failures<TAB>status`, one line per check.
    pub fn to_machine(&self) -> String {
        self.checks
            .iter()
            .map(|c| format!("{}\t{}\t{}\t{}\n", c.id, c.tested, c.failures.len(), c.status()))
            .collect()
    }

    /// Human-readable report; timings only when `timing` is set, so the default is reproducible.
    pub fn to_text(&self, timing: bool) -> String {
        let mut out = String::new();
        let bound = self.n_max.map_or("none".to_string(), |n| n.to_string());
        writeln!(out, "catalog: {} graphs, n <= {bound}; max_k = {}", self.catalog_size, self.max_k).unwrap();
        for c in &self.checks {
            write!(
                out,
                "{:<4} {}  tested {}  failures {}  unresolved {}  skipped {}",
                c.id.as_str(),
                c.status(),
                c.tested,
                c.failures.len(),
                c.unresolved,
                c.skipped
            )
            .unwrap();
            if timing {
                write!(out, "  {:.3}s", c.elapsed.as_secs_f64()).unwrap();
            }
            writeln!(out).unwrap();
            writeln!(out, "     {}", c.statement).unwrap();
            writeln!(out, "     scope: {}", c.scope).unwrap();
            for f in &c.failures {
                writeln!(out, "     counterexample {}: {}", f.graph6, f.detail).unwrap();
            }
        }
        writeln!(out, "overall: {}", if self.passed() { "PASS" } else { "FAIL" }).unwrap();
        out
    }
}

/// Runs every check over the catalog.
pub fn run_all(catalog: &GraphCatalog, max_k: usize) -> Result<VerificationReport, VerifyError> {
    run_checks(catalog, max_k, &CheckId::ALL)
}

pub fn run_checks(catalog: &GraphCatalog, max_k: usize, ids: &[CheckId]) -> Result<VerificationReport, VerifyError> {
    if catalog.is_empty() {
        return Err(VerifyError::EmptyCatalog);
    }
    if max_k == 0 {
        return Err(VerifyError::InvalidMaxK);
    }
    let graphs: Vec<&Graph> = catalog.entries().map(|e| &e.graph).collect();
    let max_edges = graphs.iter().map(|g| g.edge_count()).max().unwrap_or(0);
    let ctx = Context::new(max_k, max_edges);
    let mut reports = Vec::new();
    for check in checks().into_iter().filter(|c| ids.contains(&c.id)) {
        let start = Instant::now();
        let mut tally = graphs
            .par_iter()
            .filter(|g| (check.applies)(g))
            .map(|g| {
                let mut t = Tally::default();
                (check.per_graph)(&ctx, g, &mut t);
                t
            })
            .reduce(Tally::default, Tally::merge);
        if let Some(global) = check.global {
            global(&ctx, catalog, &mut tally);
        }
        tally.failures.sort();
        reports.push(CheckReport {
            id: check.id,
            statement: check.statement,
            scope: check.scope,
            tested: tally.tested,
            failures: tally.failures,
            unresolved: tally.unresolved,
            skipped: tally.skipped,
            elapsed: start.elapsed(),
        });
    }
    Ok(VerificationReport { catalog_size: catalog.len(), n_max: catalog.n_max(), max_k, checks: reports })
}

/// Reruns one check's per-graph predicate on a single graph6 input.
pub fn replay(id: CheckId, graph6: &str, max_k: usize) -> Result<Tally, VerifyError> {
    if max_k == 0 {
        return Err(VerifyError::InvalidMaxK);
    }
    let g = from_graph6(graph6)?;
    let check = checks().into_iter().find(|c| c.id == id).expect("every id has a check");
    let ctx = Context::new(max_k, g.edge_count());
    let mut t = Tally::default();
    if (check.applies)(&g) {
        (check.per_graph)(&ctx, &g, &mut t);
    } else {
        t.skipped += 1;
    }
    Ok(t)
}
