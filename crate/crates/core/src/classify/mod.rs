//! End behaviour of the jump sequence `G, J(G), J(J(G)), ...`.
//!
//! Every graph either reaches the empty graph, is one of the two fixed points `C5` and
//! the net `N`, or eventually contains one of them as a subgraph. [`classify`] decides
//! which by iterating and returns a checkable certificate for the outcome.

mod membership;

use std::fmt;

use thiserror::Error;

use crate::families;
use crate::graph::{bit, Graph, MAX_VERTICES};
use crate::iso::{find_isomorphism, find_subgraph, is_isomorphic, SubgraphWitness};
use crate::snipped::{find_snipped, NamedTag};

pub use membership::{catalog_membership, dissipating_nodes, CatalogEntry, DissipatingNode};

pub const DEFAULT_MAX_K: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    C5,
    Net,
}

impl Target {
    pub const BOTH: [Target; 2] = [Target::C5, Target::Net];

    pub fn graph(self) -> Graph {
        match self {
            Target::C5 => families::cycle(5),
            Target::Net => families::net(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Target::C5 => "C5",
            Target::Net => "N",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceStep {
    pub k: usize,
    pub vertices: usize,
    pub edges: usize,
}

/// `target` embeds in the `k`-th iterate via `witness`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Accumulation {
    pub k: usize,
    pub target: Target,
    pub witness: SubgraphWitness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Dissipates { d: usize },
    Converges { fixed_point: Target },
    Diverges(Accumulation),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub trace: Vec<TraceStep>,
}

impl Classification {
    pub fn d_value(&self) -> Option<usize> {
        match self.verdict {
            Verdict::Dissipates { d } => Some(d),
            _ => None,
        }
    }

    pub fn fixed_point(&self) -> Option<Target> {
        match self.verdict {
            Verdict::Converges { fixed_point } => Some(fixed_point),
            _ => None,
        }
    }

    pub fn accumulation(&self) -> Option<&Accumulation> {
        match &self.verdict {
            Verdict::Diverges(a) => Some(a),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    StepLimit,
    /// The iterate `k` would have `vertices` vertices.
    VertexLimit { k: usize, vertices: usize },
}

impl fmt::Display for StopReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StopReason::StepLimit => f.write_str("step limit reached"),
            StopReason::VertexLimit { k, vertices } => {
                write!(f, "iterate {k} would have {vertices} vertices")
            }
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("unresolved with max_k = {max_k}: {reason}")]
    Unresolved {
        max_k: usize,
        reason: StopReason,
        trace: Vec<TraceStep>,
        /// A divergent certificate graph found snipped in the last iterate, if any.
        snipped_hint: Option<NamedTag>,
    },
    #[error("iterate {k} would have {vertices} vertices, beyond the limit of {limit}")]
    IterateTooLarge { k: usize, vertices: usize, limit: usize },
    #[error("max_k must be at least 1")]
    InvalidMaxK,
    #[error("vertex limit {0} is outside 1..=64")]
    InvalidVertexLimit(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_k: usize,
    pub vertex_limit: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_k: DEFAULT_MAX_K, vertex_limit: MAX_VERTICES }
    }
}

impl Limits {
    pub fn with_max_k(max_k: usize) -> Self {
        Limits { max_k, ..Limits::default() }
    }

    fn check(&self) -> Result<(), ClassifyError> {
        if self.max_k == 0 {
            return Err(ClassifyError::InvalidMaxK);
        }
        if self.vertex_limit == 0 || self.vertex_limit > MAX_VERTICES {
            return Err(ClassifyError::InvalidVertexLimit(self.vertex_limit));
        }
        Ok(())
    }
}

fn step(k: usize, g: &Graph) -> TraceStep {
    TraceStep { k, vertices: g.vertex_count(), edges: g.edge_count() }
}

/// Classifies with the default vertex limit.
pub fn classify(g: &Graph, max_k: usize) -> Result<Classification, ClassifyError> {
    classify_with(g, &Limits::with_max_k(max_k))
}

/// Iterates the jump operator until the sequence empties or `C5`/`N` shows up.
///
/// When the next iterate would exceed the vertex limit, a snipped copy of `C5` or `N`
/// in the current iterate still certifies a subgraph one step later.
pub fn classify_with(g: &Graph, limits: &Limits) -> Result<Classification, ClassifyError> {
    limits.check()?;
    let stripped = g.strip_isolated();
    for t in Target::BOTH {
        if is_isomorphic(&stripped, &t.graph()) {
            return Ok(Classification { verdict: Verdict::Converges { fixed_point: t }, trace: vec![step(0, g)] });
        }
    }
    let mut trace = Vec::new();
    let mut cur = g.clone();
    for k in 0..=limits.max_k {
        trace.push(step(k, &cur));
        if cur.is_empty() {
            return Ok(Classification { verdict: Verdict::Dissipates { d: k }, trace });
        }
        for t in Target::BOTH {
            if let Some(witness) = find_subgraph(&t.graph(), &cur, false) {
                let acc = Accumulation { k, target: t, witness };
                return Ok(Classification { verdict: Verdict::Diverges(acc), trace });
            }
        }
        if k == limits.max_k {
            break;
        }
        let m = cur.edge_count();
        if m > limits.vertex_limit {
            for t in Target::BOTH {
                if let Some(witness) = snipped_accumulation(&t.graph(), &cur) {
                    trace.push(TraceStep { k: k + 1, vertices: m, edges: cur.edge_count_of_jump() });
                    let acc = Accumulation { k: k + 1, target: t, witness };
                    return Ok(Classification { verdict: Verdict::Diverges(acc), trace });
                }
            }
            let snipped_hint = NamedTag::ALL.into_iter().find(|tag| find_snipped(&tag.graph(), &cur).is_some());
            return Err(ClassifyError::Unresolved {
                max_k: limits.max_k,
                reason: StopReason::VertexLimit { k: k + 1, vertices: m },
                trace,
                snipped_hint,
            });
        }
        cur = cur.jump().expect("edge count checked against the limit");
    }
    Err(ClassifyError::Unresolved { max_k: limits.max_k, reason: StopReason::StepLimit, trace, snipped_hint: None })
}

/// Embeds `t` into `J(g)` from a snipped copy of `t` in `g`, using `J(t) = t`.
fn snipped_accumulation(t: &Graph, g: &Graph) -> Option<SubgraphWitness> {
    let sw = find_snipped(t, g)?;
    let to_edges = find_isomorphism(t, &t.jump().ok()?)?;
    let vertex_map = to_edges.iter().map(|&e| sw.edge_map[e].0).collect();
    Some(SubgraphWitness { vertex_map, induced: false })
}

/// Re-checks an accumulation certificate from scratch.
///
/// If the `k`-th iterate is too large to build, the check runs on the `(k-1)`-th: the
/// witness then names its edges, and target edges must land on disjoint edge pairs.
pub fn validate_accumulation(g: &Graph, acc: &Accumulation) -> bool {
    let t = acc.target.graph();
    let mut cur = g.clone();
    for _ in 1..acc.k {
        match cur.jump() {
            Ok(next) => cur = next,
            Err(_) => return false,
        }
    }
    if acc.k == 0 {
        return acc.witness.validate(&t, &cur);
    }
    if let Ok(last) = cur.jump() {
        return acc.witness.validate(&t, &last);
    }
    let edges = cur.edges();
    let map = &acc.witness.vertex_map;
    if map.len() != t.vertex_count() || map.iter().any(|&x| x >= edges.len()) {
        return false;
    }
    let mut sorted = map.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != map.len() {
        return false;
    }
    t.edges().iter().all(|&(a, b)| {
        let ((p, q), (r, s)) = (edges[map[a]], edges[map[b]]);
        (bit(p) | bit(q)) & (bit(r) | bit(s)) == 0
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dissipation {
    Finite(usize),
    DidNotDissipate,
}

/// The least `k` with an empty `k`-th iterate, searched up to `max_k`.
///
/// Stops early with `DidNotDissipate` once an iterate contains `C5` or `N`, since every
/// later iterate then does too.
pub fn dissipation_number(g: &Graph, max_k: usize) -> Result<Dissipation, ClassifyError> {
    if max_k == 0 {
        return Err(ClassifyError::InvalidMaxK);
    }
    let mut cur = g.clone();
    for k in 0..=max_k {
        if cur.is_empty() {
            return Ok(Dissipation::Finite(k));
        }
        if k == max_k || Target::BOTH.iter().any(|t| find_subgraph(&t.graph(), &cur, false).is_some()) {
            break;
        }
        cur = cur.jump().map_err(|_| ClassifyError::IterateTooLarge {
            k: k + 1,
            vertices: cur.edge_count(),
            limit: MAX_VERTICES,
        })?;
    }
    Ok(Dissipation::DidNotDissipate)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrowthStep {
    pub k: usize,
    pub edges: usize,
    /// `edges` minus the previous step's edge count.
    pub delta: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthReport {
    pub steps: Vec<GrowthStep>,
    /// The sequence stopped before `k_max` because iterates outgrew the vertex limit.
    pub truncated: bool,
}

fn choose2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

/// Edge counts of the iterates up to `k_max`.
///
/// Edge counts run one level past the last buildable iterate via the degree formula.
pub fn growth_check(g: &Graph, k_max: usize) -> GrowthReport {
    let mut steps = vec![GrowthStep { k: 0, edges: g.edge_count(), delta: None }];
    let push = |steps: &mut Vec<GrowthStep>, k: usize, edges: usize| {
        let prev = steps.last().map_or(0, |s| s.edges);
        steps.push(GrowthStep { k, edges, delta: Some(edges as i64 - prev as i64) });
    };
    let mut cur = g.clone();
    let mut truncated = false;
    for k in 1..=k_max {
        if k >= 2 {
            match cur.jump() {
                Ok(next) => cur = next,
                Err(_) => {
                    let degs = cur.jump_degrees();
                    let m = degs.iter().sum::<usize>() / 2;
                    let e = choose2(m) - degs.iter().map(|&d| choose2(d)).sum::<usize>();
                    push(&mut steps, k, e);
                    truncated = k < k_max;
                    break;
                }
            }
        }
        push(&mut steps, k, cur.edge_count_of_jump());
    }
    GrowthReport { steps, truncated }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Periodicity {
    pub period: Option<usize>,
    pub truncated: bool,
}

/// Smallest `1 <= k <= k_max` with the `k`-th iterate isomorphic to `g`, isolated vertices ignored.
///
/// Past the last buildable iterate, edge counts alone can still rule out one more level.
pub fn find_periodic(g: &Graph, k_max: usize) -> Periodicity {
    let target = g.strip_isolated();
    let none = Periodicity { period: None, truncated: false };
    if target.is_empty() {
        return none;
    }
    let want = target.edge_count();
    let mut cur = g.clone();
    for k in 1..=k_max {
        match cur.jump() {
            Ok(next) => {
                cur = next;
                let s = cur.strip_isolated();
                if s.vertex_count() == target.vertex_count() && s.edge_count() == want && is_isomorphic(&s, &target) {
                    return Periodicity { period: Some(k), truncated: false };
                }
            }
            Err(_) => {
                let degs = cur.jump_degrees();
                let m_k = degs.iter().sum::<usize>() / 2;
                if m_k == want {
                    return Periodicity { period: None, truncated: true };
                }
                if k == k_max {
                    return none;
                }
                let m_next = choose2(m_k) - degs.iter().map(|&d| choose2(d)).sum::<usize>();
                if m_next == want {
                    return Periodicity { period: None, truncated: true };
                }
                return Periodicity { period: None, truncated: k + 1 < k_max };
            }
        }
    }
    none
}
