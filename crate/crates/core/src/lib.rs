//! Jump graphs and the long-run behaviour of iterating them.
//!
//! The jump graph `J(G)` has one vertex per edge of `G`, two of them adjacent when the
//! edges share no endpoint; it is the complement of the line graph. Iterating `J`
//! either reaches the empty graph, sits at one of the fixed points `C5` and the net,
//! or grows without bound.

pub mod catalog;
pub mod classify;
pub mod dot;
pub mod families;
pub mod format;
pub mod graph;
pub mod iso;
pub mod preimage;
pub mod snipped;
pub mod verify;

pub use classify::{
    catalog_membership, classify, classify_with, dissipation_number, find_periodic, growth_check, Classification,
    ClassifyError, Dissipation, Limits, Target, Verdict,
};
pub use format::{from_graph6, parse_graph, to_graph6, FormatError, TextFormat};
pub use graph::{Diameter, Edge, EdgeId, Graph, GraphError, MAX_VERTICES};
pub use iso::{canonical_form, find_subgraph, is_isomorphic, CanonicalForm, SubgraphWitness};
pub use snipped::{find_snipped, verify_snipped, NamedGraph, NamedTag, SnippedWitness};
