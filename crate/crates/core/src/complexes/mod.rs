//! Abstract simplicial complexes and fundamental sets, with the purely
//! combinatorial predicates relating them.
//!
//! Vertices are named `1..=n`. A complex is stored by its facets only; other
//! faces are enumerated on demand.

mod fundamental;
mod simplicial;

pub use fundamental::{FundamentalSet, MinimalityDefect, ReplacementGraph, SubstituteViolation};
pub use simplicial::{PseudomanifoldDefect, SimplicialComplex};

use std::collections::BTreeSet;

/// A finite set of vertex labels.
pub type VertexSet = BTreeSet<usize>;

/// Convenience constructor: `vset(&[1, 2])`.
pub fn vset(vertices: &[usize]) -> VertexSet {
    vertices.iter().copied().collect()
}

/// `{1,2,3}`.
pub fn fmt_set(s: &VertexSet) -> String {
    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}
