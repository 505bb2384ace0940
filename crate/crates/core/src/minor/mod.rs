//! Rooted minors: certificates, safe contractions and topological minors.

mod certificate;
mod engine;
mod topological;

pub use certificate::{Certificate, ContractionTrace, Violation};
pub use engine::{
    find_safe_contraction, four_connected_x_minor, kappa_drop_witness, SafeContraction,
};
pub use topological::{topological_x_minor, SubdivisionEmbedding, TopologicalOrder};

use crate::connectivity::RootedGraph;
use crate::error::{invalid, Result};
use crate::graph::VertexId;

/// Whether contracting `(x, y)` keeps every root, i.e. `y` is not a root.
pub fn is_x_legal(rg: &RootedGraph, x: VertexId, y: VertexId) -> Result<bool> {
    if !rg.graph().has_edge(x, y) {
        return invalid(format!("{x}{y} is not an edge"));
    }
    Ok(!rg.is_root(y))
}
