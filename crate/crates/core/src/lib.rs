//! Rooted minors and locally spanning structures.
//!
//! The crate computes the local connectivity `kappa_x` of a root set `X` in a
//! graph `G`, extracts highly connected minors of `G` that keep every root
//! alive (contracting only edges whose absorbed endpoint is not a root), and
//! lifts paths, cycles and bounded-degree trees found in such minors back to
//! `G`. Exhaustive oracles and generators of the extremal families back the
//! test suite.

pub mod connectivity;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod lifting;
pub mod minor;
pub mod oracles;
pub mod pipeline;

pub use connectivity::{kappa_x, RootedGraph, Separator};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, VertexId, VertexSet};
