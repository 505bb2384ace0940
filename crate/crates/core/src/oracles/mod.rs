//! Exhaustive, size-guarded ground truth for the fast algorithms.
//!
//! Every search refuses inputs above its guard with
//! [`Error::ResourceLimit`](crate::Error::ResourceLimit) instead of running
//! unbounded.

mod bridges;
mod kappa;
mod minor;
mod spanning;

pub use bridges::{
    bridges, find_tutte_path_brute, is_tutte_path, tutte_paths_brute, Bridge, BridgeDecomposition,
};
pub use kappa::{
    is_k_connected_brute, kappa_x_brute, min_separating_set_brute, min_x_separators_brute,
};
pub use minor::has_minor_brute;
pub use spanning::{
    exists_x_spanning_cycle, exists_x_spanning_path, exists_x_spanning_tree,
    two_connected_bounded_subgraph,
};

pub use crate::connectivity::is_k_connected;

use crate::error::{Error, Result};

/// Vertex limit of the κ and spanning-structure oracles.
pub const SEARCH_LIMIT: usize = 14;
/// Vertex limit of the Tutte-path and minor oracles.
pub const PATH_LIMIT: usize = 12;
/// Vertex limit of minor patterns.
pub const PATTERN_LIMIT: usize = 6;

pub(crate) fn guard(n: usize, limit: usize, what: &str) -> Result<()> {
    if n > limit {
        return Err(Error::ResourceLimit(format!(
            "{what} has {n} vertices, oracle limit is {limit}"
        )));
    }
    Ok(())
}
