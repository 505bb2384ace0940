use itertools::Itertools;

use super::{guard, SEARCH_LIMIT};
use crate::connectivity::{is_x_separator, RootedGraph};
use crate::error::{invalid, Result};
use crate::graph::{Graph, VertexId, VertexSet};

fn subsets_of_size(pool: &[VertexId], size: usize) -> impl Iterator<Item = VertexSet> + '_ {
    pool.iter()
        .copied()
        .combinations(size)
        .map(|c| c.into_iter().collect())
}

/// `kappa_x` by enumerating vertex subsets in increasing size.
pub fn kappa_x_brute(rg: &RootedGraph) -> Result<usize> {
    let g = rg.graph();
    guard(g.vertex_count(), SEARCH_LIMIT, "graph")?;
    let cap = rg.roots().len() - 1;
    let pool: Vec<VertexId> = g.vertices().collect();
    for size in 0..cap {
        if subsets_of_size(&pool, size).any(|s| is_x_separator(rg, &s)) {
            return Ok(size);
        }
    }
    Ok(cap)
}

/// Every X-separator of minimum cardinality; empty when none exists.
pub fn min_x_separators_brute(rg: &RootedGraph) -> Result<Vec<VertexSet>> {
    let g = rg.graph();
    guard(g.vertex_count(), SEARCH_LIMIT, "graph")?;
    let pool: Vec<VertexId> = g.vertices().collect();
    for size in 0..pool.len() {
        let found: Vec<VertexSet> = subsets_of_size(&pool, size)
            .filter(|s| is_x_separator(rg, s))
            .collect();
        if !found.is_empty() {
            return Ok(found);
        }
    }
    Ok(Vec::new())
}

/// Smallest vertex set avoiding `a` and `b` whose removal disconnects them.
pub fn min_separating_set_brute(g: &Graph, a: VertexId, b: VertexId) -> Result<usize> {
    guard(g.vertex_count(), SEARCH_LIMIT, "graph")?;
    if a == b || g.has_edge(a, b) || !g.has_vertex(a) || !g.has_vertex(b) {
        return invalid(format!("{a} and {b} are not distinct nonadjacent vertices"));
    }
    let pool: Vec<VertexId> = g.vertices().filter(|&v| v != a && v != b).collect();
    for size in 0..=pool.len() {
        if subsets_of_size(&pool, size).any(|s| !g.reachable(a, |v| !s.contains(&v)).contains(&b)) {
            return Ok(size);
        }
    }
    unreachable!("removing every other vertex separates nonadjacent vertices")
}

/// k-connectivity straight from the definition: `|V| >= k + 1` and
/// `kappa_x(G, V(G)) >= k`.
pub fn is_k_connected_brute(g: &Graph, k: usize) -> Result<bool> {
    if g.vertex_count() < k + 1 {
        return Ok(false);
    }
    let rg = RootedGraph::spanning(g.clone())?;
    Ok(kappa_x_brute(&rg)? >= k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::kappa_x;
    use crate::graph::{complete_graph, cycle_graph, path_graph, vset};
    use crate::Error;

    #[test]
    fn small_values() {
        let rg = RootedGraph::spanning(complete_graph(5)).unwrap();
        assert_eq!(kappa_x_brute(&rg).unwrap(), 4);
        let rg = RootedGraph::new(path_graph(3), vset([0, 2])).unwrap();
        assert_eq!(kappa_x_brute(&rg).unwrap(), 1);
        let rg = RootedGraph::new(cycle_graph(6), vset([0, 2, 4])).unwrap();
        assert_eq!(kappa_x_brute(&rg).unwrap(), kappa_x(&rg));
    }

    #[test]
    fn separators_and_guard() {
        let rg = RootedGraph::new(path_graph(3), vset([0, 2])).unwrap();
        assert_eq!(min_x_separators_brute(&rg).unwrap(), vec![vset([1])]);
        assert_eq!(
            min_separating_set_brute(&cycle_graph(4), VertexId(0), VertexId(2)).unwrap(),
            2
        );
        let rg = RootedGraph::spanning(cycle_graph(15)).unwrap();
        assert!(matches!(kappa_x_brute(&rg), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn k_connectivity_by_definition() {
        assert!(is_k_connected_brute(&complete_graph(5), 4).unwrap());
        assert!(!is_k_connected_brute(&cycle_graph(5), 3).unwrap());
        assert!(is_k_connected_brute(&cycle_graph(5), 2).unwrap());
    }
}
