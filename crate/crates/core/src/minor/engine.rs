//! Safe contractions and 4-connected rooted minors.

use crate::connectivity::{
    is_k_connected, kappa_at_least, kappa_x, min_vertex_cut, RootedGraph, Separator, SplitNetwork,
};
use crate::error::{invalid, Error, Result};
use crate::graph::{Edge, Graph, VertexId, VertexSet};

use super::{is_x_legal, Certificate, ContractionTrace};

/// Outcome of [`find_safe_contraction`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SafeContraction {
    /// Contracting `(kept, absorbed)` keeps `kappa_x >= 4`.
    Contract(Edge),
    AlreadyFourConnected,
}

/// A minimum X-separator of size `kappa_x` containing both `v` and `y`.
///
/// Such a separator exists exactly when contracting `vy` lowers `kappa_x`
/// (by one).
pub fn kappa_drop_witness(rg: &RootedGraph, v: VertexId, y: VertexId) -> Result<Option<Separator>> {
    if !is_x_legal(rg, v, y)? {
        return invalid(format!("edge ({v},{y}) absorbs a root"));
    }
    let kappa = kappa_x(rg);
    if kappa < 2 {
        return Ok(None);
    }
    let both = VertexSet::from([v, y]);
    let rest = rg.graph().delete_vertices(&both)?;
    let mut net = SplitNetwork::new(&rest);
    for (a, b) in rg.nonadjacent_root_pairs() {
        if both.contains(&a) || both.contains(&b) {
            continue;
        }
        if net.max_flow(a, b, kappa - 1) <= kappa - 2 {
            let mut vertices = min_vertex_cut(&rest, a, b)?;
            vertices.extend(both);
            return Ok(Some(Separator {
                vertices,
                witnesses: (a, b),
            }));
        }
    }
    Ok(None)
}

/// An X-legal edge whose contraction keeps `kappa_x >= 4`, or the tag
/// [`SafeContraction::AlreadyFourConnected`].
///
/// Candidates `(v, y)` are scanned in lexicographic order and the first one
/// that keeps `kappa_x >= 4` is returned.
pub fn find_safe_contraction(rg: &RootedGraph) -> Result<SafeContraction> {
    if !rg.graph().is_connected() {
        return invalid("graph is disconnected");
    }
    if !kappa_at_least(rg, 4) {
        return Err(Error::Precondition(format!(
            "kappa_x = {} < 4",
            kappa_x(rg)
        )));
    }
    safe_contraction_unchecked(rg)
}

fn safe_contraction_unchecked(rg: &RootedGraph) -> Result<SafeContraction> {
    let g = rg.graph();
    if is_k_connected(g, 4) {
        return Ok(SafeContraction::AlreadyFourConnected);
    }
    for v in g.vertices() {
        for y in g.neighbors(v) {
            if rg.is_root(y) {
                continue;
            }
            let contracted = rg.with_graph(g.contract_edge(v, y)?)?;
            if kappa_at_least(&contracted, 4) {
                return Ok(SafeContraction::Contract(Edge { a: v, b: y }));
            }
        }
    }
    Err(Error::Construction(
        "no safe contraction exists although the graph is not 4-connected".into(),
    ))
}

/// Certified 4-connected rooted minor of a graph with `kappa_x >= 4`.
///
/// The graph is first restricted to the component holding every root; safe
/// contractions are then applied until the graph is 4-connected. Bags follow
/// the trace: an absorbed vertex's bag merges into its keeper's bag.
pub fn four_connected_x_minor(rg: &RootedGraph) -> Result<(Certificate, ContractionTrace)> {
    if !kappa_at_least(rg, 4) {
        return Err(Error::Precondition(format!(
            "kappa_x = {} < 4",
            kappa_x(rg)
        )));
    }
    let component = rg
        .root_component()
        .ok_or_else(|| Error::Construction("roots span several components".into()))?;
    let initial: Graph = rg.graph().induced_subgraph(&component)?;
    let mut current = rg.with_graph(initial.clone())?;
    let mut steps = Vec::new();
    while let SafeContraction::Contract(e) = safe_contraction_unchecked(&current)? {
        current = current.with_graph(current.graph().contract_edge(e.a, e.b)?)?;
        steps.push(e);
    }
    let trace = ContractionTrace {
        initial,
        steps,
        final_graph: current.graph().clone(),
    };
    let cert = Certificate {
        host: rg.graph().clone(),
        roots: rg.roots().clone(),
        minor: trace.final_graph.clone(),
        bags: trace.bags(),
    };
    Ok((cert, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, vset};

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    #[test]
    fn drop_witness_double_hub() {
        // x1,x2,x3 = 0,1,2 each adjacent to v=3 and y=4; vy an edge.
        let g = Graph::from_edges(5, &[(0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])
            .unwrap();
        let rg = RootedGraph::new(g.clone(), vset([0, 1, 2])).unwrap();
        assert_eq!(kappa_x(&rg), 2);
        let sep = kappa_drop_witness(&rg, v(3), v(4)).unwrap().unwrap();
        assert_eq!(sep.vertices, vset([3, 4]));
        let after = rg.with_graph(g.contract_edge(v(3), v(4)).unwrap()).unwrap();
        assert_eq!(kappa_x(&after), 1);
    }

    #[test]
    fn drop_witness_pendant_leaf() {
        // K4 on roots 0..3 minus edge 0-1 plus pendant unrooted leaf 4 on 2
        let mut g = complete_graph(4);
        g.remove_edge(v(0), v(1)).unwrap();
        let leaf = g.add_vertex();
        g.add_edge(v(2), leaf).unwrap();
        let rg = RootedGraph::new(g, vset([0, 1, 2, 3])).unwrap();
        assert_eq!(kappa_drop_witness(&rg, v(2), leaf).unwrap(), None);
    }

    #[test]
    fn drop_witness_rejects_illegal_edges() {
        let rg = RootedGraph::spanning(complete_graph(5)).unwrap();
        assert!(kappa_drop_witness(&rg, v(0), v(1)).is_err());
        assert!(kappa_drop_witness(&rg, v(0), v(0)).is_err());
    }

    #[test]
    fn safe_contraction_on_complete_graphs() {
        let rg = RootedGraph::spanning(complete_graph(5)).unwrap();
        assert_eq!(
            find_safe_contraction(&rg).unwrap(),
            SafeContraction::AlreadyFourConnected
        );
        let mut g = complete_graph(6);
        for (a, b) in [(0, 1), (2, 3), (4, 5)] {
            g.remove_edge(v(a), v(b)).unwrap();
        }
        let rg = RootedGraph::spanning(g).unwrap();
        assert_eq!(
            find_safe_contraction(&rg).unwrap(),
            SafeContraction::AlreadyFourConnected
        );
    }

    #[test]
    fn safe_contraction_preconditions() {
        let rg = RootedGraph::spanning(complete_graph(4)).unwrap();
        assert!(matches!(
            find_safe_contraction(&rg),
            Err(Error::Precondition(_))
        ));
        let mut g = complete_graph(5);
        g.add_vertex();
        let rg = RootedGraph::new(g, vset([0, 1, 2, 3, 4])).unwrap();
        assert!(matches!(
            find_safe_contraction(&rg),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn k5_is_a_fixed_point() {
        let rg = RootedGraph::spanning(complete_graph(5)).unwrap();
        let (cert, trace) = four_connected_x_minor(&rg).unwrap();
        assert_eq!(cert.minor, complete_graph(5));
        assert!(trace.steps.is_empty());
        assert!(cert.bags.values().all(|b| b.len() == 1));
        assert_eq!(cert.verify(), Ok(()));
    }

    #[test]
    fn k5_with_pendant_path_contracts_to_k5() {
        let mut g = complete_graph(5);
        let a = g.add_vertex();
        let b = g.add_vertex();
        g.add_edge(v(0), a).unwrap();
        g.add_edge(a, b).unwrap();
        let rg = RootedGraph::new(g, vset([0, 1, 2, 3, 4])).unwrap();
        let (cert, trace) = four_connected_x_minor(&rg).unwrap();
        assert_eq!(cert.minor, complete_graph(5));
        assert_eq!(trace.steps.len(), 2);
        assert!(trace.is_sound(&cert.roots));
        assert_eq!(cert.verify(), Ok(()));
    }
}
