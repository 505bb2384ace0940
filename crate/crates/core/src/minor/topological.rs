//! Topological rooted minors of connectivity at most three.

use std::collections::BTreeMap;

use crate::connectivity::{
    clique_completion_reduce, is_k_connected, kappa_at_least, kappa_x, min_separator, x_fragments,
    Fragment, RootedGraph,
};
use crate::error::{invalid, Error, Result};
use crate::graph::{Edge, Graph, VertexId, VertexSet};

use super::Certificate;

/// Connectivity targets for which topological rooted minors always exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TopologicalOrder {
    One = 1,
    Two = 2,
    Three = 3,
}

impl TopologicalOrder {
    pub fn value(self) -> usize {
        self as usize
    }
}

impl TryFrom<usize> for TopologicalOrder {
    type Error = Error;

    fn try_from(k: usize) -> Result<Self> {
        match k {
            1 => Ok(TopologicalOrder::One),
            2 => Ok(TopologicalOrder::Two),
            3 => Ok(TopologicalOrder::Three),
            _ => invalid(format!(
                "topological rooted minors are only guaranteed for k <= 3, got {k}"
            )),
        }
    }
}

/// A subdivision of `minor` inside a host graph fixing every minor vertex.
///
/// `path_map` sends each normalized minor edge `ab` to a host path from `a`
/// to `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionEmbedding {
    pub minor: Graph,
    pub path_map: BTreeMap<Edge, Vec<VertexId>>,
}

impl SubdivisionEmbedding {
    /// Identity embedding of `g` into itself.
    pub fn identity(g: &Graph) -> Self {
        SubdivisionEmbedding {
            minor: g.clone(),
            path_map: g.edges().map(|e| (e, vec![e.a, e.b])).collect(),
        }
    }

    /// Checks that every path is a host path between the right branch
    /// vertices and that paths are internally disjoint from each other and
    /// from all branch vertices.
    pub fn verify(&self, host: &Graph) -> Result<(), String> {
        for v in self.minor.vertices() {
            if !host.has_vertex(v) {
                return Err(format!("branch vertex {v} is not a host vertex"));
            }
        }
        let mut inner_owner: BTreeMap<VertexId, Edge> = BTreeMap::new();
        for e in self.minor.edges() {
            let path = self
                .path_map
                .get(&e)
                .ok_or_else(|| format!("minor edge {e} has no path"))?;
            if path.first() != Some(&e.a) || path.last() != Some(&e.b) || path.len() < 2 {
                return Err(format!("path of {e} does not join its ends"));
            }
            if !host.is_path(path) {
                return Err(format!("path of {e} is not a host path"));
            }
            for &w in &path[1..path.len() - 1] {
                if self.minor.has_vertex(w) {
                    return Err(format!("path of {e} passes branch vertex {w}"));
                }
                if let Some(other) = inner_owner.insert(w, e) {
                    return Err(format!("paths of {other} and {e} share {w}"));
                }
            }
        }
        if self.path_map.len() != self.minor.edge_count() {
            return Err("path map has entries for non-edges".into());
        }
        Ok(())
    }

    /// The subdivided copy of the minor inside the host.
    pub fn image(&self) -> Graph {
        let mut g = Graph::new();
        for v in self.minor.vertices() {
            g.insert_vertex(v).unwrap();
        }
        for path in self.path_map.values() {
            for w in path.windows(2) {
                for &v in w {
                    if !g.has_vertex(v) {
                        g.insert_vertex(v).unwrap();
                    }
                }
                let _ = g.ensure_edge(w[0], w[1]);
            }
        }
        g
    }

    /// Certificate obtained by contracting each path onto its first end.
    pub fn to_certificate(&self, host: &Graph, roots: &VertexSet) -> Certificate {
        let mut bags: BTreeMap<VertexId, VertexSet> = self
            .minor
            .vertices()
            .map(|v| (v, VertexSet::from([v])))
            .collect();
        for (e, path) in &self.path_map {
            if path.len() > 2 {
                bags.get_mut(&e.a)
                    .unwrap()
                    .extend(path[1..path.len() - 1].iter().copied());
            }
        }
        Certificate {
            host: host.clone(),
            roots: roots.clone(),
            minor: self.minor.clone(),
            bags,
        }
    }
}

struct Reduction {
    before: Graph,
    fragment: VertexSet,
}

/// A `k`-connected topological rooted minor of a graph with `kappa_x >= k`.
///
/// While the root component is not `k`-connected, its root-free side behind
/// a minimum separator is deleted and the separator completed to a clique.
/// On the way back every completion edge used by the subdivision is replaced
/// by a shortest path through the deleted side.
pub fn topological_x_minor(
    rg: &RootedGraph,
    k: TopologicalOrder,
) -> Result<(Graph, SubdivisionEmbedding)> {
    let k = k.value();
    if !kappa_at_least(rg, k) {
        return Err(Error::Precondition(format!(
            "kappa_x = {} < {k}",
            kappa_x(rg)
        )));
    }
    let component = rg
        .root_component()
        .ok_or_else(|| Error::Construction("roots span several components".into()))?;
    let mut current = rg.with_graph(rg.graph().induced_subgraph(&component)?)?;
    let mut reductions = Vec::new();
    while !is_k_connected(current.graph(), k) {
        let sep = min_separator(current.graph()).ok_or_else(|| {
            Error::Construction("complete graph below target connectivity".into())
        })?;
        let free: Vec<Fragment> = x_fragments(&current, &sep)?
            .into_iter()
            .filter(|f| !f.rooted)
            .collect();
        if free.is_empty() {
            return Err(Error::Construction(format!(
                "separator of size {} splits the roots",
                sep.len()
            )));
        }
        let fragment = Fragment::union(&free)?;
        let reduced = clique_completion_reduce(&current, &fragment)?;
        reductions.push(Reduction {
            before: current.graph().clone(),
            fragment: fragment.vertices,
        });
        current = reduced;
    }

    let minor = current.graph().clone();
    let mut embedding = SubdivisionEmbedding::identity(&minor);
    for red in reductions.iter().rev() {
        for path in embedding.path_map.values_mut() {
            *path = expand_path(path, red)?;
        }
    }
    Ok((minor, embedding))
}

fn expand_path(path: &[VertexId], red: &Reduction) -> Result<Vec<VertexId>> {
    let mut out = vec![path[0]];
    for w in path.windows(2) {
        let (a, b) = (w[0], w[1]);
        if !red.before.has_edge(a, b) {
            let target = VertexSet::from([b]);
            let detour = red
                .before
                .shortest_path(a, &target, |v| v == b || red.fragment.contains(&v))
                .ok_or_else(|| {
                    Error::Construction(format!("no detour for completion edge {a}-{b}"))
                })?;
            out.extend_from_slice(&detour[1..]);
        } else {
            out.push(b);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, path_graph, vset};

    #[test]
    fn order_rejects_four() {
        assert!(TopologicalOrder::try_from(4).is_err());
        assert!(TopologicalOrder::try_from(0).is_err());
        assert_eq!(
            TopologicalOrder::try_from(3).unwrap(),
            TopologicalOrder::Three
        );
    }

    #[test]
    fn k1_returns_root_component() {
        let mut g = path_graph(4);
        g.add_vertex();
        let rg = RootedGraph::new(g, vset([0, 3])).unwrap();
        let (m, emb) = topological_x_minor(&rg, TopologicalOrder::One).unwrap();
        assert_eq!(m, path_graph(4));
        assert_eq!(emb, SubdivisionEmbedding::identity(&path_graph(4)));
    }

    #[test]
    fn cycle_is_its_own_2_connected_minor() {
        let rg = RootedGraph::new(cycle_graph(6), vset([0, 2, 4])).unwrap();
        let (m, emb) = topological_x_minor(&rg, TopologicalOrder::Two).unwrap();
        assert_eq!(m, cycle_graph(6));
        assert!(emb.verify(rg.graph()).is_ok());
    }

    #[test]
    fn precondition_checked() {
        let rg = RootedGraph::new(cycle_graph(6), vset([0, 2, 4])).unwrap();
        assert!(matches!(
            topological_x_minor(&rg, TopologicalOrder::Three),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn completion_edge_is_replaced_by_detour() {
        // K4 on {0,1,2,3} minus edge 0-1, with the path 0-4-5-1 closing it
        let g = Graph::from_edges(
            6,
            &[
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 4),
                (4, 5),
                (5, 1),
            ],
        )
        .unwrap();
        let rg = RootedGraph::new(g.clone(), vset([0, 1, 2, 3])).unwrap();
        let (m, emb) = topological_x_minor(&rg, TopologicalOrder::Three).unwrap();
        assert_eq!(m.vertex_set(), vset([0, 1, 2, 3]));
        assert_eq!(m.edge_count(), 6);
        let e = Edge {
            a: VertexId(0),
            b: VertexId(1),
        };
        assert_eq!(
            emb.path_map[&e],
            vec![VertexId(0), VertexId(4), VertexId(5), VertexId(1)]
        );
        assert!(emb.verify(&g).is_ok());
        let cert = emb.to_certificate(&g, rg.roots());
        assert_eq!(cert.verify(), Ok(()));
    }
}
