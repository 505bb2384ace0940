//! Simple undirected graphs with stable vertex identifiers.
//!
//! A [`Graph`] is a value: every structural operation returns a new graph and
//! leaves the receiver untouched. Vertex identifiers are assigned at creation
//! and never reused, so identifiers recorded against one graph remain
//! meaningful for all graphs derived from it by deletion or contraction.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Opaque, totally ordered vertex identifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub type VertexSet = BTreeSet<VertexId>;

/// An edge between two distinct vertices.
///
/// Membership tests treat the edge as unordered. As a contraction directive
/// `(a, b)` means `a` is kept and `b` is absorbed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub a: VertexId,
    pub b: VertexId,
}

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Result<Self> {
        if a == b {
            return invalid(format!("loop at vertex {a}"));
        }
        Ok(Edge { a, b })
    }

    /// The same edge with endpoints in increasing order.
    pub fn normalized(self) -> Self {
        if self.a <= self.b {
            self
        } else {
            Edge {
                a: self.b,
                b: self.a,
            }
        }
    }

    pub fn reversed(self) -> Self {
        Edge {
            a: self.b,
            b: self.a,
        }
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.a == v || self.b == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// Simple undirected graph.
#[derive(Clone, Debug, Default)]
pub struct Graph {
    adj: BTreeMap<VertexId, VertexSet>,
    next_id: u32,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on vertices `0..n` without edges.
    pub fn with_vertices(n: usize) -> Self {
        let mut g = Graph::new();
        for _ in 0..n {
            g.add_vertex();
        }
        g
    }

    /// Graph on vertices `0..n` with the given edges.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut g = Graph::with_vertices(n);
        for &(a, b) in edges {
            g.add_edge(VertexId(a), VertexId(b))?;
        }
        Ok(g)
    }

    /// Adds a fresh vertex whose id exceeds every id this graph has used.
    pub fn add_vertex(&mut self) -> VertexId {
        let v = VertexId(self.next_id);
        self.next_id += 1;
        self.adj.insert(v, VertexSet::new());
        v
    }

    /// Inserts a vertex with an explicit id. Fails if the id is present.
    pub fn insert_vertex(&mut self, v: VertexId) -> Result<()> {
        if self.adj.contains_key(&v) {
            return invalid(format!("vertex {v} already present"));
        }
        self.adj.insert(v, VertexSet::new());
        self.next_id = self.next_id.max(v.0 + 1);
        Ok(())
    }

    /// Adds edge `ab`. Loops and parallel edges are rejected.
    pub fn add_edge(&mut self, a: VertexId, b: VertexId) -> Result<()> {
        if a == b {
            return invalid(format!("loop at vertex {a}"));
        }
        self.require(a)?;
        self.require(b)?;
        if self.has_edge(a, b) {
            return invalid(format!("duplicate edge {a}-{b}"));
        }
        self.adj.get_mut(&a).unwrap().insert(b);
        self.adj.get_mut(&b).unwrap().insert(a);
        Ok(())
    }

    /// Adds `ab` unless it is already present.
    pub fn ensure_edge(&mut self, a: VertexId, b: VertexId) -> Result<bool> {
        if self.has_edge(a, b) {
            return Ok(false);
        }
        self.add_edge(a, b)?;
        Ok(true)
    }

    pub fn remove_edge(&mut self, a: VertexId, b: VertexId) -> Result<()> {
        if !self.has_edge(a, b) {
            return invalid(format!("{a}-{b} is not an edge"));
        }
        self.adj.get_mut(&a).unwrap().remove(&b);
        self.adj.get_mut(&b).unwrap().remove(&a);
        Ok(())
    }

    pub(crate) fn require(&self, v: VertexId) -> Result<()> {
        if self.adj.contains_key(&v) {
            Ok(())
        } else {
            invalid(format!("unknown vertex {v}"))
        }
    }

    pub(crate) fn require_all<'a>(&self, s: impl IntoIterator<Item = &'a VertexId>) -> Result<()> {
        s.into_iter().try_for_each(|&v| self.require(v))
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.adj.get(&a).is_some_and(|n| n.contains(&b))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    /// Vertices in increasing id order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    /// Edges as normalized pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().flat_map(|(&a, n)| {
            n.range(a..)
                .filter(move |&&b| b != a)
                .map(move |&b| Edge { a, b })
        })
    }

    /// Neighbors of `v`; empty for an unknown vertex.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.get(&v).into_iter().flatten().copied()
    }

    pub fn neighbor_set(&self, v: VertexId) -> Option<&VertexSet> {
        self.adj.get(&v)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).min().unwrap_or(0)
    }

    /// Neighborhood of a vertex set: vertices outside `s` adjacent to `s`.
    pub fn neighborhood(&self, s: &VertexSet) -> VertexSet {
        s.iter()
            .flat_map(|&v| self.neighbors(v))
            .filter(|w| !s.contains(w))
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adj.values().all(|nb| nb.len() + 1 == n)
    }

    /// True when `s` induces a complete graph.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter()
            .all(|&a| s.iter().all(|&b| a == b || self.has_edge(a, b)))
    }

    /// `G[s]`: vertices `s` and every edge of `self` with both ends in `s`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        self.require_all(s)?;
        let adj = s
            .iter()
            .map(|&v| {
                let nb = self.adj[&v]
                    .iter()
                    .filter(|w| s.contains(w))
                    .copied()
                    .collect();
                (v, nb)
            })
            .collect();
        Ok(Graph {
            adj,
            next_id: self.next_id,
        })
    }

    /// `G - s`.
    pub fn delete_vertices(&self, s: &VertexSet) -> Result<Graph> {
        self.require_all(s)?;
        let keep = self.vertices().filter(|v| !s.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// `G/xy`: remove `y` and join `x` to every former neighbor of `y`.
    ///
    /// The surviving vertex is always `x`; no merged vertex is created.
    pub fn contract_edge(&self, x: VertexId, y: VertexId) -> Result<Graph> {
        if !self.has_edge(x, y) {
            return invalid(format!("{x}-{y} is not an edge"));
        }
        let mut g = self.clone();
        let ny = g.adj.remove(&y).unwrap();
        for z in ny {
            let nz = g.adj.get_mut(&z).unwrap();
            nz.remove(&y);
            if z != x {
                nz.insert(x);
                g.adj.get_mut(&x).unwrap().insert(z);
            }
        }
        Ok(g)
    }

    /// Vertex sets of the connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let comp = self.reachable(v, |_| true);
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        match self.vertices().next() {
            None => true,
            Some(v) => self.reachable(v, |_| true).len() == self.vertex_count(),
        }
    }

    /// Vertices reachable from `start` through vertices accepted by `allowed`.
    /// `start` itself is always included.
    pub fn reachable(&self, start: VertexId, allowed: impl Fn(VertexId) -> bool) -> VertexSet {
        let mut seen = VertexSet::new();
        if !self.has_vertex(start) {
            return seen;
        }
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if allowed(w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Shortest path from `from` to the nearest vertex of `targets`, moving
    /// only through vertices accepted by `allowed` (targets must be allowed
    /// too). Among shortest paths the lexicographically least vertex sequence
    /// is returned.
    pub fn shortest_path(
        &self,
        from: VertexId,
        targets: &VertexSet,
        allowed: impl Fn(VertexId) -> bool,
    ) -> Option<Vec<VertexId>> {
        if !self.has_vertex(from) {
            return None;
        }
        let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        let mut queue = VecDeque::from([from]);
        let mut seen = VertexSet::from([from]);
        while let Some(v) = queue.pop_front() {
            if targets.contains(&v) {
                let mut path = vec![v];
                let mut cur = v;
                while let Some(&p) = parent.get(&cur) {
                    path.push(p);
                    cur = p;
                }
                path.reverse();
                return Some(path);
            }
            for w in self.neighbors(v) {
                if allowed(w) && seen.insert(w) {
                    parent.insert(w, v);
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// True when `path` is a sequence of distinct vertices joined by edges.
    pub fn is_path(&self, path: &[VertexId]) -> bool {
        let distinct: VertexSet = path.iter().copied().collect();
        !path.is_empty()
            && distinct.len() == path.len()
            && path.iter().all(|&v| self.has_vertex(v))
            && path.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }

    /// True when `cycle` lists at least three distinct vertices forming a
    /// cycle (closing edge implied).
    pub fn is_cycle(&self, cycle: &[VertexId]) -> bool {
        cycle.len() >= 3 && self.is_path(cycle) && self.has_edge(cycle[0], cycle[cycle.len() - 1])
    }

    /// True when every vertex and edge of `self` belongs to `other`.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.vertices().all(|v| other.has_vertex(v))
            && self.edges().all(|e| other.has_edge(e.a, e.b))
    }

    /// Spanning subgraph on the given vertices with exactly the given edges.
    pub fn from_parts(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Graph> {
        let mut g = Graph::new();
        for v in vertices {
            if !g.has_vertex(v) {
                g.insert_vertex(v)?;
            }
        }
        for e in edges {
            for v in [e.a, e.b] {
                if !g.has_vertex(v) {
                    g.insert_vertex(v)?;
                }
            }
            g.add_edge(e.a, e.b)?;
        }
        Ok(g)
    }

    /// Subgraph of `self` formed by the vertices and edges of a walk.
    pub fn path_subgraph(path: &[VertexId], closed: bool) -> Result<Graph> {
        let mut edges: Vec<Edge> = path
            .windows(2)
            .map(|w| Edge::new(w[0], w[1]))
            .collect::<Result<_>>()?;
        if closed && path.len() >= 3 {
            edges.push(Edge::new(path[path.len() - 1], path[0])?);
        }
        Graph::from_parts(path.iter().copied(), edges)
    }
}

/// Complete graph on `0..n`.
pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::with_vertices(n);
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            g.add_edge(VertexId(a), VertexId(b)).unwrap();
        }
    }
    g
}

/// Cycle `0-1-...-(n-1)-0`.
pub fn cycle_graph(n: usize) -> Graph {
    let mut g = Graph::with_vertices(n);
    for i in 0..n as u32 {
        g.ensure_edge(VertexId(i), VertexId((i + 1) % n as u32))
            .unwrap();
    }
    g
}

/// Path `0-1-...-(n-1)`.
pub fn path_graph(n: usize) -> Graph {
    let mut g = Graph::with_vertices(n);
    for i in 1..n as u32 {
        g.add_edge(VertexId(i - 1), VertexId(i)).unwrap();
    }
    g
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::with_vertices(a + b);
    for i in 0..a as u32 {
        for j in a as u32..(a + b) as u32 {
            g.add_edge(VertexId(i), VertexId(j)).unwrap();
        }
    }
    g
}

pub fn vset(ids: impl IntoIterator<Item = u32>) -> VertexSet {
    ids.into_iter().map(VertexId).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    #[test]
    fn induced_triangle_pair_is_single_edge() {
        let g = complete_graph(3);
        let h = g.induced_subgraph(&vset([0, 1])).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(
            h.edges().collect::<Vec<_>>(),
            vec![Edge { a: v(0), b: v(1) }]
        );
        assert_eq!(g.induced_subgraph(&g.vertex_set()).unwrap(), g);
    }

    #[test]
    fn induced_rejects_unknown_vertex() {
        let g = complete_graph(3);
        assert!(g.induced_subgraph(&vset([0, 7])).is_err());
        assert!(g.delete_vertices(&vset([9])).is_err());
    }

    #[test]
    fn contraction_examples() {
        // path a-b-c, contract (a,b)
        let p = path_graph(3);
        let c = p.contract_edge(v(0), v(1)).unwrap();
        assert_eq!(
            c.edges().collect::<Vec<_>>(),
            vec![Edge { a: v(0), b: v(2) }]
        );

        // triangle: no loop, no multi-edge
        let t = complete_graph(3).contract_edge(v(0), v(1)).unwrap();
        assert_eq!(t.vertex_count(), 2);
        assert_eq!(t.edge_count(), 1);

        // C4 a-b-c-d, contract (a,b) gives triangle a,c,d
        let c4 = cycle_graph(4).contract_edge(v(0), v(1)).unwrap();
        assert_eq!(
            c4,
            complete_graph(4)
                .induced_subgraph(&vset([0, 2, 3]))
                .unwrap()
        );
    }

    #[test]
    fn contraction_keeps_first_endpoint() {
        let g = path_graph(3);
        let c = g.contract_edge(v(1), v(0)).unwrap();
        assert!(c.has_vertex(v(1)) && !c.has_vertex(v(0)));
        assert!(g.contract_edge(v(0), v(2)).is_err());
    }

    #[test]
    fn components_examples() {
        let g = Graph::with_vertices(2);
        assert_eq!(g.components(), vec![vset([0]), vset([1])]);
        assert_eq!(complete_graph(4).components(), vec![vset([0, 1, 2, 3])]);

        let mut k3k2 = complete_graph(3);
        let a = k3k2.add_vertex();
        let b = k3k2.add_vertex();
        k3k2.add_edge(a, b).unwrap();
        let sizes: Vec<_> = k3k2.components().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![3, 2]);
    }

    #[test]
    fn delete_examples() {
        let k4 = complete_graph(4);
        assert_eq!(k4.delete_vertices(&vset([3])).unwrap(), complete_graph(3));
        assert_eq!(k4.delete_vertices(&VertexSet::new()).unwrap(), k4);
    }

    #[test]
    fn ids_are_never_reused() {
        let g = complete_graph(3);
        let mut h = g.delete_vertices(&vset([2])).unwrap();
        let fresh = h.add_vertex();
        assert_eq!(fresh, v(3));
    }

    #[test]
    fn parser_style_rejections() {
        let mut g = Graph::with_vertices(2);
        assert!(g.add_edge(v(0), v(0)).is_err());
        g.add_edge(v(0), v(1)).unwrap();
        assert!(g.add_edge(v(1), v(0)).is_err());
    }

    #[test]
    fn shortest_path_is_lexicographic() {
        // square 0-1-3, 0-2-3: both length 2, pick via 1
        let g = Graph::from_edges(4, &[(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
        let p = g.shortest_path(v(0), &vset([3]), |_| true).unwrap();
        assert_eq!(p, vec![v(0), v(1), v(3)]);
        let q = g.shortest_path(v(0), &vset([3]), |w| w != v(1)).unwrap();
        assert_eq!(q, vec![v(0), v(2), v(3)]);
    }
}
