use super::{guard, PATH_LIMIT};
use crate::error::{invalid, Result};
use crate::graph::{Edge, Graph, VertexId, VertexSet};

/// A non-trivial bridge: a component of `G - V(H)` with its attachments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bridge {
    pub inner: VertexSet,
    pub attachments: VertexSet,
}

impl Bridge {
    /// Edges of the bridge: those with an endpoint among the inner vertices.
    pub fn edges(&self, g: &Graph) -> Vec<Edge> {
        g.edges()
            .filter(|e| self.inner.contains(&e.a) || self.inner.contains(&e.b))
            .collect()
    }

    pub fn vertices(&self) -> VertexSet {
        self.inner.union(&self.attachments).copied().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeDecomposition {
    pub host: Graph,
    pub anchor: Graph,
    pub bridges: Vec<Bridge>,
    /// Edges of `G - E(H)` with both ends in `H`.
    pub trivial_bridges: Vec<Edge>,
}

/// Bridges of the subgraph `h` in `g`.
pub fn bridges(g: &Graph, h: &Graph) -> Result<BridgeDecomposition> {
    if !h.is_subgraph_of(g) {
        return invalid("anchor is not a subgraph of the graph");
    }
    let rest = g.delete_vertices(&h.vertex_set())?;
    let bridges = rest
        .components()
        .into_iter()
        .map(|inner| {
            let attachments = g
                .neighborhood(&inner)
                .into_iter()
                .filter(|v| h.has_vertex(*v))
                .collect();
            Bridge { inner, attachments }
        })
        .collect();
    let trivial_bridges = g
        .edges()
        .filter(|e| h.has_vertex(e.a) && h.has_vertex(e.b) && !h.has_edge(e.a, e.b))
        .collect();
    Ok(BridgeDecomposition {
        host: g.clone(),
        anchor: h.clone(),
        bridges,
        trivial_bridges,
    })
}

/// Whether every bridge of the path `p` has at most three attachments and,
/// given an anchor, every bridge holding an anchor edge has exactly two.
pub fn is_tutte_path(g: &Graph, p: &[VertexId], anchor: Option<&Graph>) -> Result<bool> {
    if p.len() < 2 || !g.is_path(p) {
        return invalid("not a path of the graph on at least two vertices");
    }
    Ok(tutte_check(g, p, anchor))
}

fn tutte_check(g: &Graph, p: &[VertexId], anchor: Option<&Graph>) -> bool {
    let on_path: VertexSet = p.iter().copied().collect();
    let rest = g
        .delete_vertices(&on_path)
        .expect("path vertices belong to the graph");
    rest.components().into_iter().all(|inner| {
        let attachments = g.neighborhood(&inner).len();
        if attachments > 3 {
            return false;
        }
        match anchor {
            Some(h) if attachments != 2 => !inner
                .iter()
                .any(|&v| g.neighbors(v).any(|w| h.has_edge(v, w))),
            _ => true,
        }
    })
}

struct PathSearch<'a> {
    g: &'a Graph,
    z: VertexId,
    anchor: Option<&'a Graph>,
    must: Option<Edge>,
    path: Vec<VertexId>,
    on_path: VertexSet,
}

impl PathSearch<'_> {
    fn uses_must(&self) -> bool {
        self.must.is_none_or(|e| {
            self.path
                .windows(2)
                .any(|w| (w[0] == e.a && w[1] == e.b) || (w[0] == e.b && w[1] == e.a))
        })
    }

    fn must_still_possible(&self) -> bool {
        let Some(e) = self.must else { return true };
        if self.uses_must() {
            return true;
        }
        let end = *self.path.last().unwrap();
        let interior = |v: VertexId| self.on_path.contains(&v) && v != end;
        !interior(e.a) && !interior(e.b)
    }

    /// Calls `visit` on every qualifying path; stops when it returns true.
    fn run(&mut self, visit: &mut dyn FnMut(&[VertexId]) -> bool) -> bool {
        let end = *self.path.last().unwrap();
        if end == self.z {
            return self.uses_must()
                && tutte_check(self.g, &self.path, self.anchor)
                && visit(&self.path);
        }
        if !self.must_still_possible() {
            return false;
        }
        let next: Vec<VertexId> = self
            .g
            .neighbors(end)
            .filter(|w| !self.on_path.contains(w))
            .collect();
        for w in next {
            self.path.push(w);
            self.on_path.insert(w);
            let stop = self.run(visit);
            self.on_path.remove(&w);
            self.path.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

fn search(
    g: &Graph,
    y: VertexId,
    z: VertexId,
    must: Option<Edge>,
    anchor: Option<&Graph>,
    visit: &mut dyn FnMut(&[VertexId]) -> bool,
) -> Result<()> {
    guard(g.vertex_count(), PATH_LIMIT, "graph")?;
    if y == z || !g.has_vertex(y) || !g.has_vertex(z) {
        return invalid("path ends must be distinct vertices of the graph");
    }
    if let Some(e) = must {
        if !g.has_edge(e.a, e.b) {
            return invalid(format!("{e} is not an edge"));
        }
    }
    if let Some(h) = anchor {
        if !h.is_subgraph_of(g) {
            return invalid("anchor is not a subgraph of the graph");
        }
    }
    let mut s = PathSearch {
        g,
        z,
        anchor,
        must,
        path: vec![y],
        on_path: VertexSet::from([y]),
    };
    s.run(visit);
    Ok(())
}

/// First (in neighbor order) Tutte path from `y` to `z` through `e`, with
/// the anchor condition when an anchor is given.
pub fn find_tutte_path_brute(
    g: &Graph,
    y: VertexId,
    z: VertexId,
    e: Edge,
    anchor: Option<&Graph>,
) -> Result<Option<Vec<VertexId>>> {
    let mut found = None;
    search(g, y, z, Some(e), anchor, &mut |p| {
        found = Some(p.to_vec());
        true
    })?;
    Ok(found)
}

/// Up to `limit` Tutte paths from `y` to `z`.
pub fn tutte_paths_brute(
    g: &Graph,
    y: VertexId,
    z: VertexId,
    anchor: Option<&Graph>,
    limit: usize,
) -> Result<Vec<Vec<VertexId>>> {
    let mut out = Vec::new();
    if limit == 0 {
        return Ok(out);
    }
    search(g, y, z, None, anchor, &mut |p| {
        out.push(p.to_vec());
        out.len() >= limit
    })?;
    Ok(out)
}
