use std::collections::HashSet;

use itertools::Itertools;

use super::{guard, SEARCH_LIMIT};
use crate::connectivity::{is_k_connected, RootedGraph};
use crate::error::{invalid, Result};
use crate::graph::{Edge, Graph, VertexId, VertexSet};
use crate::lifting::DegreeBoundedTree;

/// Steiner tree for `X` with maximum degree at most `t`, optionally with the
/// two given roots as leaves.
///
/// Non-root vertex subsets are tried in increasing size; for each, spanning
/// trees of the induced subgraph are searched by branch and bound with the
/// degree and leaf constraints applied while the tree grows.
pub fn exists_x_spanning_tree(
    rg: &RootedGraph,
    t: usize,
    leaf_roots: Option<(VertexId, VertexId)>,
) -> Result<Option<DegreeBoundedTree>> {
    let g = rg.graph();
    guard(g.vertex_count(), SEARCH_LIMIT, "graph")?;
    let roots = rg.roots();
    let leaves: VertexSet = match leaf_roots {
        Some((a, b)) if a != b && roots.contains(&a) && roots.contains(&b) => {
            VertexSet::from([a, b])
        }
        Some(_) => return invalid("leaf roots must be two distinct roots"),
        None => VertexSet::new(),
    };
    let others: Vec<VertexId> = g.vertices().filter(|v| !roots.contains(v)).collect();
    for size in 0..=others.len() {
        for extra in others.iter().copied().combinations(size) {
            let mut keep = roots.clone();
            keep.extend(extra);
            let h = g.induced_subgraph(&keep)?;
            if !h.is_connected() {
                continue;
            }
            if let Some(tree) = bounded_spanning_tree(&h, t, &leaves) {
                return Ok(Some(DegreeBoundedTree { tree, bound: t }));
            }
        }
    }
    Ok(None)
}

/// Spanning tree of `h` with degrees at most `t` and the vertices of
/// `leaves` of degree one.
///
/// Vertices are expanded in breadth-first order of the tree; an expanded
/// vertex picks its children among its unreached neighbors, so each tree is
/// generated exactly once.
fn bounded_spanning_tree(h: &Graph, t: usize, leaves: &VertexSet) -> Option<Graph> {
    let n = h.vertex_count();
    if n == 1 {
        return Some(h.clone());
    }
    if t == 0 || (t == 1 && n > 2) {
        return None;
    }
    let cap = |v: VertexId| if leaves.contains(&v) { 1 } else { t };
    let start = h.vertices().next().unwrap();
    let mut s = TreeSearch {
        h,
        cap: &cap,
        reached: VertexSet::from([start]),
        queue: vec![start],
        head: 0,
        edges: Vec::new(),
    };
    if s.run() {
        Some(Graph::from_parts(h.vertices(), s.edges).unwrap())
    } else {
        None
    }
}

struct TreeSearch<'a> {
    h: &'a Graph,
    cap: &'a dyn Fn(VertexId) -> usize,
    reached: VertexSet,
    queue: Vec<VertexId>,
    head: usize,
    edges: Vec<Edge>,
}

impl TreeSearch<'_> {
    fn run(&mut self) -> bool {
        if self.reached.len() == self.h.vertex_count() {
            return true;
        }
        if self.head == self.queue.len() {
            return false;
        }
        // unreached vertices must stay reachable from unexpanded ones
        let open: VertexSet = self.queue[self.head..].iter().copied().collect();
        let mut seen = open.clone();
        let mut stack: Vec<VertexId> = open.into_iter().collect();
        while let Some(v) = stack.pop() {
            for w in self.h.neighbors(v) {
                if !self.reached.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        if self
            .h
            .vertices()
            .any(|v| !seen.contains(&v) && !self.reached.contains(&v))
        {
            return false;
        }
        let v = self.queue[self.head];
        let has_parent = self.head > 0;
        let room = (self.cap)(v).saturating_sub(usize::from(has_parent));
        let fresh: Vec<VertexId> = self
            .h
            .neighbors(v)
            .filter(|w| !self.reached.contains(w))
            .collect();
        self.head += 1;
        for size in (0..=room.min(fresh.len())).rev() {
            for children in fresh.iter().copied().combinations(size) {
                for &c in &children {
                    self.reached.insert(c);
                    self.queue.push(c);
                    self.edges.push(Edge { a: v, b: c });
                }
                if self.run() {
                    return true;
                }
                for &c in &children {
                    self.reached.remove(&c);
                    self.queue.pop();
                    self.edges.pop();
                }
            }
        }
        self.head -= 1;
        false
    }
}

/// Path from `x1` to `x2` through every root and every edge of `forced`.
pub fn exists_x_spanning_path(
    rg: &RootedGraph,
    x1: VertexId,
    x2: VertexId,
    forced: &[Edge],
) -> Result<Option<Vec<VertexId>>> {
    let g = rg.graph();
    guard(g.vertex_count(), SEARCH_LIMIT, "graph")?;
    let roots = rg.roots();
    if x1 == x2 || !roots.contains(&x1) || !roots.contains(&x2) {
        return invalid("path ends must be two distinct roots");
    }
    if forced.len() > 1 {
        return invalid("at most one forced edge");
    }
    for e in forced {
        if !roots.contains(&e.a) || !roots.contains(&e.b) || !g.has_edge(e.a, e.b) {
            return invalid(format!("forced edge {e} is not an edge between roots"));
        }
        if e.contains(x1) && e.contains(x2) {
            return invalid("forced edge joins the path ends");
        }
    }
    let mut s = CycleSearch::new(g, roots.clone(), x1, Some(x2), forced);
    Ok(s.run().then(|| s.path.clone()))
}

/// Cycle of `G - avoid` through every root outside `avoid`.
pub fn exists_x_spanning_cycle(
    rg: &RootedGraph,
    avoid: &VertexSet,
) -> Result<Option<Vec<VertexId>>> {
    let g = rg.graph();
    guard(g.vertex_count(), SEARCH_LIMIT, "graph")?;
    if avoid.len() > 2 {
        return invalid("at most two vertices may be avoided");
    }
    g.require_all(avoid)?;
    let h = g.delete_vertices(avoid)?;
    let targets: VertexSet = rg.roots().difference(avoid).copied().collect();
    let starts: Vec<VertexId> = match targets.first() {
        Some(&x) => vec![x],
        None => h.vertices().collect(),
    };
    for start in starts {
        let mut s = CycleSearch::new(&h, targets.clone(), start, None, &[]);
        if s.run() {
            return Ok(Some(s.path));
        }
    }
    Ok(None)
}

/// Backtracking over simple paths from `start`, closing either at a fixed
/// end or back to `start`.
struct CycleSearch<'a> {
    g: &'a Graph,
    targets: VertexSet,
    end: Option<VertexId>,
    forced: &'a [Edge],
    path: Vec<VertexId>,
    on_path: VertexSet,
}

impl<'a> CycleSearch<'a> {
    fn new(
        g: &'a Graph,
        targets: VertexSet,
        start: VertexId,
        end: Option<VertexId>,
        forced: &'a [Edge],
    ) -> Self {
        CycleSearch {
            g,
            targets,
            end,
            forced,
            path: vec![start],
            on_path: VertexSet::from([start]),
        }
    }

    fn uses(&self, e: &Edge) -> bool {
        self.path
            .windows(2)
            .any(|w| e.contains(w[0]) && e.contains(w[1]))
    }

    fn complete(&self) -> bool {
        self.targets.iter().all(|x| self.on_path.contains(x))
            && self.forced.iter().all(|e| self.uses(e))
    }

    fn feasible(&self) -> bool {
        let last = *self.path.last().unwrap();
        let start = self.path[0];
        for e in self.forced {
            if self.uses(e) {
                continue;
            }
            let dead = |v: VertexId| self.on_path.contains(&v) && v != last;
            if dead(e.a) || dead(e.b) {
                return false;
            }
        }
        // remaining targets and the closing vertex reachable through free vertices
        let goal = self.end.unwrap_or(start);
        let free = |v: VertexId| !self.on_path.contains(&v) || v == goal;
        let reach = self.g.reachable(last, free);
        self.targets
            .iter()
            .all(|x| self.on_path.contains(x) || reach.contains(x))
            && (reach.contains(&goal) || last == goal)
    }

    fn run(&mut self) -> bool {
        let last = *self.path.last().unwrap();
        match self.end {
            Some(z) if last == z => return self.complete(),
            None if self.path.len() >= 3
                && self.g.has_edge(last, self.path[0])
                && self.complete() =>
            {
                return true;
            }
            _ => {}
        }
        if !self.feasible() {
            return false;
        }
        let next: Vec<VertexId> = self
            .g
            .neighbors(last)
            .filter(|w| !self.on_path.contains(w))
            .collect();
        for w in next {
            self.path.push(w);
            self.on_path.insert(w);
            if self.run() {
                return true;
            }
            self.on_path.remove(&w);
            self.path.pop();
        }
        false
    }
}

/// Spanning 2-connected subgraph of `g` with maximum degree at most `maxdeg`.
///
/// Starting from `g`, edges at over-degree vertices are deleted one at a
/// time as long as the graph stays 2-connected.
pub fn two_connected_bounded_subgraph(g: &Graph, maxdeg: usize) -> Result<Option<Graph>> {
    guard(g.vertex_count(), SEARCH_LIMIT, "graph")?;
    if !is_k_connected(g, 2) {
        return Ok(None);
    }
    let mut seen = HashSet::new();
    Ok(prune_degrees(g.clone(), maxdeg, &mut seen))
}

fn prune_degrees(g: Graph, maxdeg: usize, seen: &mut HashSet<Vec<Edge>>) -> Option<Graph> {
    let Some(v) = g.vertices().find(|&v| g.degree(v) > maxdeg) else {
        return Some(g);
    };
    if !seen.insert(g.edges().collect()) {
        return None;
    }
    let incident: Vec<VertexId> = g.neighbors(v).collect();
    for w in incident {
        let mut h = g.clone();
        h.remove_edge(v, w).unwrap();
        if is_k_connected(&h, 2) {
            if let Some(found) = prune_degrees(h, maxdeg, seen) {
                return Some(found);
            }
        }
    }
    None
}
