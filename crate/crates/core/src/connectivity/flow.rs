//! Unit vertex-capacity flow on the split graph.
//!
//! Every vertex `v` becomes `v_in -> v_out` with capacity one; every edge
//! `uv` becomes `u_out -> v_in` and `v_out -> u_in` with unbounded capacity.
//! A flow from `s_out` to `t_in` is a family of internally vertex-disjoint
//! `s`-`t` paths.

use std::collections::{BTreeMap, VecDeque};

use crate::graph::{Graph, VertexId, VertexSet};

const UNBOUNDED: u32 = u32::MAX / 2;

#[derive(Clone, Copy, Debug)]
struct Arc {
    to: usize,
    cap: u32,
}

pub(crate) struct SplitNetwork {
    ids: Vec<VertexId>,
    index: BTreeMap<VertexId, usize>,
    arcs: Vec<Arc>,
    initial: Vec<u32>,
    out: Vec<Vec<usize>>,
    source: usize,
    sink: usize,
}

impl SplitNetwork {
    pub(crate) fn new(g: &Graph) -> Self {
        let ids: Vec<VertexId> = g.vertices().collect();
        let index: BTreeMap<VertexId, usize> =
            ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut net = SplitNetwork {
            ids,
            index,
            arcs: Vec::new(),
            initial: Vec::new(),
            out: vec![Vec::new(); 2 * g.vertex_count()],
            source: 0,
            sink: 0,
        };
        for i in 0..net.ids.len() {
            net.push_arc(2 * i, 2 * i + 1, 1);
        }
        for e in g.edges() {
            let (a, b) = (net.index[&e.a], net.index[&e.b]);
            net.push_arc(2 * a + 1, 2 * b, UNBOUNDED);
            net.push_arc(2 * b + 1, 2 * a, UNBOUNDED);
        }
        net.initial = net.arcs.iter().map(|a| a.cap).collect();
        net
    }

    fn push_arc(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    /// Maximum number of internally disjoint `s`-`t` paths, stopping early
    /// once `limit` paths are found. `s` and `t` must be distinct and
    /// nonadjacent.
    pub(crate) fn max_flow(&mut self, s: VertexId, t: VertexId, limit: usize) -> usize {
        for (arc, &cap) in self.arcs.iter_mut().zip(&self.initial) {
            arc.cap = cap;
        }
        self.source = 2 * self.index[&s] + 1;
        self.sink = 2 * self.index[&t];
        let mut value = 0;
        while value < limit {
            let Some(parent) = self.augmenting_path() else {
                break;
            };
            let mut node = self.sink;
            while node != self.source {
                let arc = parent[node];
                self.arcs[arc].cap -= 1;
                self.arcs[arc ^ 1].cap += 1;
                node = self.arcs[arc ^ 1].to;
            }
            value += 1;
        }
        value
    }

    fn augmenting_path(&self) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[self.source] = true;
        let mut queue = VecDeque::from([self.source]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.out[u] {
                let Arc { to, cap } = self.arcs[a];
                if cap > 0 && !seen[to] {
                    seen[to] = true;
                    parent[to] = a;
                    if to == self.sink {
                        return Some(parent);
                    }
                    queue.push_back(to);
                }
            }
        }
        None
    }

    fn residual_reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[self.source] = true;
        let mut stack = vec![self.source];
        while let Some(u) = stack.pop() {
            for &a in &self.out[u] {
                let Arc { to, cap } = self.arcs[a];
                if cap > 0 && !seen[to] {
                    seen[to] = true;
                    stack.push(to);
                }
            }
        }
        seen
    }

    /// Minimum vertex cut closest to the source, valid after an unlimited
    /// [`max_flow`](Self::max_flow).
    pub(crate) fn source_side_cut(&self) -> VertexSet {
        let seen = self.residual_reachable();
        (0..self.ids.len())
            .filter(|&i| seen[2 * i] && !seen[2 * i + 1])
            .map(|i| self.ids[i])
            .collect()
    }

    /// Decomposes the current flow into vertex sequences from `s` to `t`.
    pub(crate) fn paths(&self) -> Vec<Vec<VertexId>> {
        let mut used: Vec<u32> = self
            .arcs
            .iter()
            .zip(&self.initial)
            .map(|(a, &c)| c.saturating_sub(a.cap))
            .collect();
        let s = self.source / 2;
        let t = self.sink / 2;
        let mut paths = Vec::new();
        loop {
            let mut path = vec![self.ids[s]];
            let mut node = self.source;
            let mut found = false;
            while node != self.sink {
                let next = self.out[node]
                    .iter()
                    .copied()
                    .find(|&a| a % 2 == 0 && used[a] > 0);
                let Some(a) = next else { break };
                used[a] -= 1;
                node = self.arcs[a].to;
                found = true;
                if node.is_multiple_of(2) {
                    path.push(self.ids[node / 2]);
                }
            }
            if !found || node != self.sink {
                break;
            }
            debug_assert_eq!(*path.last().unwrap(), self.ids[t]);
            paths.push(path);
        }
        paths
    }
}
