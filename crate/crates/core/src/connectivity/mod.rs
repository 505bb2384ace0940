//! Local connectivity of a root set, separators and fragments.
//!
//! `kappa_x` of a rooted graph `(G, X)` is the largest `k <= |X| - 1` such
//! that every vertex set separating two roots has at least `k` vertices. By
//! Menger's theorem it is the minimum, over nonadjacent root pairs, of the
//! number of internally disjoint paths between them, capped at `|X| - 1`.

mod flow;

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{invalid, Result};
use crate::graph::{Graph, VertexId, VertexSet};

pub(crate) use flow::SplitNetwork;

/// A graph together with a nonempty root set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedGraph {
    graph: Graph,
    roots: VertexSet,
}

impl RootedGraph {
    pub fn new(graph: Graph, roots: VertexSet) -> Result<Self> {
        if roots.is_empty() {
            return invalid("root set is empty");
        }
        graph.require_all(&roots)?;
        Ok(RootedGraph { graph, roots })
    }

    /// Root set `X = V(G)`.
    pub fn spanning(graph: Graph) -> Result<Self> {
        let roots = graph.vertex_set();
        RootedGraph::new(graph, roots)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn roots(&self) -> &VertexSet {
        &self.roots
    }

    pub fn is_root(&self, v: VertexId) -> bool {
        self.roots.contains(&v)
    }

    pub fn into_parts(self) -> (Graph, VertexSet) {
        (self.graph, self.roots)
    }

    /// Same roots on a different graph.
    pub fn with_graph(&self, graph: Graph) -> Result<Self> {
        RootedGraph::new(graph, self.roots.clone())
    }

    /// Pairs of distinct roots that are not adjacent, in lexicographic order.
    pub fn nonadjacent_root_pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.roots
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| !self.graph.has_edge(**a, **b))
            .map(|(&a, &b)| (a, b))
    }

    /// The component of `G` containing every root, when there is one.
    pub fn root_component(&self) -> Option<VertexSet> {
        let first = *self.roots.iter().next()?;
        let comp = self.graph.reachable(first, |_| true);
        self.roots.is_subset(&comp).then_some(comp)
    }
}

/// A vertex set `S` with two witnesses lying in distinct components of
/// `G - S`. For an X-separator the witnesses are roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separator {
    pub vertices: VertexSet,
    pub witnesses: (VertexId, VertexId),
}

impl Separator {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks that the witnesses avoid `S` and are disconnected by it.
    pub fn separates(&self, g: &Graph) -> bool {
        let (a, b) = self.witnesses;
        g.has_vertex(a)
            && g.has_vertex(b)
            && self.vertices.iter().all(|&v| g.has_vertex(v))
            && !self.vertices.contains(&a)
            && !self.vertices.contains(&b)
            && a != b
            && !g.reachable(a, |v| !self.vertices.contains(&v)).contains(&b)
    }

    /// True when at least two components of `G - S` contain a root.
    pub fn is_x_separator(&self, rg: &RootedGraph) -> bool {
        is_x_separator(rg, &self.vertices)
    }
}

/// True when at least two components of `G - s` contain a root.
pub fn is_x_separator(rg: &RootedGraph, s: &VertexSet) -> bool {
    let g = rg.graph();
    if s.len() >= g.vertex_count() {
        return false;
    }
    let outside: Vec<VertexId> = rg.roots().difference(s).copied().collect();
    let Some(&first) = outside.first() else {
        return false;
    };
    let comp = g.reachable(first, |v| !s.contains(&v));
    outside.iter().any(|r| !comp.contains(r))
}

/// A union of components of `G - S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fragment {
    pub vertices: VertexSet,
    pub separator: Separator,
    /// Whether the fragment contains a root.
    pub rooted: bool,
}

impl Fragment {
    /// `V(G - S) \ F`.
    pub fn complement(&self, g: &Graph) -> VertexSet {
        g.vertices()
            .filter(|v| !self.vertices.contains(v) && !self.separator.vertices.contains(v))
            .collect()
    }

    /// Union of fragments sharing one separator.
    pub fn union<'a>(parts: impl IntoIterator<Item = &'a Fragment>) -> Result<Fragment> {
        let mut it = parts.into_iter();
        let Some(first) = it.next() else {
            return invalid("empty fragment union");
        };
        let mut out = first.clone();
        for f in it {
            if f.separator.vertices != out.separator.vertices {
                return invalid("fragments of different separators");
            }
            out.vertices.extend(f.vertices.iter().copied());
            out.rooted |= f.rooted;
        }
        Ok(out)
    }

    fn check(&self, g: &Graph) -> Result<()> {
        let s = &self.separator.vertices;
        g.require_all(&self.vertices)?;
        g.require_all(s)?;
        if self.vertices.is_empty() {
            return invalid("fragment is empty");
        }
        if !self.vertices.is_disjoint(s) {
            return invalid("fragment meets its separator");
        }
        // F must be closed under adjacency in G - S and leave something behind.
        let leaks = self
            .vertices
            .iter()
            .flat_map(|&v| g.neighbors(v))
            .any(|w| !self.vertices.contains(&w) && !s.contains(&w));
        if leaks {
            return invalid("fragment is not a union of components of G - S");
        }
        if self.complement(g).is_empty() {
            return invalid("fragment covers every component of G - S");
        }
        Ok(())
    }
}

fn require_nonadjacent(g: &Graph, x: VertexId, y: VertexId) -> Result<()> {
    g.require(x)?;
    g.require(y)?;
    if x == y {
        return invalid(format!("identical endpoints {x}"));
    }
    if g.has_edge(x, y) {
        return invalid(format!("endpoints {x} and {y} are adjacent"));
    }
    Ok(())
}

/// Maximum number of internally vertex-disjoint `x`-`y` paths.
pub fn local_connectivity(g: &Graph, x: VertexId, y: VertexId) -> Result<usize> {
    require_nonadjacent(g, x, y)?;
    Ok(SplitNetwork::new(g).max_flow(x, y, usize::MAX))
}

/// A maximum family of internally vertex-disjoint `x`-`y` paths.
pub fn disjoint_paths(g: &Graph, x: VertexId, y: VertexId) -> Result<Vec<Vec<VertexId>>> {
    require_nonadjacent(g, x, y)?;
    let mut net = SplitNetwork::new(g);
    net.max_flow(x, y, usize::MAX);
    Ok(net.paths())
}

/// Minimum `x`-`y` vertex cut nearest to `x`.
pub fn min_vertex_cut(g: &Graph, x: VertexId, y: VertexId) -> Result<VertexSet> {
    require_nonadjacent(g, x, y)?;
    let mut net = SplitNetwork::new(g);
    net.max_flow(x, y, usize::MAX);
    Ok(net.source_side_cut())
}

pub fn kappa_x(rg: &RootedGraph) -> usize {
    let cap = rg.roots().len() - 1;
    let mut net = SplitNetwork::new(rg.graph());
    rg.nonadjacent_root_pairs()
        .map(|(a, b)| net.max_flow(a, b, cap))
        .fold(cap, usize::min)
}

/// `kappa_x(rg) >= k`, evaluated with flows capped at `k`.
pub fn kappa_at_least(rg: &RootedGraph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if k > rg.roots().len() - 1 {
        return false;
    }
    let mut net = SplitNetwork::new(rg.graph());
    rg.nonadjacent_root_pairs()
        .all(|(a, b)| net.max_flow(a, b, k) >= k)
}

/// A minimum X-separator, or `None` when `G[X]` is complete.
///
/// The pair attaining the minimum is the first in lexicographic order; the
/// cut is the one nearest to the first root of that pair.
pub fn min_x_separator(rg: &RootedGraph) -> Option<Separator> {
    let mut net = SplitNetwork::new(rg.graph());
    let mut best: Option<(usize, VertexId, VertexId)> = None;
    for (a, b) in rg.nonadjacent_root_pairs() {
        let limit = best.map_or(usize::MAX, |(k, _, _)| k);
        let value = net.max_flow(a, b, limit);
        if value < limit {
            best = Some((value, a, b));
        }
    }
    let (_, a, b) = best?;
    net.max_flow(a, b, usize::MAX);
    Some(Separator {
        vertices: net.source_side_cut(),
        witnesses: (a, b),
    })
}

/// One fragment per component of `G - S`, flagged by whether it holds a root.
pub fn x_fragments(rg: &RootedGraph, s: &Separator) -> Result<Vec<Fragment>> {
    let g = rg.graph();
    if !s.separates(g) {
        return invalid("not a separator of the graph");
    }
    let rest = g.delete_vertices(&s.vertices)?;
    Ok(rest
        .components()
        .into_iter()
        .map(|c| Fragment {
            rooted: !c.is_disjoint(rg.roots()),
            vertices: c,
            separator: s.clone(),
        })
        .collect())
}

/// Deletes an X-free fragment and turns its separator into a clique.
///
/// The result keeps the root set and satisfies
/// `kappa_x(result) >= kappa_x(rg)`.
pub fn clique_completion_reduce(rg: &RootedGraph, f: &Fragment) -> Result<RootedGraph> {
    let g = rg.graph();
    if !f.separator.separates(g) {
        return invalid("not a separator of the graph");
    }
    f.check(g)?;
    if !f.vertices.is_disjoint(rg.roots()) {
        return invalid("fragment contains a root");
    }
    let mut reduced = g.delete_vertices(&f.vertices)?;
    let s: Vec<VertexId> = f.separator.vertices.iter().copied().collect();
    for (&a, &b) in s.iter().tuple_combinations() {
        reduced.ensure_edge(a, b)?;
    }
    RootedGraph::new(reduced, rg.roots().clone())
}

/// `T(F, F') = (F ∩ S') ∪ (S' ∩ S) ∪ (S ∩ F')` for fragments of two
/// separators of the same graph.
pub fn cross_separator(g: &Graph, f: &Fragment, fp: &Fragment) -> Result<VertexSet> {
    for frag in [f, fp] {
        if g.require_all(&frag.vertices).is_err()
            || g.require_all(&frag.separator.vertices).is_err()
        {
            return invalid("fragment does not belong to this graph");
        }
        frag.check(g)?;
    }
    let s = &f.separator.vertices;
    let sp = &fp.separator.vertices;
    let mut t: VertexSet = f.vertices.intersection(sp).copied().collect();
    t.extend(sp.intersection(s).copied());
    t.extend(s.intersection(&fp.vertices).copied());
    Ok(t)
}

/// Fragment of `V(G - S) \ F`, sharing `f`'s separator.
pub fn complement_fragment(rg: &RootedGraph, f: &Fragment) -> Fragment {
    let vertices = f.complement(rg.graph());
    Fragment {
        rooted: !vertices.is_disjoint(rg.roots()),
        vertices,
        separator: f.separator.clone(),
    }
}

/// Vertex connectivity test: `|V| >= k + 1` and no separator of size `< k`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    if n < k + 1 {
        return false;
    }
    if k == 0 {
        return true;
    }
    if g.min_degree() < k {
        return false;
    }
    // A separator of size < k misses one of the first k vertices.
    let order: Vec<VertexId> = g.vertices().collect();
    let mut net = SplitNetwork::new(g);
    for (i, &a) in order.iter().enumerate().take(k) {
        for &b in &order[i + 1..] {
            if !g.has_edge(a, b) && net.max_flow(a, b, k) < k {
                return false;
            }
        }
    }
    true
}

/// Minimum separator of `G` (a set whose removal disconnects `G`), or `None`
/// for complete graphs. Deterministic: the first minimum pair in vertex
/// order, cut nearest to the lower vertex.
pub fn min_separator(g: &Graph) -> Option<Separator> {
    let order: Vec<VertexId> = g.vertices().collect();
    let mut net = SplitNetwork::new(g);
    let mut best: Option<(usize, VertexId, VertexId)> = None;
    for (i, &a) in order.iter().enumerate() {
        if best.is_some_and(|(k, _, _)| i > k) {
            break;
        }
        for &b in &order[i + 1..] {
            if g.has_edge(a, b) {
                continue;
            }
            let limit = best.map_or(usize::MAX, |(k, _, _)| k);
            let value = net.max_flow(a, b, limit);
            if value < limit {
                best = Some((value, a, b));
            }
        }
    }
    let (_, a, b) = best?;
    net.max_flow(a, b, usize::MAX);
    Some(Separator {
        vertices: net.source_side_cut(),
        witnesses: (a, b),
    })
}

/// Vertex connectivity `kappa(G)`; `n - 1` for complete graphs.
pub fn vertex_connectivity(g: &Graph) -> usize {
    match min_separator(g) {
        Some(s) => s.len(),
        None => g.vertex_count().saturating_sub(1),
    }
}

/// Sets of roots pairwise reachable in `G - s`, used by diagnostics.
pub fn root_classes(rg: &RootedGraph, s: &VertexSet) -> Vec<BTreeSet<VertexId>> {
    let g = rg.graph();
    let mut classes = Vec::new();
    let mut seen = VertexSet::new();
    for &r in rg.roots().difference(s) {
        if seen.contains(&r) {
            continue;
        }
        let comp = g.reachable(r, |v| !s.contains(&v));
        let class: VertexSet = rg.roots().intersection(&comp).copied().collect();
        seen.extend(class.iter().copied());
        classes.push(class);
    }
    classes
}
