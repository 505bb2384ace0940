//! Lifting spanning structures of a rooted minor back to the host graph.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::graph::{Edge, Graph, VertexId, VertexSet};
use crate::minor::{Certificate, SubdivisionEmbedding};

/// A failed structural check: the clause name and a human-readable detail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Defect {
    pub clause: &'static str,
    pub detail: String,
}

impl Defect {
    fn new(clause: &'static str, detail: impl Into<String>) -> Self {
        Defect {
            clause,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.clause, self.detail)
    }
}

/// Path from an off-spine root to the spine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Attachment {
    pub root: VertexId,
    /// Starts at `root`, ends on the spine.
    pub path: Vec<VertexId>,
}

/// A path or cycle together with attachment paths for the roots it misses.
///
/// Roots lying on the spine carry the trivial attachment and are not listed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedStructure {
    pub spine: Vec<VertexId>,
    pub closed: bool,
    pub attachments: Vec<Attachment>,
}

impl GeneralizedStructure {
    pub fn verify(&self, g: &Graph, roots: &VertexSet) -> Result<(), Defect> {
        if self.closed {
            if !g.is_cycle(&self.spine) {
                return Err(Defect::new("spine", "spine is not a cycle of the graph"));
            }
        } else if !g.is_path(&self.spine) {
            return Err(Defect::new("spine", "spine is not a path of the graph"));
        }
        let spine: VertexSet = self.spine.iter().copied().collect();
        let mut used = VertexSet::new();
        let mut attached = VertexSet::new();
        for att in &self.attachments {
            let p = &att.path;
            if p.first() != Some(&att.root) || !g.is_path(p) {
                return Err(Defect::new(
                    "attachment path",
                    format!("attachment of {} is not a path starting at it", att.root),
                ));
            }
            if !roots.contains(&att.root) || !attached.insert(att.root) {
                return Err(Defect::new(
                    "attachment roots",
                    format!("{} is not a root or is attached twice", att.root),
                ));
            }
            if p.iter().skip(1).any(|v| roots.contains(v)) {
                return Err(Defect::new(
                    "attachment roots",
                    format!("attachment of {} meets another root", att.root),
                ));
            }
            let on_spine: Vec<_> = p.iter().filter(|v| spine.contains(v)).collect();
            if on_spine.len() != 1 || !spine.contains(p.last().unwrap()) {
                return Err(Defect::new(
                    "spine contact",
                    format!(
                        "attachment of {} does not meet the spine in its end only",
                        att.root
                    ),
                ));
            }
            for &v in p {
                if !used.insert(v) {
                    return Err(Defect::new(
                        "attachment disjointness",
                        format!("{v} lies on two attachments"),
                    ));
                }
            }
        }
        for &x in roots {
            if !spine.contains(&x) && !attached.contains(&x) {
                return Err(Defect::new(
                    "root coverage",
                    format!("root {x} is not covered"),
                ));
            }
        }
        Ok(())
    }

    /// Union of spine and attachments as a subgraph of the host.
    pub fn image(&self) -> Graph {
        let mut g = Graph::path_subgraph(&self.spine, self.closed).expect("spine is a walk");
        for att in &self.attachments {
            for w in att.path.windows(2) {
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
}

/// A tree whose maximum degree should not exceed `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBoundedTree {
    pub tree: Graph,
    pub bound: usize,
}

impl DegreeBoundedTree {
    pub fn verify(&self, g: &Graph, roots: &VertexSet) -> Result<(), Defect> {
        let t = &self.tree;
        if !t.is_subgraph_of(g) {
            return Err(Defect::new(
                "subgraph",
                "tree is not a subgraph of the graph",
            ));
        }
        if t.is_empty() || !t.is_connected() || t.edge_count() + 1 != t.vertex_count() {
            return Err(Defect::new("tree", "not a tree"));
        }
        if let Some(v) = t.vertices().find(|&v| t.degree(v) > self.bound) {
            return Err(Defect::new(
                "degree bound",
                format!("{v} has degree {} > {}", t.degree(v), self.bound),
            ));
        }
        if let Some(x) = roots.iter().find(|x| !t.has_vertex(**x)) {
            return Err(Defect::new(
                "root coverage",
                format!("root {x} is not in the tree"),
            ));
        }
        Ok(())
    }

    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.tree.degree(v) == 1
    }
}

fn require_valid(c: &Certificate) -> Result<()> {
    c.verify()
        .map_err(|v| Error::InvalidArgument(format!("invalid certificate: {v}")))
}

fn require_spanning_roots(c: &Certificate, vertices: &[VertexId]) -> Result<()> {
    if let Some(x) = c.roots.iter().find(|x| !vertices.contains(x)) {
        return invalid(format!("root {x} is not on the structure"));
    }
    Ok(())
}

/// X-spanning generalized path of the host from an X-spanning path of the
/// minor.
pub fn lift_path(c: &Certificate, p: &[VertexId]) -> Result<GeneralizedStructure> {
    require_valid(c)?;
    if !c.minor.is_path(p) {
        return invalid("not a path of the minor");
    }
    require_spanning_roots(c, p)?;
    lift_spine(c, p, false)
}

/// X-spanning generalized cycle of the host from an X-spanning cycle of the
/// minor.
pub fn lift_cycle(c: &Certificate, cy: &[VertexId]) -> Result<GeneralizedStructure> {
    require_valid(c)?;
    if !c.minor.is_cycle(cy) {
        return invalid("not a cycle of the minor");
    }
    require_spanning_roots(c, cy)?;
    lift_spine(c, cy, true)
}

fn bag_path(g: &Graph, bag: &VertexSet, from: VertexId, to: VertexId) -> Result<Vec<VertexId>> {
    g.shortest_path(from, &VertexSet::from([to]), |w| bag.contains(&w))
        .ok_or_else(|| Error::Construction(format!("no path from {from} to {to} in its bag")))
}

fn lift_spine(c: &Certificate, walk: &[VertexId], closed: bool) -> Result<GeneralizedStructure> {
    let m = walk.len();
    let links = if closed { m } else { m - 1 };
    // connectors[i] joins the bag of walk[i] to the bag of walk[i + 1]
    let connectors: Vec<Edge> = (0..links)
        .map(|i| {
            let (u, v) = (walk[i], walk[(i + 1) % m]);
            c.bag_edge(u, v)
                .ok_or_else(|| Error::Construction(format!("no host edge between bags {u} {v}")))
        })
        .collect::<Result<_>>()?;
    let mut spine = Vec::new();
    for (i, &v) in walk.iter().enumerate() {
        let entry = if i > 0 {
            Some(connectors[i - 1].b)
        } else if closed {
            Some(connectors[m - 1].b)
        } else {
            None
        };
        let exit = connectors.get(i).map(|e| e.a);
        let segment = match (entry, exit) {
            (Some(a), Some(b)) => bag_path(&c.host, &c.bags[&v], a, b)?,
            (Some(a), None) | (None, Some(a)) => vec![a],
            (None, None) => vec![v],
        };
        spine.extend(segment);
    }
    let on_spine: VertexSet = spine.iter().copied().collect();
    let mut attachments = Vec::new();
    for &x in &c.roots {
        if on_spine.contains(&x) {
            continue;
        }
        let bag = &c.bags[&x];
        let targets: VertexSet = bag.intersection(&on_spine).copied().collect();
        let path = c
            .host
            .shortest_path(x, &targets, |w| bag.contains(&w))
            .ok_or_else(|| Error::Construction(format!("root {x} cannot reach the spine")))?;
        attachments.push(Attachment { root: x, path });
    }
    Ok(GeneralizedStructure {
        spine,
        closed,
        attachments,
    })
}

/// Tree inside `bag` spanning `terminals`, grown by repeatedly joining the
/// nearest unconnected terminal through a shortest path.
fn bag_tree(g: &Graph, bag: &VertexSet, terminals: &VertexSet) -> Result<Graph> {
    let mut remaining = terminals.clone();
    let first = remaining.pop_first().expect("terminals are nonempty");
    let mut tree = Graph::from_parts([first], [])?;
    while !remaining.is_empty() {
        let reached = tree.vertex_set();
        let mut best: Option<Vec<VertexId>> = None;
        for &r in &remaining {
            let path = g
                .shortest_path(r, &reached, |w| bag.contains(&w))
                .ok_or_else(|| {
                    Error::Construction(format!("terminal {r} is cut off in its bag"))
                })?;
            if best.as_ref().is_none_or(|b| path.len() < b.len()) {
                best = Some(path);
            }
        }
        let path = best.unwrap();
        for &v in &path {
            if !tree.has_vertex(v) {
                tree.insert_vertex(v)?;
            }
        }
        for w in path.windows(2) {
            tree.add_edge(w[0], w[1])?;
        }
        for v in &path {
            remaining.remove(v);
        }
    }
    Ok(tree)
}

/// X-spanning tree of the host from a spanning tree `t` of the minor with
/// maximum degree at most `bound`. The result has maximum degree at most
/// `bound + 1`.
pub fn lift_tree(c: &Certificate, t: &Graph, bound: usize) -> Result<DegreeBoundedTree> {
    require_valid(c)?;
    if t.vertex_set() != c.minor.vertex_set()
        || !t.is_subgraph_of(&c.minor)
        || !t.is_connected()
        || t.edge_count() + 1 != t.vertex_count()
    {
        return invalid("not a spanning tree of the minor");
    }
    if t.max_degree() > bound {
        return invalid(format!(
            "tree degree {} exceeds bound {bound}",
            t.max_degree()
        ));
    }
    let mut terminals: BTreeMap<VertexId, VertexSet> =
        t.vertices().map(|v| (v, VertexSet::new())).collect();
    let mut lifted = Graph::new();
    let mut links = Vec::new();
    for e in t.edges() {
        let link = c.bag_edge(e.a, e.b).expect("certificate is valid");
        terminals.get_mut(&e.a).unwrap().insert(link.a);
        terminals.get_mut(&e.b).unwrap().insert(link.b);
        links.push(link);
    }
    for (&v, term) in &mut terminals {
        if term.is_empty() {
            term.insert(v);
        }
        let bag = &c.bags[&v];
        let sub = bag_tree(&c.host, bag, term)?;
        let k = term.len();
        if let Some(w) = sub.vertices().find(|w| {
            let cap = if term.contains(w) { k - 1 } else { k };
            sub.degree(*w) > cap
        }) {
            return Err(Error::Construction(format!(
                "bag tree of {v} gives {w} degree {} with {k} terminals",
                sub.degree(w)
            )));
        }
        for w in sub.vertices() {
            lifted.insert_vertex(w)?;
        }
        for e in sub.edges() {
            lifted.add_edge(e.a, e.b)?;
        }
    }
    for e in links {
        lifted.add_edge(e.a, e.b)?;
    }
    for &x in &c.roots {
        if lifted.has_vertex(x) {
            continue;
        }
        let bag = &c.bags[&x];
        let reached: VertexSet = bag
            .iter()
            .copied()
            .filter(|w| lifted.has_vertex(*w))
            .collect();
        let path = c
            .host
            .shortest_path(x, &reached, |w| bag.contains(&w))
            .ok_or_else(|| Error::Construction(format!("root {x} cannot reach the tree")))?;
        for &w in &path[..path.len() - 1] {
            lifted.insert_vertex(w)?;
        }
        for w in path.windows(2) {
            lifted.add_edge(w[0], w[1])?;
        }
    }
    Ok(DegreeBoundedTree {
        tree: lifted,
        bound: bound + 1,
    })
}

/// Image of a subgraph `h` of the minor under a subdivision embedding.
pub fn lift_subdivision(e: &SubdivisionEmbedding, h: &Graph) -> Result<Graph> {
    if !h.is_subgraph_of(&e.minor) {
        return invalid("not a subgraph of the minor");
    }
    let mut out = Graph::from_parts(h.vertices(), [])?;
    for edge in h.edges() {
        let path = &e.path_map[&edge];
        for &v in path {
            if !out.has_vertex(v) {
                out.insert_vertex(v)?;
            }
        }
        for w in path.windows(2) {
            out.add_edge(w[0], w[1])?;
        }
    }
    Ok(out)
}
