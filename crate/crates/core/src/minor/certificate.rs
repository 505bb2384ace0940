use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::connectivity::RootedGraph;
use crate::error::{invalid, Result};
use crate::graph::{Edge, Graph, VertexId, VertexSet};

/// Bags `(V_v)` witnessing `minor` as a rooted minor of `host`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub host: Graph,
    pub roots: VertexSet,
    pub minor: Graph,
    pub bags: BTreeMap<VertexId, VertexSet>,
}

/// First certificate clause found violated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    BagCoverage(VertexId),
    EmptyBag(VertexId),
    UnknownVertex {
        bag: VertexId,
        vertex: VertexId,
    },
    Disjointness {
        vertex: VertexId,
        first: VertexId,
        second: VertexId,
    },
    SelfContainment(VertexId),
    Connectivity(VertexId),
    RootCoverage(VertexId),
    EdgeWitness(VertexId, VertexId),
}

impl Violation {
    /// Short name of the violated clause.
    pub fn clause(&self) -> &'static str {
        match self {
            Violation::BagCoverage(_) => "bag coverage",
            Violation::EmptyBag(_) => "empty bag",
            Violation::UnknownVertex { .. } => "host membership",
            Violation::Disjointness { .. } => "bag disjointness",
            Violation::SelfContainment(_) => "self-containment",
            Violation::Connectivity(_) => "bag connectivity",
            Violation::RootCoverage(_) => "root coverage",
            Violation::EdgeWitness(..) => "edge witness",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.clause())?;
        match self {
            Violation::BagCoverage(v) => write!(f, "minor vertex {v} has no bag"),
            Violation::EmptyBag(v) => write!(f, "bag of {v} is empty"),
            Violation::UnknownVertex { bag, vertex } => {
                write!(f, "bag of {bag} holds {vertex}, which is not a host vertex")
            }
            Violation::Disjointness {
                vertex,
                first,
                second,
            } => {
                write!(f, "{vertex} lies in the bags of {first} and {second}")
            }
            Violation::SelfContainment(v) => write!(f, "{v} is not in its own bag"),
            Violation::Connectivity(v) => write!(f, "bag of {v} induces a disconnected graph"),
            Violation::RootCoverage(x) => write!(f, "root {x} is not a minor vertex"),
            Violation::EdgeWitness(u, v) => {
                write!(f, "no host edge joins the bags of {u} and {v}")
            }
        }
    }
}

impl Certificate {
    /// `M = G` with singleton bags.
    pub fn identity(rg: &RootedGraph) -> Certificate {
        let g = rg.graph().clone();
        Certificate {
            bags: g.vertices().map(|v| (v, VertexSet::from([v]))).collect(),
            minor: g.clone(),
            host: g,
            roots: rg.roots().clone(),
        }
    }

    pub fn bag(&self, v: VertexId) -> Option<&VertexSet> {
        self.bags.get(&v)
    }

    /// Minor vertex whose bag holds host vertex `w`.
    pub fn owner(&self, w: VertexId) -> Option<VertexId> {
        self.bags
            .iter()
            .find(|(_, bag)| bag.contains(&w))
            .map(|(&v, _)| v)
    }

    pub fn verify(&self) -> Result<(), Violation> {
        for v in self.minor.vertices() {
            if !self.bags.contains_key(&v) {
                return Err(Violation::BagCoverage(v));
            }
        }
        let mut owner: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        for (&v, bag) in &self.bags {
            if !self.minor.has_vertex(v) {
                return Err(Violation::BagCoverage(v));
            }
            if bag.is_empty() {
                return Err(Violation::EmptyBag(v));
            }
            for &w in bag {
                if !self.host.has_vertex(w) {
                    return Err(Violation::UnknownVertex { bag: v, vertex: w });
                }
                if let Some(&first) = owner.get(&w) {
                    return Err(Violation::Disjointness {
                        vertex: w,
                        first,
                        second: v,
                    });
                }
                owner.insert(w, v);
            }
        }
        for (&v, bag) in &self.bags {
            if !bag.contains(&v) {
                return Err(Violation::SelfContainment(v));
            }
        }
        for (&v, bag) in &self.bags {
            if self.host.reachable(v, |w| bag.contains(&w)).len() != bag.len() {
                return Err(Violation::Connectivity(v));
            }
        }
        for &x in &self.roots {
            if !self.minor.has_vertex(x) {
                return Err(Violation::RootCoverage(x));
            }
        }
        for e in self.minor.edges() {
            if self.bag_edge(e.a, e.b).is_none() {
                return Err(Violation::EdgeWitness(e.a, e.b));
            }
        }
        Ok(())
    }

    /// Least host edge `(a, b)` with `a` in the bag of `u` and `b` in the bag
    /// of `v`.
    pub fn bag_edge(&self, u: VertexId, v: VertexId) -> Option<Edge> {
        let (bu, bv) = (self.bags.get(&u)?, self.bags.get(&v)?);
        bu.iter().find_map(|&a| {
            self.host
                .neighbors(a)
                .find(|b| bv.contains(b))
                .map(|b| Edge { a, b })
        })
    }

    /// A contraction trace realizing this certificate: start from the host
    /// restricted to the bags with edges between non-adjacent bags removed,
    /// then absorb each bag into its minor vertex in breadth-first order.
    pub fn derive_trace(&self) -> Result<ContractionTrace> {
        if let Err(v) = self.verify() {
            return invalid(format!("invalid certificate: {v}"));
        }
        let covered: VertexSet = self.bags.values().flatten().copied().collect();
        let mut initial = self.host.induced_subgraph(&covered)?;
        let owner: BTreeMap<VertexId, VertexId> = self
            .bags
            .iter()
            .flat_map(|(&v, bag)| bag.iter().map(move |&w| (w, v)))
            .collect();
        let stale: Vec<Edge> = initial
            .edges()
            .filter(|e| {
                let (ou, ov) = (owner[&e.a], owner[&e.b]);
                ou != ov && !self.minor.has_edge(ou, ov)
            })
            .collect();
        for e in stale {
            initial.remove_edge(e.a, e.b)?;
        }
        let mut steps = Vec::new();
        for (&v, bag) in &self.bags {
            let mut seen = VertexSet::from([v]);
            let mut queue = VecDeque::from([v]);
            while let Some(u) = queue.pop_front() {
                for w in self.host.neighbors(u) {
                    if bag.contains(&w) && seen.insert(w) {
                        steps.push(Edge { a: v, b: w });
                        queue.push_back(w);
                    }
                }
            }
        }
        let trace = ContractionTrace {
            initial,
            steps,
            final_graph: self.minor.clone(),
        };
        let replayed = trace.replay(&self.roots)?;
        if replayed != self.minor {
            return invalid("bag contraction does not reproduce the minor");
        }
        Ok(trace)
    }
}

/// Ordered contractions `(kept, absorbed)` turning `initial` into
/// `final_graph`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionTrace {
    pub initial: Graph,
    pub steps: Vec<Edge>,
    pub final_graph: Graph,
}

impl ContractionTrace {
    /// Replays the steps, checking that each one contracts an existing edge
    /// whose absorbed endpoint is not a root.
    pub fn replay(&self, roots: &VertexSet) -> Result<Graph> {
        let mut g = self.initial.clone();
        for (i, step) in self.steps.iter().enumerate() {
            if roots.contains(&step.b) {
                return invalid(format!("step {i} absorbs root {}", step.b));
            }
            g = g.contract_edge(step.a, step.b)?;
        }
        Ok(g)
    }

    /// True when replaying is legal and reproduces the final graph.
    pub fn is_sound(&self, roots: &VertexSet) -> bool {
        self.replay(roots).is_ok_and(|g| g == self.final_graph)
    }

    /// Bags induced by the steps: each absorbed vertex joins its keeper's bag.
    pub fn bags(&self) -> BTreeMap<VertexId, VertexSet> {
        let mut bags: BTreeMap<VertexId, VertexSet> = self
            .initial
            .vertices()
            .map(|v| (v, VertexSet::from([v])))
            .collect();
        for step in &self.steps {
            if let Some(absorbed) = bags.remove(&step.b) {
                bags.entry(step.a).or_default().extend(absorbed);
            }
        }
        bags
    }
}
