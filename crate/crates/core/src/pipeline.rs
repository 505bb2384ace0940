//! End-to-end construction of locally spanning structures at desk scale.
//!
//! Each run records the steps it took, so a caller can tell a precondition
//! failure from a guard hit from a genuine violation.

use std::time::{Duration, Instant};

use crate::connectivity::{is_k_connected, kappa_x, RootedGraph};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId, VertexSet};
use crate::lifting::{lift_subdivision, lift_tree, DegreeBoundedTree};
use crate::minor::{four_connected_x_minor, topological_x_minor, TopologicalOrder};
use crate::oracles::{
    exists_x_spanning_cycle, exists_x_spanning_path, exists_x_spanning_tree,
    two_connected_bounded_subgraph,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    I,
    II,
    III,
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "i" | "1" => Ok(Variant::I),
            "ii" | "2" => Ok(Variant::II),
            "iii" | "3" => Ok(Variant::III),
            _ => Err(Error::InvalidArgument(format!("unknown variant '{s}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Precondition,
    ResourceLimit,
    Unchecked,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Precondition => "precondition",
            Outcome::ResourceLimit => "resource-limit",
            Outcome::Unchecked => "unchecked",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Step {
    pub name: &'static str,
    pub outcome: Outcome,
    pub detail: String,
    pub elapsed: Duration,
}

/// Structure produced by a successful run, in host vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Artifact {
    Tree(DegreeBoundedTree),
    Subgraph(Graph),
    Path(Vec<VertexId>),
    Cycle(Vec<VertexId>),
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    /// Degree bound for variant iii.
    pub bound: Option<usize>,
    /// Path ends for `kappa_four` (i); leaf pair for `kappa_three` (i).
    pub ends: Option<(VertexId, VertexId)>,
    /// Forced root edge for `kappa_four` (i).
    pub force: Option<Edge>,
    /// Avoided vertices for `kappa_four` (ii).
    pub avoid: VertexSet,
}

#[derive(Clone, Debug)]
pub struct Run {
    pub vertices: usize,
    pub edges: usize,
    pub roots: usize,
    pub kappa: usize,
    pub steps: Vec<Step>,
    pub artifact: Option<Artifact>,
}

impl Run {
    fn new(rg: &RootedGraph) -> Self {
        Run {
            vertices: rg.graph().vertex_count(),
            edges: rg.graph().edge_count(),
            roots: rg.roots().len(),
            kappa: kappa_x(rg),
            steps: Vec::new(),
            artifact: None,
        }
    }

    /// Pass iff no step failed, hit a guard or missed its precondition.
    pub fn passed(&self) -> bool {
        self.artifact.is_some()
            && self
                .steps
                .iter()
                .all(|s| matches!(s.outcome, Outcome::Pass | Outcome::Unchecked))
    }

    fn step<T>(
        &mut self,
        name: &'static str,
        f: impl FnOnce() -> Result<(T, String)>,
    ) -> Option<T> {
        let start = Instant::now();
        let (outcome, detail, value) = match f() {
            Ok((v, detail)) => (Outcome::Pass, detail, Some(v)),
            Err(Error::ResourceLimit(m)) => (Outcome::ResourceLimit, m, None),
            Err(Error::Precondition(m)) => (Outcome::Precondition, m, None),
            Err(e) => (Outcome::Fail, e.to_string(), None),
        };
        self.steps.push(Step {
            name,
            outcome,
            detail,
            elapsed: start.elapsed(),
        });
        value
    }

    fn note(&mut self, name: &'static str, outcome: Outcome, detail: String) {
        self.steps.push(Step {
            name,
            outcome,
            detail,
            elapsed: Duration::ZERO,
        });
    }

    fn precondition(&mut self, need: usize) -> bool {
        let kappa = self.kappa;
        self.step("precondition", || {
            if kappa < need {
                Err(Error::Precondition(format!("kappa_x = {kappa} < {need}")))
            } else {
                Ok(((), format!("kappa_x = {kappa}")))
            }
        })
        .is_some()
    }
}

fn fail(msg: impl Into<String>) -> Error {
    Error::Construction(msg.into())
}

fn check(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(fail(msg))
    }
}

fn spans(h: &Graph, roots: &VertexSet) -> bool {
    roots.iter().all(|&x| h.has_vertex(x))
}

/// Spanning 3-tree / 2-connected degree-6 subgraph / (t-1)-tree through a
/// 3-connected topological rooted minor.
pub fn kappa_three(rg: &RootedGraph, variant: Variant, opts: &Options) -> Run {
    let mut run = Run::new(rg);
    if !run.precondition(3) {
        return run;
    }
    let g = rg.graph();
    let roots = rg.roots();
    let leaves = match (variant, opts.ends) {
        (Variant::I, Some((a, b))) => {
            if !(roots.contains(&a) && roots.contains(&b) && g.has_edge(a, b)) {
                run.note(
                    "leaf pair",
                    Outcome::Fail,
                    "leaf pair is not an edge between roots".into(),
                );
                return run;
            }
            Some((a, b))
        }
        (Variant::I, None) => g
            .edges()
            .find(|e| roots.contains(&e.a) && roots.contains(&e.b))
            .map(|e| (e.a, e.b)),
        _ => None,
    };
    let bound = match variant {
        Variant::III => {
            let t = opts.bound.unwrap_or(4);
            if t < 4 || t % 2 == 1 {
                run.note(
                    "bound",
                    Outcome::Fail,
                    format!("t = {t} must be an even integer >= 4"),
                );
                return run;
            }
            run.note(
                "minor-free check",
                Outcome::Unchecked,
                format!("K_3,{t} exclusion exceeds the minor oracle's pattern limit"),
            );
            t - 1
        }
        _ => 3,
    };
    let Some(mut emb) = run.step("topological minor", || {
        let (m, emb) = topological_x_minor(rg, TopologicalOrder::Three)?;
        emb.verify(g).map_err(fail)?;
        check(is_k_connected(&m, 3), "minor is not 3-connected")?;
        let d = format!("|V(M)| = {}, |E(M)| = {}", m.vertex_count(), m.edge_count());
        Ok((emb, d))
    }) else {
        return run;
    };
    if let Some((a, b)) = leaves {
        if !emb.minor.has_edge(a, b) {
            emb.minor
                .add_edge(a, b)
                .expect("leaf pair lies in the minor");
            emb.path_map.insert(
                Edge::new(a, b).unwrap().normalized(),
                vec![a.min(b), a.max(b)],
            );
        }
    }
    let mrg = match RootedGraph::new(emb.minor.clone(), roots.clone()) {
        Ok(r) => r,
        Err(e) => {
            run.note("minor roots", Outcome::Fail, e.to_string());
            return run;
        }
    };
    let found = run.step("oracle", || match variant {
        Variant::II => {
            let h = two_connected_bounded_subgraph(&emb.minor, 6)?
                .ok_or_else(|| fail("no 2-connected subgraph of maximum degree 6"))?;
            Ok((h, "2-connected subgraph of maximum degree 6".to_string()))
        }
        _ => {
            let t = exists_x_spanning_tree(&mrg, bound, leaves)?
                .ok_or_else(|| fail(format!("no X-spanning {bound}-tree in the minor")))?;
            Ok((t.tree, format!("X-spanning {bound}-tree")))
        }
    });
    let Some(h) = found else { return run };
    let lifted = run.step("lift", || {
        let out = lift_subdivision(&emb, &h)?;
        Ok((out, String::new()))
    });
    let Some(out) = lifted else { return run };
    let artifact = run.step("verify", || {
        verify_kappa_three(g, roots, variant, bound, leaves, out)
    });
    run.artifact = artifact;
    run
}

fn verify_kappa_three(
    g: &Graph,
    roots: &VertexSet,
    variant: Variant,
    bound: usize,
    leaves: Option<(VertexId, VertexId)>,
    out: Graph,
) -> Result<(Artifact, String)> {
    check(
        out.is_subgraph_of(g),
        "lifted structure is not a subgraph of the host",
    )?;
    check(spans(&out, roots), "lifted structure misses a root")?;
    let cap = if variant == Variant::II { 6 } else { bound };
    check(out.max_degree() <= cap, "degree bound exceeded")?;
    if variant == Variant::II {
        check(
            is_k_connected(&out, 2),
            "lifted subgraph is not 2-connected",
        )?;
        return Ok((
            Artifact::Subgraph(out),
            "X-spanning 2-connected, max degree <= 6".into(),
        ));
    }
    let tree = DegreeBoundedTree { tree: out, bound };
    tree.verify(g, roots).map_err(|d| fail(d.to_string()))?;
    if let Some((a, b)) = leaves {
        check(
            tree.is_leaf(a) && tree.is_leaf(b),
            "leaf pair is not a pair of leaves",
        )?;
    }
    let d = format!(
        "X-spanning {bound}-tree with {} vertices",
        tree.tree.vertex_count()
    );
    Ok((Artifact::Tree(tree), d))
}

/// Spanning path / cycle avoiding at most two vertices / lifted bounded tree,
/// the first two found directly by the oracles on the host.
pub fn kappa_four(rg: &RootedGraph, variant: Variant, opts: &Options) -> Run {
    let mut run = Run::new(rg);
    if !run.precondition(4) {
        return run;
    }
    let g = rg.graph();
    let roots = rg.roots();
    run.artifact = match variant {
        Variant::I => {
            let ends = opts.ends.or_else(|| {
                let mut it = roots.iter().copied();
                Some((it.next()?, it.next()?))
            });
            let Some((a, b)) = ends else {
                run.note("ends", Outcome::Fail, "need two roots".into());
                return run;
            };
            let forced: Vec<Edge> = opts.force.into_iter().collect();
            run.step("oracle", || {
                let p = exists_x_spanning_path(rg, a, b, &forced)?
                    .ok_or_else(|| fail("no X-spanning path"))?;
                check(
                    g.is_path(&p) && p[0] == a && p[p.len() - 1] == b,
                    "oracle returned a non-path",
                )?;
                check(roots.iter().all(|x| p.contains(x)), "path misses a root")?;
                let uses = |e: &Edge| {
                    p.windows(2).any(|w| {
                        Edge::new(w[0], w[1]).map(|f| f.normalized()) == Ok(e.normalized())
                    })
                };
                check(forced.iter().all(uses), "forced edge unused")?;
                let d = format!("X-spanning path on {} vertices", p.len());
                Ok((Artifact::Path(p), d))
            })
        }
        Variant::II => run.step("oracle", || {
            let c = exists_x_spanning_cycle(rg, &opts.avoid)?
                .ok_or_else(|| fail("no (X - Y)-spanning cycle"))?;
            check(
                !c.iter().any(|v| opts.avoid.contains(v)),
                "cycle meets an avoided vertex",
            )?;
            check(
                roots
                    .iter()
                    .all(|x| opts.avoid.contains(x) || c.contains(x)),
                "cycle misses a root",
            )?;
            check(c.len() < 3 || g.is_cycle(&c), "oracle returned a non-cycle")?;
            let d = format!("(X - Y)-spanning cycle on {} vertices", c.len());
            Ok((Artifact::Cycle(c), d))
        }),
        Variant::III => {
            let t = opts.bound.unwrap_or(3);
            let Some((cert, _)) = run.step("four-connected minor", || {
                let (c, trace) = four_connected_x_minor(rg)?;
                c.verify().map_err(|v| fail(v.to_string()))?;
                let d = format!("|V(M)| = {}", c.minor.vertex_count());
                Ok(((c, trace), d))
            }) else {
                return run;
            };
            let Some(tree) = run.step("oracle", || {
                let mrg = RootedGraph::spanning(cert.minor.clone())?;
                let found = exists_x_spanning_tree(&mrg, t, None)?
                    .ok_or_else(|| fail(format!("no spanning {t}-tree of the minor")))?;
                Ok((found.tree, format!("spanning {t}-tree of the minor")))
            }) else {
                return run;
            };
            run.step("lift", || {
                let lifted = lift_tree(&cert, &tree, t)?;
                lifted.verify(g, roots).map_err(|d| fail(d.to_string()))?;
                let d = format!(
                    "max degree {} <= {}",
                    lifted.tree.max_degree(),
                    lifted.bound
                );
                Ok((Artifact::Tree(lifted), d))
            })
        }
    };
    run
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    #[test]
    fn k4_spanning_three_tree() {
        let rg = RootedGraph::spanning(complete_graph(4)).unwrap();
        let run = kappa_three(&rg, Variant::I, &Options::default());
        assert!(run.passed(), "{:?}", run.steps);
        let Some(Artifact::Tree(t)) = &run.artifact else {
            panic!()
        };
        assert!(t.tree.max_degree() <= 3);
    }

    #[test]
    fn low_kappa_is_a_precondition_failure() {
        let rg = RootedGraph::spanning(crate::graph::cycle_graph(5)).unwrap();
        let run = kappa_three(&rg, Variant::I, &Options::default());
        assert!(!run.passed());
        assert_eq!(run.steps[0].outcome, Outcome::Precondition);
        let run = kappa_four(&rg, Variant::II, &Options::default());
        assert_eq!(run.steps[0].outcome, Outcome::Precondition);
    }

    #[test]
    fn k5_kappa_four_variants() {
        let rg = RootedGraph::spanning(complete_graph(5)).unwrap();
        for v in [Variant::I, Variant::II, Variant::III] {
            let run = kappa_four(&rg, v, &Options::default());
            assert!(run.passed(), "{v:?}: {:?}", run.steps);
        }
    }
}
