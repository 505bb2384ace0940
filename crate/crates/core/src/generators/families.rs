use std::collections::BTreeMap;
use std::f64::consts::TAU;

use super::{Facts, Family, FamilyInstance, Point};
use crate::connectivity::{kappa_x, RootedGraph};
use crate::error::{invalid, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::io::Names;

#[derive(Default)]
struct Builder {
    graph: Graph,
    names: Names,
    pos: BTreeMap<VertexId, Point>,
    whites: VertexSet,
}

impl Builder {
    fn vertex(&mut self, name: String, p: Point) -> VertexId {
        let v = self.graph.add_vertex();
        self.names.insert(v, name);
        self.pos.insert(v, p);
        v
    }

    fn white(&mut self, name: String, p: Point) -> VertexId {
        let v = self.vertex(name, p);
        self.whites.insert(v);
        v
    }

    fn edge(&mut self, a: &str, b: &str) {
        let (a, b) = (self.names.lookup(a).unwrap(), self.names.lookup(b).unwrap());
        self.graph.add_edge(a, b).unwrap();
    }

    fn finish(self, family: Family, params: Vec<usize>, facts: Facts) -> Result<FamilyInstance> {
        let inst = FamilyInstance {
            rooted: RootedGraph::new(self.graph, self.whites)?,
            family,
            params,
            facts,
            names: self.names,
            positions: Some(self.pos),
        };
        inst.validate()?;
        Ok(inst)
    }
}

/// `G_t`: `t` white vertices of degree 6 on a `t`-gon around three rings of
/// black vertices of degree 4.
pub fn gen_gt(t: usize) -> Result<FamilyInstance> {
    if t < 7 {
        return invalid(format!("G_t needs t >= 7, got {t}"));
    }
    let mut b = Builder::default();
    let s = TAU / (3 * t) as f64;
    let at = |radius: f64, angle: f64| (radius * angle.cos(), radius * angle.sin());
    for i in 0..t {
        let phi = TAU * i as f64 / t as f64;
        b.vertex(format!("m{i}"), at(1.0, phi));
        b.vertex(format!("a{i}"), at(2.0, phi - s));
        b.vertex(format!("b{i}"), at(2.0, phi));
        b.vertex(format!("c{i}"), at(2.0, phi + s));
        b.white(format!("r{i}"), at(3.0, phi));
    }
    for i in 0..t {
        let p = (i + t - 1) % t;
        for (x, y) in [
            (format!("m{i}"), format!("m{p}")),
            (format!("m{p}"), format!("a{i}")),
            (format!("m{i}"), format!("b{i}")),
            (format!("a{i}"), format!("b{i}")),
            (format!("b{i}"), format!("c{i}")),
            (format!("a{i}"), format!("c{p}")),
            (format!("a{i}"), format!("r{i}")),
            (format!("b{i}"), format!("r{i}")),
            (format!("c{i}"), format!("r{i}")),
            (format!("c{p}"), format!("r{i}")),
            (format!("r{i}"), format!("r{p}")),
        ] {
            b.edge(&x, &y);
        }
    }
    let facts = Facts {
        white_count: t,
        black_count: 4 * t,
        white_degree: Some(6),
        black_degree: Some((4, 4)),
        kappa: 6,
    };
    b.finish(Family::Gt, vec![t], facts)
}

/// `F_l`: an `l`-row ladder strip of black vertices of degree at most 3
/// whose bottom row is split into groups of `l` columns, one white vertex
/// per group.
pub fn gen_fl(l: usize, whites: usize) -> Result<FamilyInstance> {
    if l < 4 || whites < l + 1 {
        return invalid(format!(
            "F_l needs l >= 4 and at least l + 1 whites, got l = {l}, {whites}"
        ));
    }
    let cols = whites * l;
    let single = |x: usize, y: usize| x == 0 || x == cols - 1 || y == l - 1;
    let left = |x: usize, y: usize| {
        if single(x, y) {
            format!("s{x}_{y}")
        } else {
            format!("a{x}_{y}")
        }
    };
    let right = |x: usize, y: usize| {
        if single(x, y) {
            format!("s{x}_{y}")
        } else {
            format!("b{x}_{y}")
        }
    };
    let mut b = Builder::default();
    for x in 0..cols {
        for y in 0..l {
            let (fx, fy) = (x as f64, y as f64 + 1.0);
            if single(x, y) {
                b.vertex(format!("s{x}_{y}"), (fx, fy));
            } else {
                b.vertex(format!("a{x}_{y}"), (fx - 0.2, fy));
                b.vertex(format!("b{x}_{y}"), (fx + 0.2, fy));
            }
        }
    }
    for i in 0..whites {
        b.white(
            format!("w{i}"),
            ((i * l) as f64 + (l - 1) as f64 / 2.0, 0.0),
        );
    }
    for y in 0..l {
        for x in 0..cols {
            if !single(x, y) {
                b.edge(&left(x, y), &right(x, y));
                b.edge(&right(x, y), &left(x, y + 1));
            }
            if x + 1 < cols {
                b.edge(&right(x, y), &left(x + 1, y));
            }
        }
        if y + 1 < l {
            for x in [0, cols - 1] {
                b.edge(&left(x, y), &left(x, y + 1));
            }
        }
    }
    for i in 0..whites {
        for x in i * l..(i + 1) * l {
            b.edge(&format!("w{i}"), &left(x, 0));
        }
    }
    let facts = Facts {
        white_count: whites,
        black_count: 2 * l + (cols - 2) * (2 * l - 1),
        white_degree: Some(l),
        black_degree: Some((2, 3)),
        kappa: l,
    };
    b.finish(Family::Fl, vec![l, whites], facts)
}

/// `H_l`: an `l` by `l(l+1)` grid of black vertices with `l + 1` white
/// vertices below, the `i`-th adjacent to the `i`-th group of `l` bottom-row
/// vertices.
///
/// For `l < 6` the connectivity fact is computed instead of asserted.
pub fn gen_hl(l: usize) -> Result<FamilyInstance> {
    if l < 2 {
        return invalid(format!("H_l needs l >= 2, got {l}"));
    }
    let cols = l * (l + 1);
    let mut b = Builder::default();
    for x in 0..cols {
        for y in 0..l {
            b.vertex(format!("g{x}_{y}"), (x as f64, y as f64 + 1.0));
        }
    }
    for i in 0..=l {
        b.white(
            format!("w{i}"),
            ((i * l) as f64 + (l - 1) as f64 / 2.0, 0.0),
        );
    }
    for x in 0..cols {
        for y in 0..l {
            if x + 1 < cols {
                b.edge(&format!("g{x}_{y}"), &format!("g{}_{y}", x + 1));
            }
            if y + 1 < l {
                b.edge(&format!("g{x}_{y}"), &format!("g{x}_{}", y + 1));
            }
        }
        b.edge(&format!("w{}", x / l), &format!("g{x}_0"));
    }
    let kappa = if l >= 6 {
        l
    } else {
        kappa_x(&RootedGraph::new(b.graph.clone(), b.whites.clone())?)
    };
    let facts = Facts {
        white_count: l + 1,
        black_count: l * l * (l + 1),
        white_degree: Some(l),
        black_degree: Some((2, 4)),
        kappa,
    };
    b.finish(Family::Hl, vec![l], facts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gt_counts_and_ring() {
        let g7 = gen_gt(7).unwrap();
        let g = g7.rooted.graph();
        assert_eq!(g.vertex_count(), 35);
        let ring = g.induced_subgraph(g7.rooted.roots()).unwrap();
        assert_eq!(ring.edge_count(), 7);
        assert!(ring.is_connected() && ring.vertices().all(|v| ring.degree(v) == 2));
        assert!(gen_gt(6).is_err());
    }

    #[test]
    fn fl_facts() {
        let f = gen_fl(4, 5).unwrap();
        assert_eq!(f.facts.kappa, 4);
        assert!(f
            .rooted
            .roots()
            .iter()
            .all(|&x| f.rooted.graph().degree(x) == 4));
        assert!(gen_fl(4, 4).is_err());
        assert!(gen_fl(3, 5).is_err());
    }

    #[test]
    fn small_hl_recomputes_kappa() {
        let h = gen_hl(3).unwrap();
        assert_eq!(h.rooted.graph().vertex_count(), 4 + 36);
        assert_eq!(h.facts.kappa, 3);
    }
}
