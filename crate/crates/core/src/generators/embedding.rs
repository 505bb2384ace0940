//! Face tracing for straight-line drawings.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{Graph, VertexId, VertexSet};

pub type Point = (f64, f64);

/// Faces of the rotation system induced by vertex positions, each listed as
/// its boundary walk.
pub fn faces(g: &Graph, pos: &BTreeMap<VertexId, Point>) -> Vec<Vec<VertexId>> {
    let rotation: BTreeMap<VertexId, Vec<VertexId>> = g
        .vertices()
        .map(|v| {
            let (x, y) = pos[&v];
            let mut around: Vec<VertexId> = g.neighbors(v).collect();
            around.sort_by(|a, b| {
                let ta = (pos[a].1 - y).atan2(pos[a].0 - x);
                let tb = (pos[b].1 - y).atan2(pos[b].0 - x);
                ta.total_cmp(&tb)
            });
            (v, around)
        })
        .collect();
    let mut unused: BTreeSet<(VertexId, VertexId)> =
        g.edges().flat_map(|e| [(e.a, e.b), (e.b, e.a)]).collect();
    let mut out = Vec::new();
    while let Some(&start) = unused.iter().next() {
        let mut face = Vec::new();
        let mut dart = start;
        loop {
            unused.remove(&dart);
            face.push(dart.0);
            let (u, v) = dart;
            let around = &rotation[&v];
            let i = around.iter().position(|&w| w == u).unwrap();
            let next = around[(i + around.len() - 1) % around.len()];
            dart = (v, next);
            if dart == start {
                break;
            }
        }
        out.push(face);
    }
    out
}

/// Euler check `V - E + F = 1 + C` for the drawing's rotation system, which
/// holds exactly when the rotation system is a plane embedding.
pub fn is_plane(g: &Graph, pos: &BTreeMap<VertexId, Point>) -> bool {
    let isolated = g.vertices().filter(|&v| g.degree(v) == 0).count();
    let f = faces(g, pos).len() + isolated;
    let c = g.components().len();
    g.vertex_count() + f == g.edge_count() + 1 + c
}

/// Whether some face boundary contains every vertex of `s`.
pub fn share_face(g: &Graph, pos: &BTreeMap<VertexId, Point>, s: &VertexSet) -> bool {
    faces(g, pos)
        .iter()
        .any(|f| s.iter().all(|v| f.contains(v)))
}
