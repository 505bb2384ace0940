use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Facts, Family, FamilyInstance};
use crate::connectivity::{kappa_x, RootedGraph};
use crate::error::{invalid, Result};
use crate::graph::{cycle_graph, Graph, VertexId, VertexSet};
use crate::io::Names;

/// Random planar triangulation on `n` vertices, deterministic in `seed`.
///
/// Vertices are inserted into uniformly chosen faces; afterwards `2n`
/// random diagonal flips (each keeping every degree at least 3) break up the
/// separating triangles that stacking produces.
pub fn gen_random_planar(n: usize, seed: u64) -> Result<Graph> {
    if n < 4 {
        return invalid(format!("a triangulation needs n >= 4, got {n}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = cycle_graph(3);
    let v = |i: u32| VertexId(i);
    let mut faces: Vec<[VertexId; 3]> = vec![[v(0), v(1), v(2)], [v(0), v(1), v(2)]];
    for _ in 3..n {
        let p = g.add_vertex();
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        for w in [a, b, c] {
            g.add_edge(p, w)?;
        }
        faces.extend([[a, b, p], [b, c, p], [a, c, p]]);
    }
    for _ in 0..2 * n {
        let edges: Vec<_> = g.edges().collect();
        let e = edges[rng.gen_range(0..edges.len())];
        if g.degree(e.a) <= 3 || g.degree(e.b) <= 3 {
            continue;
        }
        let sides: Vec<usize> = (0..faces.len())
            .filter(|&i| faces[i].contains(&e.a) && faces[i].contains(&e.b))
            .collect();
        let third = |f: &[VertexId; 3]| *f.iter().find(|&&w| w != e.a && w != e.b).unwrap();
        let (w, z) = (third(&faces[sides[0]]), third(&faces[sides[1]]));
        if w == z || g.has_edge(w, z) {
            continue;
        }
        g.remove_edge(e.a, e.b)?;
        g.add_edge(w, z)?;
        faces[sides[0]] = [w, z, e.a];
        faces[sides[1]] = [w, z, e.b];
    }
    Ok(g)
}

/// Greedy root sampling: starting from a random vertex, repeatedly add the
/// vertex maximizing `kappa_x` of the enlarged set (ties by degree, then
/// random order).
pub fn sample_roots<R: Rng>(g: &Graph, k: usize, rng: &mut R) -> Result<VertexSet> {
    if k == 0 || k > g.vertex_count() {
        return invalid(format!(
            "cannot sample {k} roots from {} vertices",
            g.vertex_count()
        ));
    }
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.shuffle(rng);
    let mut roots = VertexSet::from([order[0]]);
    while roots.len() < k {
        let mut best: Option<((usize, usize), VertexId)> = None;
        for &v in &order {
            if roots.contains(&v) {
                continue;
            }
            let mut trial = roots.clone();
            trial.insert(v);
            let score = (kappa_x(&RootedGraph::new(g.clone(), trial)?), g.degree(v));
            if best.is_none_or(|(s, _)| score > s) {
                best = Some((score, v));
            }
        }
        roots.insert(best.unwrap().1);
    }
    Ok(roots)
}

/// Random triangulation with `k` greedily sampled roots; facts are computed.
pub fn random_planar_instance(n: usize, k: usize, seed: u64) -> Result<FamilyInstance> {
    let g = gen_random_planar(n, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let roots = sample_roots(&g, k, &mut rng)?;
    let rooted = RootedGraph::new(g, roots)?;
    let facts = Facts {
        white_count: k,
        black_count: n - k,
        white_degree: None,
        black_degree: None,
        kappa: kappa_x(&rooted),
    };
    let names = Names::numeric(rooted.graph());
    Ok(FamilyInstance {
        rooted,
        family: Family::RandomPlanar,
        params: vec![n, k, seed as usize],
        facts,
        names,
        positions: None,
    })
}

/// A 2-connected plane graph with its exterior cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneFixture {
    pub name: String,
    pub graph: Graph,
    pub exterior: Graph,
}

/// Wheel with `n` rim vertices `0..n` and hub `n`.
pub fn wheel(n: usize) -> Result<PlaneFixture> {
    if n < 3 {
        return invalid("a wheel needs at least 3 rim vertices");
    }
    let mut g = cycle_graph(n);
    let hub = g.add_vertex();
    for i in 0..n as u32 {
        g.add_edge(hub, VertexId(i))?;
    }
    Ok(PlaneFixture {
        name: format!("W{n}"),
        exterior: cycle_graph(n),
        graph: g,
    })
}

fn two_rings(n: usize, twisted: bool, name: String) -> Result<PlaneFixture> {
    if n < 3 {
        return invalid("rings need at least 3 vertices");
    }
    let m = n as u32;
    let mut edges = Vec::new();
    for i in 0..m {
        let j = (i + 1) % m;
        edges.extend([(i, j), (m + i, m + j), (i, m + i)]);
        if twisted {
            edges.push((i, m + j));
        }
    }
    Ok(PlaneFixture {
        name,
        graph: Graph::from_edges(2 * n, &edges)?,
        exterior: cycle_graph(n),
    })
}

/// Prism over an `n`-cycle: outer ring `0..n`, inner ring `n..2n`.
pub fn prism(n: usize) -> Result<PlaneFixture> {
    two_rings(n, false, format!("prism{n}"))
}

/// Antiprism over an `n`-cycle: outer ring `0..n`, inner ring `n..2n`.
pub fn antiprism(n: usize) -> Result<PlaneFixture> {
    two_rings(n, true, format!("antiprism{n}"))
}
