#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rooted_minors::generators::random_planar_instance;
use rooted_minors::minor::{Certificate, ContractionTrace};
use rooted_minors::{Edge, Graph, RootedGraph, VertexId, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph on `n` vertices.
pub fn gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::with_vertices(n);
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            if rng.gen_bool(p) {
                g.add_edge(VertexId(a), VertexId(b)).unwrap();
            }
        }
    }
    g
}

/// Random tree on `n` vertices plus independent extra edges.
pub fn connected_gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = gnp(rng, n, p);
    for v in 1..n as u32 {
        let u = rng.gen_range(0..v);
        g.ensure_edge(VertexId(u), VertexId(v)).unwrap();
    }
    g
}

pub fn random_roots(rng: &mut impl Rng, g: &Graph, min: usize) -> VertexSet {
    let n = g.vertex_count();
    let k = rng.gen_range(min.min(n)..=n);
    let mut vs: Vec<VertexId> = g.vertices().collect();
    vs.shuffle(rng);
    vs.into_iter().take(k).collect()
}

/// Random rooted graph with `2 <= |X| <= n` and `n` in `lo..=hi`.
pub fn random_rooted(rng: &mut impl Rng, lo: usize, hi: usize) -> RootedGraph {
    let n = rng.gen_range(lo..=hi);
    let p = rng.gen_range(0.2..0.8);
    let g = gnp(rng, n, p);
    let roots = random_roots(rng, &g, 2);
    RootedGraph::new(g, roots).unwrap()
}

/// The first `count` random planar instances with `kappa_x >= min_kappa`,
/// scanning seeds upward from `seed`.
pub fn planar_instances(
    count: usize,
    min_kappa: usize,
    sizes: std::ops::RangeInclusive<usize>,
    roots: std::ops::RangeInclusive<usize>,
    seed: u64,
) -> Vec<(u64, RootedGraph)> {
    let mut out = Vec::new();
    let mut s = seed;
    while out.len() < count {
        let mut r = rng(s);
        let n = r.gen_range(sizes.clone());
        let k = r.gen_range(*roots.start()..=(*roots.end()).min(n));
        let inst = random_planar_instance(n, k, s).unwrap();
        if inst.facts.kappa >= min_kappa {
            out.push((s, inst.rooted));
        }
        s += 1;
    }
    out
}

/// A certificate for a random rooted minor reached by random X-legal
/// contractions of `rg`.
pub fn random_certificate(rng: &mut impl Rng, rg: &RootedGraph, steps: usize) -> Certificate {
    let mut g = rg.graph().clone();
    let mut trace = Vec::new();
    for _ in 0..steps {
        let legal: Vec<Edge> = g
            .edges()
            .flat_map(|e| [e, e.reversed()])
            .filter(|e| !rg.is_root(e.b))
            .collect();
        let Some(&e) = legal.choose(rng) else { break };
        g = g.contract_edge(e.a, e.b).unwrap();
        trace.push(e);
    }
    let trace = ContractionTrace {
        initial: rg.graph().clone(),
        steps: trace,
        final_graph: g.clone(),
    };
    assert!(trace.is_sound(rg.roots()));
    let c = Certificate {
        host: rg.graph().clone(),
        roots: rg.roots().clone(),
        minor: g,
        bags: trace.bags(),
    };
    c.verify().unwrap();
    c
}

/// Random spanning tree of a connected graph by randomized search.
pub fn random_spanning_tree(rng: &mut impl Rng, g: &Graph) -> Graph {
    let vs: Vec<VertexId> = g.vertices().collect();
    let start = *vs.choose(rng).unwrap();
    let mut tree = Graph::from_parts(vs.iter().copied(), []).unwrap();
    let mut seen = VertexSet::from([start]);
    let mut frontier = vec![start];
    while let Some(i) = (!frontier.is_empty()).then(|| rng.gen_range(0..frontier.len())) {
        let v = frontier[i];
        let fresh: Vec<VertexId> = g.neighbors(v).filter(|w| !seen.contains(w)).collect();
        match fresh.choose(rng) {
            Some(&w) => {
                tree.add_edge(v, w).unwrap();
                seen.insert(w);
                frontier.push(w);
            }
            None => {
                frontier.swap_remove(i);
            }
        }
    }
    tree
}
