mod common;

use rand::seq::SliceRandom;
use rand::Rng;

use common::{gnp, random_rooted, rng};
use rooted_minors::connectivity::{
    clique_completion_reduce, complement_fragment, cross_separator, disjoint_paths, kappa_at_least,
    local_connectivity, min_x_separator, x_fragments, Fragment,
};
use rooted_minors::oracles::{kappa_x_brute, min_separating_set_brute};
use rooted_minors::{kappa_x, Graph, RootedGraph, Separator, VertexId, VertexSet};

fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let mut g = Graph::with_vertices(n);
    let mut bit = 0;
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            if mask & (1 << bit) != 0 {
                g.add_edge(VertexId(a), VertexId(b)).unwrap();
            }
            bit += 1;
        }
    }
    g
}

#[test]
fn kappa_matches_brute_force_on_every_graph_up_to_five_vertices() {
    let mut checked = 0;
    for n in 2..=5usize {
        for mask in 0..1u32 << (n * (n - 1) / 2) {
            let g = graph_from_mask(n, mask);
            for roots in 0..1u32 << n {
                if roots.count_ones() < 2 {
                    continue;
                }
                let x: VertexSet = (0..n as u32)
                    .filter(|i| roots & (1 << i) != 0)
                    .map(VertexId)
                    .collect();
                let rg = RootedGraph::new(g.clone(), x).unwrap();
                assert_eq!(
                    kappa_x(&rg),
                    kappa_x_brute(&rg).unwrap(),
                    "mask {mask}, roots {roots}"
                );
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 2 + 8 * 4 + 64 * 11 + 1024 * 26);
}

#[test]
fn kappa_at_least_agrees_with_kappa() {
    let mut r = rng(11);
    for _ in 0..300 {
        let rg = random_rooted(&mut r, 2, 9);
        let k = kappa_x(&rg);
        for t in 0..=k + 1 {
            assert_eq!(kappa_at_least(&rg, t), t <= k);
        }
    }
}

#[test]
fn menger_duality_for_nonadjacent_root_pairs() {
    let mut r = rng(12);
    for _ in 0..300 {
        let rg = random_rooted(&mut r, 3, 8);
        let g = rg.graph();
        for (a, b) in rg.nonadjacent_root_pairs() {
            let flow = local_connectivity(g, a, b).unwrap();
            assert_eq!(flow, min_separating_set_brute(g, a, b).unwrap());
            let paths = disjoint_paths(g, a, b).unwrap();
            assert_eq!(paths.len(), flow);
            let mut inner = VertexSet::new();
            for p in &paths {
                assert!(g.is_path(p) && p[0] == a && p[p.len() - 1] == b);
                for v in &p[1..p.len() - 1] {
                    assert!(inner.insert(*v), "paths share {v}");
                }
            }
        }
    }
}

#[test]
fn separator_exists_exactly_when_roots_are_not_a_clique() {
    let mut r = rng(13);
    for _ in 0..500 {
        let rg = random_rooted(&mut r, 2, 9);
        let complete = rg.graph().is_clique(rg.roots());
        let s = min_x_separator(&rg);
        assert_eq!(s.is_none(), complete);
        if let Some(s) = s {
            assert!(s.is_x_separator(&rg));
            assert_eq!(kappa_x(&rg), s.len().min(rg.roots().len() - 1));
        }
    }
}

/// Separators with at least one root-free component: the minimum one and
/// random vertex sets that happen to separate.
fn separators(r: &mut impl Rng, rg: &RootedGraph) -> Vec<Separator> {
    let mut out: Vec<Separator> = min_x_separator(rg).into_iter().collect();
    let g = rg.graph();
    let vs: Vec<VertexId> = g.vertices().collect();
    for _ in 0..6 {
        let k = r.gen_range(1..vs.len().max(2));
        let s: VertexSet = vs.choose_multiple(r, k).copied().collect();
        let comps = g.delete_vertices(&s).unwrap().components();
        if comps.len() >= 2 {
            let witnesses = (*comps[0].first().unwrap(), *comps[1].first().unwrap());
            out.push(Separator {
                vertices: s,
                witnesses,
            });
        }
    }
    out
}

#[test]
fn clique_completion_never_lowers_kappa() {
    let mut r = rng(14);
    let mut reductions = 0;
    for _ in 0..400 {
        let rg = random_rooted(&mut r, 4, 10);
        let before = kappa_x(&rg);
        for s in separators(&mut r, &rg) {
            let frags = x_fragments(&rg, &s).unwrap();
            let free: Vec<&Fragment> = frags.iter().filter(|f| !f.rooted).collect();
            let mut candidates: Vec<Fragment> = free.iter().map(|f| (*f).clone()).collect();
            if free.len() > 1 && frags.len() > free.len() {
                candidates.push(Fragment::union(free.iter().copied()).unwrap());
            }
            for f in candidates {
                if f.complement(rg.graph()).is_empty() {
                    continue;
                }
                let reduced = clique_completion_reduce(&rg, &f).unwrap();
                assert!(kappa_x(&reduced) >= before);
                assert!(reduced.graph().is_clique(&s.vertices));
                reductions += 1;
            }
        }
    }
    assert!(reductions >= 100, "only {reductions} reductions exercised");
}

fn random_fragment(r: &mut impl Rng, rg: &RootedGraph, s: &Separator) -> Option<Fragment> {
    let frags = x_fragments(rg, s).unwrap();
    let take = r.gen_range(1..frags.len());
    let chosen: Vec<&Fragment> = frags.choose_multiple(r, take).collect();
    Fragment::union(chosen).ok()
}

#[test]
fn cross_separator_identity_and_separation() {
    let mut r = rng(15);
    let mut meets = 0;
    let mut configs = 0;
    while configs < 500 {
        let n = r.gen_range(5..=10);
        let p = r.gen_range(0.2..0.6);
        let g = gnp(&mut r, n, p);
        let rg = RootedGraph::spanning(g.clone()).unwrap();
        let seps = separators(&mut r, &rg);
        if seps.len() < 2 {
            continue;
        }
        let (s, sp) = (&seps[seps.len() - 2], &seps[seps.len() - 1]);
        let (Some(f), Some(fp)) = (
            random_fragment(&mut r, &rg, s),
            random_fragment(&mut r, &rg, sp),
        ) else {
            continue;
        };
        let (fb, fpb) = (complement_fragment(&rg, &f), complement_fragment(&rg, &fp));
        let t = cross_separator(&g, &f, &fp).unwrap();
        let tb = cross_separator(&g, &fb, &fpb).unwrap();
        assert_eq!(t.len() + tb.len(), s.len() + sp.len());
        let inside: VertexSet = f.vertices.intersection(&fp.vertices).copied().collect();
        if !inside.is_empty() {
            assert!(g.neighborhood(&inside).is_subset(&t));
            assert!(inside.len() + t.len() < g.vertex_count());
            meets += 1;
        }
        configs += 1;
    }
    assert!(meets > 50, "only {meets} intersecting configurations");
}
