//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Counts, seeds and time budgets are fixed below.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;

use common::{planar_instances, random_certificate, random_rooted, random_spanning_tree, rng};
use rooted_minors::connectivity::{is_k_connected, kappa_x};
use rooted_minors::generators::{antiprism, gen_fl, gen_gt, gen_hl, prism, wheel, PlaneFixture};
use rooted_minors::lifting::lift_tree;
use rooted_minors::minor::{
    four_connected_x_minor, is_x_legal, kappa_drop_witness, topological_x_minor, TopologicalOrder,
};
use rooted_minors::oracles::{
    bridges, exists_x_spanning_cycle, exists_x_spanning_path, find_tutte_path_brute, kappa_x_brute,
    min_x_separators_brute, tutte_paths_brute,
};
use rooted_minors::pipeline::{kappa_three, Artifact, Options, Variant};
use rooted_minors::{Edge, Graph, RootedGraph, VertexId, VertexSet};

const KAPPA_BUDGET: Duration = Duration::from_secs(5);
const ORACLE_BUDGET: Duration = Duration::from_secs(60);
const MINOR_BUDGET: Duration = Duration::from_secs(120);
const TUTTE_BUDGET: Duration = Duration::from_secs(120);

const ORACLE_GRAPHS: usize = 500;
const DICHOTOMY_GRAPHS: usize = 300;
const PLANAR_FOUR: usize = 50;
const TOPOLOGICAL: usize = 50;
const PIPELINE: usize = 30;
const LIFTED_TREES: usize = 100;
const TUTTE_PATHS: usize = 100;
const KAPPA_FOUR: usize = 30;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= budget, || format!("took {t:.2?}, budget {budget:?}"))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for t in 7..=9 {
        let k = kappa_x(&gen_gt(t).map_err(|e| e.to_string())?.rooted);
        ensure(k == 6, || format!("G_{t}: kappa {k}"))?;
    }
    for l in [4, 5] {
        let k = kappa_x(&gen_fl(l, l + 1).map_err(|e| e.to_string())?.rooted);
        ensure(k == l, || format!("F_{l}: kappa {k}"))?;
    }
    for l in [4, 6] {
        let k = kappa_x(&gen_hl(l).map_err(|e| e.to_string())?.rooted);
        ensure(k == l, || format!("H_{l}: kappa {k}"))?;
    }
    within(start, KAPPA_BUDGET)?;
    Ok(format!(
        "G_7..G_9 = 6, F_4 = 4, F_5 = 5, H_4 = 4, H_6 = 6 in {:.2?}",
        start.elapsed()
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut r = rng(2);
    for i in 0..ORACLE_GRAPHS {
        let rg = random_rooted(&mut r, 2, 8);
        let (fast, slow) = (kappa_x(&rg), kappa_x_brute(&rg).map_err(|e| e.to_string())?);
        ensure(fast == slow, || {
            format!("graph {i}: kappa_x {fast}, brute {slow}")
        })?;
    }
    within(start, ORACLE_BUDGET)?;
    Ok(format!(
        "{ORACLE_GRAPHS} graphs agree in {:.2?}",
        start.elapsed()
    ))
}

fn criterion_3() -> Outcome {
    let mut r = rng(3);
    let (mut edges, mut drops) = (0, 0);
    for i in 0..DICHOTOMY_GRAPHS {
        let rg = random_rooted(&mut r, 3, 10);
        let before = kappa_x(&rg);
        let minimum = min_x_separators_brute(&rg).map_err(|e| e.to_string())?;
        let g = rg.graph();
        for e in g.edges().flat_map(|e| [e, e.reversed()]) {
            if !is_x_legal(&rg, e.a, e.b).unwrap() {
                continue;
            }
            edges += 1;
            let after = kappa_x(&rg.with_graph(g.contract_edge(e.a, e.b).unwrap()).unwrap());
            ensure(after + 1 >= before, || {
                format!("graph {i}, ({},{}): {before} -> {after}", e.a, e.b)
            })?;
            let witness = kappa_drop_witness(&rg, e.a, e.b).map_err(|e| e.to_string())?;
            let enumerated = minimum
                .iter()
                .any(|s| s.len() == before && s.contains(&e.a) && s.contains(&e.b));
            let dropped = after + 1 == before;
            drops += usize::from(dropped);
            ensure(
                dropped == witness.is_some() && dropped == enumerated,
                || {
                    format!(
                    "graph {i}, ({},{}): dropped {dropped}, witness {}, enumerated {enumerated}",
                    e.a,
                    e.b,
                    witness.is_some()
                )
                },
            )?;
            if let Some(s) = witness {
                ensure(s.len() == before && s.is_x_separator(&rg), || {
                    format!("graph {i}: bad witness")
                })?;
            }
        }
    }
    Ok(format!(
        "{DICHOTOMY_GRAPHS} graphs, {edges} legal edges, {drops} drops, 0 counterexamples"
    ))
}

fn check_four_connected(name: &str, rg: &RootedGraph) -> Result<(), String> {
    let (c, trace) = four_connected_x_minor(rg).map_err(|e| format!("{name}: {e}"))?;
    c.verify().map_err(|v| format!("{name}: certificate {v}"))?;
    ensure(is_k_connected(&c.minor, 4), || {
        format!("{name}: minor not 4-connected")
    })?;
    ensure(rg.roots().iter().all(|x| c.minor.has_vertex(*x)), || {
        format!("{name}: root lost")
    })?;
    let replayed = trace
        .replay(rg.roots())
        .map_err(|e| format!("{name}: {e}"))?;
    ensure(replayed == c.minor, || format!("{name}: replay differs"))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let families = [
        ("F_4", gen_fl(4, 5)),
        ("F_5", gen_fl(5, 6)),
        ("H_4", gen_hl(4)),
        ("H_6", gen_hl(6)),
    ];
    for (name, inst) in families {
        check_four_connected(name, &inst.map_err(|e| e.to_string())?.rooted)?;
    }
    for (seed, rg) in planar_instances(PLANAR_FOUR, 4, 12..=30, 5..=8, 4_000) {
        check_four_connected(&format!("planar seed {seed}"), &rg)?;
    }
    within(start, MINOR_BUDGET)?;
    Ok(format!(
        "4 family members and {PLANAR_FOUR} triangulations in {:.2?}",
        start.elapsed()
    ))
}

fn criterion_5() -> Outcome {
    for (seed, rg) in planar_instances(TOPOLOGICAL, 3, 6..=20, 4..=7, 5_000) {
        let (m, emb) = topological_x_minor(&rg, TopologicalOrder::Three)
            .map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(is_k_connected(&m, 3), || {
            format!("seed {seed}: minor not 3-connected")
        })?;
        ensure(emb.minor == m, || {
            format!("seed {seed}: embedding minor differs")
        })?;
        emb.verify(rg.graph())
            .map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(rg.roots().iter().all(|x| m.has_vertex(*x)), || {
            format!("seed {seed}: root lost")
        })?;
    }
    Ok(format!(
        "{TOPOLOGICAL} instances, 3-connected with valid disjoint-path embeddings"
    ))
}

fn root_edge(rg: &RootedGraph) -> Option<Edge> {
    rg.graph()
        .edges()
        .find(|e| rg.is_root(e.a) && rg.is_root(e.b))
}

fn criterion_6() -> Outcome {
    let mut done = 0;
    let mut seed = 6_000;
    while done < PIPELINE {
        let batch = planar_instances(1, 3, 6..=12, 4..=7, seed);
        let (s, rg) = batch.into_iter().next().unwrap();
        seed = s + 1;
        let Some(e) = root_edge(&rg) else { continue };
        let opts = Options {
            ends: Some((e.a, e.b)),
            ..Options::default()
        };
        let run = kappa_three(&rg, Variant::I, &opts);
        let steps = || {
            format!(
                "seed {s}: {:?}",
                run.steps
                    .iter()
                    .map(|st| (st.name, st.outcome, &st.detail))
                    .collect::<Vec<_>>()
            )
        };
        ensure(run.passed(), steps)?;
        let Some(Artifact::Tree(t)) = &run.artifact else {
            return Err(steps());
        };
        ensure(
            t.tree.max_degree() <= 3 && t.is_leaf(e.a) && t.is_leaf(e.b),
            steps,
        )?;
        done += 1;
    }
    Ok(format!(
        "{PIPELINE} triangulations yield X-spanning 3-trees with the root edge ends as leaves"
    ))
}

fn criterion_7() -> Outcome {
    let mut r = rng(7);
    let mut tight = 0;
    for i in 0..LIFTED_TREES {
        let n = r.gen_range(5..=14);
        let p = r.gen_range(0.15..0.5);
        let g = common::connected_gnp(&mut r, n, p);
        let roots = common::random_roots(&mut r, &g, 2);
        let rg = RootedGraph::new(g, roots).unwrap();
        let steps = r.gen_range(0..n);
        let c = random_certificate(&mut r, &rg, steps);
        let t = random_spanning_tree(&mut r, &c.minor);
        let bound = t.max_degree().max(1);
        let lifted = lift_tree(&c, &t, bound).map_err(|e| format!("instance {i}: {e}"))?;
        lifted
            .verify(rg.graph(), rg.roots())
            .map_err(|d| format!("instance {i}: {d}"))?;
        let d = lifted.tree.max_degree();
        ensure(d <= bound + 1, || {
            format!("instance {i}: degree {d} > {bound} + 1")
        })?;
        tight += usize::from(d == bound + 1);
    }
    ensure(tight > 0, || "no instance reaches bound + 1".into())?;
    Ok(format!(
        "{LIFTED_TREES} lifts within bound + 1, {tight} reach it"
    ))
}

fn fixtures() -> Vec<PlaneFixture> {
    let mut out: Vec<PlaneFixture> = (4..=6).map(|n| wheel(n).unwrap()).collect();
    for n in 3..=5 {
        out.push(prism(n).unwrap());
        out.push(antiprism(n).unwrap());
    }
    out
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for f in fixtures() {
        let g = &f.graph;
        for e in f.exterior.edges() {
            for y in g.vertices() {
                for z in g.vertices().filter(|&z| z != y) {
                    let found = find_tutte_path_brute(g, y, z, e, Some(&f.exterior))
                        .map_err(|e| e.to_string())?;
                    ensure(found.is_some(), || {
                        format!("{}: no path {y} -> {z} through {e}", f.name)
                    })?;
                    cases += 1;
                }
            }
        }
    }
    within(start, TUTTE_BUDGET)?;
    Ok(format!(
        "{cases} (y, z, e) choices on 9 fixtures in {:.2?}",
        start.elapsed()
    ))
}

fn criterion_9() -> Outcome {
    let mut r = rng(9);
    let mut checked = 0;
    let instances = planar_instances(40, 4, 7..=12, 5..=7, 9_000);
    'outer: for (seed, rg) in instances {
        let g = rg.graph();
        ensure(is_k_connected(g, 2), || {
            format!("seed {seed}: not 2-connected")
        })?;
        let mut vs: Vec<VertexId> = g.vertices().collect();
        vs.shuffle(&mut r);
        let paths = tutte_paths_brute(g, vs[0], vs[1], None, 5).map_err(|e| e.to_string())?;
        for q in paths {
            let on: VertexSet = q.iter().copied().collect();
            if !rg.roots().is_subset(&on) {
                let d = bridges(g, &Graph::path_subgraph(&q, false).unwrap()).unwrap();
                let holds = d
                    .bridges
                    .iter()
                    .any(|b| rg.roots().is_subset(&b.vertices()));
                let meet = rg.roots().intersection(&on).count();
                ensure(holds && meet <= 3, || {
                    format!("seed {seed}: path {q:?} violates the bridge law")
                })?;
            }
            checked += 1;
            if checked == TUTTE_PATHS {
                break 'outer;
            }
        }
    }
    ensure(checked == TUTTE_PATHS, || {
        format!("only {checked} paths found")
    })?;
    Ok(format!("{TUTTE_PATHS} Tutte paths, 0 violations"))
}

fn criterion_10() -> Outcome {
    let mut r = rng(10);
    let (mut paths, mut cycles, mut outside) = (0, 0, 0);
    for (seed, rg) in planar_instances(KAPPA_FOUR, 4, 7..=12, 5..=7, 10_000) {
        let g = rg.graph();
        let roots: Vec<VertexId> = rg.roots().iter().copied().collect();
        let root_edges: Vec<Edge> = g
            .edges()
            .filter(|e| rg.is_root(e.a) && rg.is_root(e.b))
            .collect();
        for (i, &x1) in roots.iter().enumerate() {
            for &x2 in &roots[i + 1..] {
                let forced: Vec<Edge> = root_edges
                    .iter()
                    .filter(|e| !(e.contains(x1) && e.contains(x2)))
                    .take(1)
                    .copied()
                    .collect();
                let p = exists_x_spanning_path(&rg, x1, x2, &forced).map_err(|e| e.to_string())?;
                ensure(p.is_some(), || {
                    format!("seed {seed}: no path {x1} -> {x2} forcing {forced:?}")
                })?;
                paths += 1;
            }
        }
        let others: Vec<VertexId> = g.vertices().filter(|v| !rg.is_root(*v)).collect();
        let mut avoids: Vec<VertexSet> = vec![VertexSet::new(), VertexSet::from([roots[0]])];
        avoids.push(roots[..2].iter().copied().collect());
        if let Some(&o) = others.choose(&mut r) {
            avoids.push(VertexSet::from([o]));
            avoids.push(VertexSet::from([o, roots[1]]));
        }
        if others.len() >= 2 {
            avoids.push(others.choose_multiple(&mut r, 2).copied().collect());
        }
        for y in avoids {
            let c = exists_x_spanning_cycle(&rg, &y).map_err(|e| e.to_string())?;
            ensure(c.is_some(), || {
                format!("seed {seed}: no cycle avoiding {y:?}")
            })?;
            cycles += 1;
            outside += usize::from(!y.is_subset(rg.roots()));
        }
    }
    ensure(outside > 0, || "no avoided set outside the roots".into())?;
    Ok(format!(
        "{KAPPA_FOUR} instances: {paths} paths, {cycles} cycles ({outside} with Y not inside X)"
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("kappa regression on the extremal families", criterion_1),
        ("kappa_x agrees with the brute-force oracle", criterion_2),
        (
            "contraction drops kappa by at most one, exactly at witnesses",
            criterion_3,
        ),
        (
            "4-connected rooted minors with valid certificates",
            criterion_4,
        ),
        ("3-connected topological rooted minors", criterion_5),
        ("spanning 3-tree pipeline with leaf pair", criterion_6),
        ("lifted tree degree at most bound + 1", criterion_7),
        (
            "exterior-cycle Tutte paths on small plane graphs",
            criterion_8,
        ),
        ("roots relative to Tutte paths", criterion_9),
        ("spanning path and cycle oracles", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(d) => println!("criterion {}: PASS {name}: {d}", i + 1),
            Err(d) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {d}", i + 1);
            }
        }
    }
    println!("acceptance: {} of 10 criteria pass", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
